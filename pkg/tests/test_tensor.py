import random
from math import comb

import pytest

from symkernel.algebra import AlgebraMap, f4, gaussian_integers, random_element, truncated
from symkernel.errors import NotInvariantError, NotInvertibleError, ShapeError
from symkernel.rings import QQ, ZZ
from symkernel.tensor import (
    EmbeddingKind,
    GroupEmbedding,
    NestedSymTensor,
    SymTensor,
    TensorElement,
    elem_sym,
    evaluate_elementary,
    express_in_elementary,
    generated_subalgebra,
    invariant_basis,
    is_partition_basis,
    pure,
    random_invariant,
    sigma_map,
    tau_map,
    tensor_power_map,
    typed_sym,
)
from symkernel.tensor.element import TypeVector


def test_elementary_tensors_term_by_term():

    B = gaussian_integers()
    one, b = B.one, B.basis(1)
    rho1 = pure([b, one, one]) + pure([one, b, one]) + pure([one, one, b])
    rho2 = pure([b, b, one]) + pure([b, one, b]) + pure([one, b, b])

    assert elem_sym(b, 0, 3).to_tensor() == TensorElement.one(B, 3)
    assert elem_sym(b, 1, 3).to_tensor() == rho1
    assert elem_sym(b, 2, 3).to_tensor() == rho2
    assert elem_sym(b, 3, 3).to_tensor() == pure([b, b, b])


def test_elem_sym_out_of_range():

    B = gaussian_integers()
    with pytest.raises(ShapeError):
        elem_sym(B.basis(1), 4, 3)


def test_type_vector_weight():

    assert TypeVector(3, (1, 2)).weight == 3
    with pytest.raises(ShapeError):
        TypeVector(3, (2, 2))
    with pytest.raises(ShapeError):
        TypeVector(3, (-1,))


@pytest.mark.parametrize("algebra", [truncated(ZZ, 3), gaussian_integers()])
def test_product_identities_at_three(algebra):

    rng = random.Random(7)
    for _ in range(5):
        x, y = random_element(algebra, rng), random_element(algebra, rng)
        assert elem_sym(x, 1, 3) * elem_sym(y, 1, 3) == (
            elem_sym(x * y, 1, 3) + typed_sym((1, 1), [x, y], 3)
        )
        assert elem_sym(x, 1, 3) * elem_sym(y, 2, 3) == (
            typed_sym((1, 2), [x, y], 3) + typed_sym((1, 1), [x * y, y], 3)
        )


def test_invariants_are_a_subring():

    B = gaussian_integers()
    rng = random.Random(3)
    s, t = random_invariant(B, 3, rng), random_invariant(B, 3, rng)
    product = s.to_tensor() * t.to_tensor()

    assert product.is_invariant()
    assert SymTensor.from_tensor(product) == s * t


def test_from_tensor_rejects_non_invariant():

    B = gaussian_integers()
    t = pure([B.basis(1), B.one])
    assert not t.is_invariant()
    with pytest.raises(NotInvariantError):
        SymTensor.from_tensor(t)


@pytest.mark.parametrize("algebra", [gaussian_integers(), truncated(ZZ, 3)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_invariant_basis_counts(algebra, n):

    basis = invariant_basis(algebra, n)
    r = algebra.rank

    assert len(basis) == comb(n + r - 1, r - 1)
    assert is_partition_basis(basis)


def test_f4_cube_needs_more_than_one_family():

    B, n = f4(), 3
    elements = [B.element([a, b]) for a in range(2) for b in range(2)]

    assert len(invariant_basis(B, n)) == 4
    for k in range(1, n + 1):
        assert generated_subalgebra([elem_sym(b, k, n) for b in elements]).is_proper
    with pytest.raises(NotInvertibleError):
        express_in_elementary(elem_sym(B.basis(1), 2, n), rho1_only=True)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_express_round_trip(n):

    for algebra in (gaussian_integers(), truncated(ZZ, 3)):
        for t in invariant_basis(algebra, n):
            assert evaluate_elementary(express_in_elementary(t)) == t


def test_express_round_trip_rho1_only_over_rationals():

    B = gaussian_integers(QQ)
    t = random_invariant(B, 2, random.Random(11))
    expr = express_in_elementary(t, rho1_only=True)

    assert evaluate_elementary(expr) == t


@pytest.mark.parametrize(
    "kind, sizes",
    [
        (EmbeddingKind.PRODUCT, (2, 3)),
        (EmbeddingKind.GRID, (2, 3)),
        (EmbeddingKind.WREATH, (2, 2)),
    ],
)
def test_group_embeddings(kind, sizes):

    assert GroupEmbedding(kind, sizes).verify().ok


def test_grid_embedding_needs_two_sizes():

    with pytest.raises(ShapeError):
        GroupEmbedding(EmbeddingKind.GRID, (1, 2, 3))


def test_sigma_keeps_the_tensor():

    B = gaussian_integers()
    rng = random.Random(5)
    s, t = random_invariant(B, 3, rng), random_invariant(B, 3, rng)

    assert sigma_map(t, (1, 2)).to_tensor() == t.to_tensor()
    assert sigma_map(s * t, (1, 2)) == sigma_map(s, (1, 2)) * sigma_map(t, (1, 2))
    with pytest.raises(ShapeError):
        sigma_map(t, (1, 1))


def test_tau_keeps_the_tensor():

    B = gaussian_integers()
    t = random_invariant(B, 4, random.Random(9))
    nested = tau_map(t, 2, 2)

    assert nested.to_tensor() == t.to_tensor()
    assert NestedSymTensor.read(t.to_tensor(), 2, 2) == nested
    with pytest.raises(ShapeError):
        tau_map(t, 3, 2)


def test_tensor_power_of_identity():

    B = gaussian_integers()
    t = random_invariant(B, 2, random.Random(1)).to_tensor()

    assert tensor_power_map(AlgebraMap.identity(B), t) == t
