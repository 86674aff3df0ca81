import random
from pathlib import Path

import pytest

from symkernel.codec import decode_morphism, encode_morphism, load_json
from symkernel.errors import NegativeCoefficientError, PartitionError, ShapeError
from symkernel.multivalued import (
    FinSet,
    LawMode,
    LinearMorphism,
    MultiMorphism,
    Multiset,
    check_correspondence,
    check_degrees,
    check_linear_extension,
    check_transfer,
    corr_to_mv,
    cyclic,
    decompose_hom,
    degree,
    generators,
    homogeneous_degree,
    homogeneous_parts,
    identity,
    is_homogeneous,
    morphisms,
    multisets,
    mv_add,
    mv_compose,
    mv_tensor,
    mv_to_corr,
    relabel,
    transfer,
    verify_category_laws,
)
from symkernel.rings import ZZ

# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"

X = FinSet(["x1", "x2"])
Y = FinSet(["y1", "y2"])


def sample() -> MultiMorphism:

    return decode_morphism(load_json(RESOURCES / "sample_morphism.json"))


def test_sample_morphism():

    alpha = sample()

    assert alpha("x1") == Multiset(Y, {"y1": 2})
    assert alpha("x2") == Multiset.of(Y, ["y2", "y1"])
    assert degree(alpha) == {"x1": 2, "x2": 2}
    assert homogeneous_degree(alpha) == 2
    assert decode_morphism(encode_morphism(alpha)) == alpha


def test_multiset_validation():

    with pytest.raises(NegativeCoefficientError):
        Multiset(Y, {"y1": -1})
    with pytest.raises(ShapeError):
        Multiset(Y, {"z": 1})
    with pytest.raises(ShapeError):
        FinSet(["a", "a"])


def test_composition_counts_multiplicity():

    alpha = sample()
    Z = FinSet(["z"])
    beta = MultiMorphism.from_counts(Y, Z, {"y1": {"z": 3}, "y2": {"z": 1}})
    composite = mv_compose(beta, alpha)

    assert composite("x1") == Multiset(Z, {"z": 6})
    assert composite("x2") == Multiset(Z, {"z": 4})
    with pytest.raises(ShapeError):
        mv_compose(alpha, MultiMorphism(X, Z))


def test_identity_and_addition():

    alpha = sample()

    assert mv_compose(identity(Y), alpha) == alpha
    assert mv_compose(alpha, identity(X)) == alpha
    assert mv_add(alpha, MultiMorphism(X, Y)) == alpha
    assert degree(mv_add(alpha, alpha)) == {"x1": 4, "x2": 4}


def test_tensor_multiplies_degrees():

    alpha = sample()
    product = mv_tensor(alpha, identity(X))

    assert len(product.source) == 4
    assert homogeneous_degree(product) == 2


def test_homogeneous_parts():

    alpha = MultiMorphism.from_counts(X, Y, {"x1": {"y1": 1}, "x2": {"y1": 1, "y2": 2}})
    parts = homogeneous_parts(alpha)

    assert not is_homogeneous(alpha)
    assert homogeneous_degree(alpha) is None
    assert sorted(parts) == [1, 3]
    assert all(is_homogeneous(part, d) for d, part in parts.items())
    assert len(homogeneous_parts(MultiMorphism.from_counts(FinSet(["x"]), Y, {}))) == 1


def test_enumeration_sizes():

    assert len(multisets(Y, 2)) == 6
    assert len(list(morphisms(X, Y, 1))) == 9
    assert len(generators(X, Y)) == 5


def test_correspondence_inverse():

    alpha = sample()
    corr = mv_to_corr(alpha)

    assert corr.entry("x1", "y1") == ZZ(2)
    assert corr_to_mv(corr) == alpha
    with pytest.raises(NegativeCoefficientError):
        corr_to_mv(LinearMorphism(X, Y, ZZ, {("x1", "y1"): -1}))


def test_transfer_sums_in_the_group():

    group = cyclic(3)
    result = transfer(group, sample(), {"y1": 1, "y2": 2})

    assert result == {"x1": 2, "x2": 0}
    with pytest.raises(ShapeError):
        transfer(group, sample(), {"y1": 1})


def test_hom_decomposition():

    source_parts = [FinSet(["x1"]), FinSet(["x2"])]
    target_parts = [FinSet(["y1"]), FinSet(["y2"])]
    decomposition = decompose_hom(source_parts, target_parts, X, Y)
    blocks = decomposition.split(sample())

    assert blocks[(1, 1)]("x2") == Multiset(target_parts[1], {"y2": 1})
    assert decomposition.merge(blocks) == sample()
    with pytest.raises(PartitionError):
        decompose_hom([FinSet(["x1"])], target_parts, X, Y)
    with pytest.raises(PartitionError):
        decompose_hom([FinSet(["x1"]), FinSet(["x1", "x2"])], target_parts)


def test_tensor_reassociation():

    Y2 = FinSet(["y0", "y1"])
    a = MultiMorphism(FinSet(["x"]), Y2, {"x": Multiset(Y2, {"y0": 1})})
    left = mv_tensor(mv_tensor(a, a), a)
    right = mv_tensor(a, mv_tensor(a, a))
    moved = relabel(
        left,
        right.source,
        right.target,
        lambda x: ((x[0], x[1][0]), x[1][1]),
        lambda y: (y[0][0], (y[0][1], y[1])),
    )

    assert moved == right
    assert moved(("x", ("x", "x"))).items == ((("y0", ("y0", "y0")), 1),)


@pytest.mark.parametrize("mode", [LawMode.EXHAUSTIVE, LawMode.GENERATORS, LawMode.RANDOM])
def test_category_laws(mode):

    report = verify_category_laws(2, 1, mode, seed=7, samples=50)

    assert report.ok, report.to_dict()
    assert report.to_dict()["mode"] == mode.value


def test_random_laws_are_seeded():

    first = verify_category_laws(3, 2, LawMode.RANDOM, seed=11, samples=20)
    second = verify_category_laws(3, 2, LawMode.RANDOM, seed=11, samples=20)

    assert first.to_dict() == second.to_dict()
    assert first.to_dict()["seed"] == 11


def test_comparisons():

    assert check_degrees(2, 2).ok
    assert check_correspondence(1, 2).ok
    assert check_transfer(1, 2).ok
    assert check_linear_extension(random.Random(3), samples=5).ok
