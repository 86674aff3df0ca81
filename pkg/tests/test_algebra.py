import random
from pathlib import Path

import pytest

from symkernel.algebra import (
    AlgebraMap,
    Tower,
    base_change_algebra,
    base_change_triple,
    f4,
    free_rank,
    gaussian_integers,
    make_algebra,
    make_triple,
    monogenic,
    pure_tensor,
    quadratic,
    random_element,
    regular_triple,
    tensor_algebra,
    truncated,
)
from symkernel.codec import decode_algebra, load_json
from symkernel.errors import AlgebraAxiomError, MembershipError, RingMismatchError, ShapeError
from symkernel.rings import GF, QQ, ZZ, RingHom


# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"


def test_gaussian_integers():

    B = gaussian_integers()
    i = B("i")
    assert i * i == B(-1)
    assert B.unit_index == 0


def test_f4_is_a_field_of_order_four():

    B = f4()
    w = B("w")
    assert w * w == w + B.one
    assert w**3 == B.one


def test_monogenic_reduction():

    # x^3 = 2x + 1
    B = monogenic(ZZ, [-1, -2, 0])
    x = B("x")
    assert x**3 == x * 2 + B.one


def test_truncated_is_nilpotent():

    B = truncated(QQ, 3)
    x = B("x")
    assert (x * x).coords == (QQ(0), QQ(0), QQ(1))
    assert (x**3).is_zero()


def test_sample_algebra_file_validates():

    B = decode_algebra(load_json(RESOURCES / "sample_algebra.json"))
    assert B == gaussian_integers()


def test_non_commutative_table_names_indices():

    with pytest.raises(AlgebraAxiomError) as info:
        decode_algebra(load_json(RESOURCES / "noncommutative_algebra.json"))
    assert info.value.axiom == "non-commutative"
    assert info.value.indices == (1, 2, 2)


def test_bad_unit_rejected():

    table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    with pytest.raises(AlgebraAxiomError) as info:
        make_algebra(ZZ, 2, table, [0, 1])
    assert info.value.axiom == "bad unit"


def test_table_shape_checked():

    with pytest.raises(ShapeError):
        make_algebra(ZZ, 2, [[[1, 0]]], [1, 0])


def test_regular_triple_matches_multiplication():

    B = gaussian_integers()
    T = regular_triple(B)
    b = B.element([2, 3])
    M = T.mult_matrix(b)
    assert M == [[ZZ(2), ZZ(-3)], [ZZ(3), ZZ(2)]]


def test_triple_action_must_be_multiplicative():

    B = gaussian_integers()
    one = [[1, 0], [0, 1]]
    with pytest.raises(AlgebraAxiomError):
        make_triple(B, [one, one])


def test_free_rank_idempotents():

    B = free_rank(GF(3), 3)
    e = B.basis_elements()
    assert e[0] * e[0] == e[0]
    assert (e[0] * e[1]).is_zero()
    assert sum(e[1:], e[0]) == B.one


def test_tower_flatten_and_lift():

    lower = quadratic(QQ, 2)
    upper = quadratic(lower, 3, "t")
    tower = Tower(lower, upper)
    rng = random.Random(1)
    for _ in range(5):
        c, d = random_element(upper, rng), random_element(upper, rng)
        assert tower.lift(tower.flatten(c)) == c
        assert tower.flatten(c * d) == tower.flatten(c) * tower.flatten(d)


def test_tower_needs_matching_bases():

    with pytest.raises(MembershipError):
        Tower(gaussian_integers(), quadratic(QQ, 3))


def test_tensor_algebra_of_base_rings():

    B = gaussian_integers(ZZ.extend("a"))
    Bt = gaussian_integers(ZZ.extend("b"))
    T = tensor_algebra(B, Bt)
    assert T.rank == 4
    i = pure_tensor(B, Bt, T, B("i"), Bt.one)
    j = pure_tensor(B, Bt, T, B.one, Bt("i"))
    assert i * i == T(-1)
    assert (i * j) * (i * j) == T.one


def test_tensor_algebra_rejects_shared_variables():

    B = gaussian_integers(ZZ.extend("a"))
    with pytest.raises(RingMismatchError):
        tensor_algebra(B, B)


def test_base_change_mod_p():

    B = gaussian_integers()
    h = RingHom.reduction(ZZ, 5)
    changed = base_change_algebra(B, h)
    i = changed("i")
    # 2 is a square root of -1 mod 5
    assert (i - changed(2)) * (i + changed(2)) == changed(0)
    assert base_change_triple(regular_triple(B), h).base == GF(5)


def test_algebra_map_must_be_multiplicative():

    B = gaussian_integers()
    with pytest.raises(AlgebraAxiomError):
        AlgebraMap(B, B, [B.one, B.one * 2])
    conjugation = AlgebraMap(B, B, [B.one, -B("i")])
    assert conjugation(B.element([1, 2])) == B.element([1, -2])
