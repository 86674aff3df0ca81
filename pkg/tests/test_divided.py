import random

import pytest

from symkernel.algebra import gaussian_integers, regular_triple
from symkernel.divided import (
    DividedElement,
    LawKind,
    exponent_vectors,
    gamma_compare,
    gamma_from_sym,
    gamma_mul,
    gamma_of,
    law_check,
    sigma_gamma,
    star_mul,
    theta_div,
)
from symkernel.errors import ShapeError
from symkernel.rings import ZZ
from symkernel.suite import (
    DIVIDED_ALGEBRAS,
    DIVIDED_RELATION_INPUTS,
    DIVIDED_SUITE_ALGEBRAS,
    divided_checks,
)
from symkernel.tensor import random_invariant

LABELS = ("1", "i")


def test_exponent_vectors_order():

    assert list(exponent_vectors(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert len(list(exponent_vectors(3, 2))) == 6


def test_gamma_of_coordinates():

    b = gaussian_integers().element([2, 3])
    expected = DividedElement(ZZ, LABELS, 2, {(2, 0): 4, (1, 1): 6, (0, 2): 9})

    assert gamma_of(b, 2) == expected
    assert gamma_of(b, 0) == DividedElement.one(ZZ, LABELS)
    with pytest.raises(ShapeError):
        gamma_of(b, -1)


def test_bad_exponent_vector():

    with pytest.raises(ShapeError):
        DividedElement(ZZ, LABELS, 2, {(1, 0): 1})


def test_star_product_binomials():

    e1 = DividedElement(ZZ, LABELS, 1, {(1, 0): 1})
    e2 = DividedElement(ZZ, LABELS, 1, {(0, 1): 1})

    assert star_mul(e1, e1) == DividedElement(ZZ, LABELS, 2, {(2, 0): 2})
    assert star_mul(e1, e2) == DividedElement(ZZ, LABELS, 2, {(1, 1): 1})


def test_comparison_round_trip():

    B = gaussian_integers()
    t = random_invariant(B, 3, random.Random(2))

    assert gamma_compare(gamma_from_sym(t), B) == t
    for u in DividedElement.basis(ZZ, LABELS, 3):
        assert gamma_from_sym(gamma_compare(u, B)) == u


def test_algebra_product_transported():

    B = gaussian_integers()
    u, v = gamma_of(B.element([1, 1]), 2), gamma_of(B.element([0, 2]), 2)

    assert gamma_compare(gamma_mul(u, v, B), B) == gamma_compare(u, B) * gamma_compare(v, B)
    with pytest.raises(ShapeError):
        gamma_mul(u, gamma_of(B.one, 1), B)


def test_theta_div_is_the_norm():

    triple = regular_triple(gaussian_integers())
    b = triple.algebra.element([2, 3])

    assert theta_div(gamma_of(b, 2), triple) == ZZ(13)
    with pytest.raises(ShapeError):
        theta_div(gamma_of(b, 3), triple)


def test_sigma_gamma_splits():

    u = DividedElement(ZZ, LABELS, 2, {(1, 1): 1})

    assert sigma_gamma(u, 1, 1) == {((1, 0), (0, 1)): ZZ(1), ((0, 1), (1, 0)): ZZ(1)}
    with pytest.raises(ShapeError):
        sigma_gamma(u, 1, 2)


@pytest.mark.parametrize("kind", list(LawKind))
def test_polynomial_laws(kind):

    triple = regular_triple(gaussian_integers())

    assert law_check(triple, kind, random.Random(0), samples=5).ok


@pytest.mark.parametrize("name", sorted(DIVIDED_ALGEBRAS))
def test_divided_checks(name):

    results = divided_checks(DIVIDED_ALGEBRAS[name](), 3, 4, random.Random(name))

    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]


def test_relation_inputs_are_independent_of_samples():

    results = divided_checks(DIVIDED_ALGEBRAS["zz"](), 1, 2, random.Random(9), relation_inputs=34)

    assert results[0].name == "divided_relations"
    assert results[0].checked == 34
    assert 34 * len(DIVIDED_SUITE_ALGEBRAS) >= DIVIDED_RELATION_INPUTS
