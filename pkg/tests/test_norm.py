import random

import pytest

from symkernel.algebra import gaussian_integers, regular_triple, truncated
from symkernel.errors import MembershipError, NotInvariantError, NotInvertibleError, ShapeError
from symkernel.norm import (
    ModuleFlag,
    char_coeffs,
    check_char_coefficients,
    check_random_towers,
    check_sampled_char_coefficients,
    check_ses_multiplicativity,
    check_theta_homomorphism,
    flagged_triple,
    norm,
    random_tower,
    theta,
    theta_charpoly,
    theta_pure,
    trace,
)
from symkernel.rings import GF, ZZ
from symkernel.suite import FLAGGED_TRIPLES, NORM_IDENTITIES, RANDOM_TOWERS, norm_triples
from symkernel.tensor import elem_sym, pure


def test_gaussian_norm_and_trace():

    triple = regular_triple(gaussian_integers())
    b = triple.algebra.element([2, 3])
    chi = char_coeffs(b, triple)

    assert chi.degree == 2
    assert list(chi.coefficients) == [ZZ(1), ZZ(4), ZZ(13)]
    assert trace(b, triple) == ZZ(4)
    assert norm(b, triple) == ZZ(13)


def test_theta_of_elementary_tensors():

    triple = regular_triple(gaussian_integers())
    b = triple.algebra.element([2, 3])
    chi = char_coeffs(b, triple)

    for k in range(3):
        assert theta(elem_sym(b, k, 2), triple) == chi[k]
    assert theta_pure([b, b], triple) == norm(b, triple)
    assert theta_charpoly(b, triple) == list(chi.coefficients)


def test_theta_needs_matching_rank():

    triple = regular_triple(gaussian_integers())
    with pytest.raises(ShapeError):
        theta(elem_sym(triple.algebra.one, 1, 3), triple)


def test_theta_rejects_non_invariant():

    triple = regular_triple(gaussian_integers())
    B = triple.algebra
    with pytest.raises(NotInvariantError):
        theta(pure([B.basis(1), B.one]), triple)


@pytest.mark.parametrize("index", range(4))
def test_char_coefficients_and_homomorphism(index):

    triple = norm_triples()[index]
    rng = random.Random(index)

    assert check_char_coefficients(triple, rng, 5).ok
    assert check_theta_homomorphism(triple, rng, 5).ok


def test_truncated_norm_is_nilpotent_power():

    triple = regular_triple(truncated(GF(5), 3))
    x = triple.algebra.basis(1)

    assert norm(x, triple).is_zero()
    assert norm(triple.algebra.one + x, triple) == GF(5)(1)


def test_flag_validation():

    triple = regular_triple(gaussian_integers())
    with pytest.raises(ShapeError):
        ModuleFlag(triple, [[1, 0], [0, 1]], (1,))
    with pytest.raises(ShapeError):
        ModuleFlag(triple, [[1, 0], [0, 1]], (2, 2))
    with pytest.raises(NotInvertibleError):
        ModuleFlag(triple, [[2, 0], [0, 1]], (2,))
    with pytest.raises(MembershipError):
        ModuleFlag(triple, [[1, 0], [0, 1]], (1, 2))


def test_flag_steps():

    flag = flagged_triple(random.Random(4))

    assert flag.dims[-1] == flag.triple.module_rank
    assert len(flag.quotient_steps()) == flag.length
    assert check_ses_multiplicativity(flag, random.Random(4), 5).ok


@pytest.mark.parametrize("seed", range(6))
def test_random_flags(seed):

    flag = flagged_triple(random.Random(seed))
    rank = flag.triple.module_rank

    assert 2 <= rank <= 4
    assert flag.length == 2
    assert 0 < flag.dims[0] < rank
    assert check_ses_multiplicativity(flag, random.Random(seed), 2).ok


def test_sampled_char_coefficients():

    result = check_sampled_char_coefficients(random.Random(5), cases=25)

    assert result.ok, result.to_dict()
    assert result.checked == 25


def test_random_towers():

    for seed in range(10):
        B, C = random_tower(random.Random(seed))
        assert C.base == B
        assert B.rank * C.rank <= 6

    result = check_random_towers(random.Random(8), towers=6, samples=2)
    assert result.ok, result.to_dict()
    assert result.checked == 12


def test_suite_grid_sizes():

    ses = NORM_IDENTITIES["ses"](1, random.Random(3))
    towers = {r.name: r for r in NORM_IDENTITIES["tower"](1, random.Random(3))}

    assert ses[0].ok
    assert ses[0].details == {"triples": FLAGGED_TRIPLES}
    assert ses[0].checked >= FLAGGED_TRIPLES
    assert towers["det_transitivity_random"].details == {"towers": RANDOM_TOWERS}


@pytest.mark.parametrize("identity", sorted(NORM_IDENTITIES))
def test_norm_identities(identity):

    results = NORM_IDENTITIES[identity](3, random.Random(identity))

    assert results
    assert all(r.ok for r in results), [r.to_dict() for r in results if not r.ok]
