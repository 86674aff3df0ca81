import json
import random
from pathlib import Path

import pytest

from symkernel.errors import NotSymmetricError, ResourceCapError, ShapeError
from symkernel.rings import ZZ
from symkernel.symfun import (
    check_fundamental_theorem,
    compute_wk,
    elementary_decompose,
    monomial_symmetric,
    verify_wk_on_matrices,
)


# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"


def test_power_sum_decomposition():

    R = ZZ.extend("x1", "x2")
    x1, x2 = R.gens()
    result = elementary_decompose(x1**2 + x2**2)

    U = ZZ.extend("u1", "u2")
    u1, u2 = U.gens()
    assert result.expr == u1**2 - u2 * 2
    assert result.alphabet_sizes == (2,)


def test_other_variables_become_coefficients():

    R = ZZ.extend("c", "x1", "x2")
    c, x1, x2 = R.gens()
    result = elementary_decompose(c * x1 * x2, ["x1", "x2"])

    U = ZZ.extend("c", "u1", "u2")
    assert result.expr == U.gen("c") * U.gen("u2")


def test_non_symmetric_input_names_transposition():

    R = ZZ.extend("x1", "x2", "x3")
    with pytest.raises(NotSymmetricError) as info:
        elementary_decompose(R.gen("x1") + R.gen("x2"))
    assert info.value.transposition in ((1, 3), (2, 3))


def test_wk_2_2_matches_frozen_oracle():

    with open(RESOURCES / "wk_2_2.json") as fp:
        oracle = json.load(fp)

    ring = ZZ.extend(*oracle["variables"])
    table = compute_wk(2, 2)
    assert len(table) == len(oracle["wk"])
    for w, terms in zip(table, oracle["wk"]):
        expected = ring.from_terms({tuple(t["monomial"]): ZZ(t["coeff"]) for t in terms})
        assert w.expr == expected


def test_wk_evaluation():

    w1 = compute_wk(2, 2)[1]
    assert w1.evaluate([ZZ(2), ZZ(3)], [ZZ(5), ZZ(7)]) == 60


def test_wk_resource_cap():

    with pytest.raises(ResourceCapError):
        compute_wk(4, 4)
    with pytest.raises(ShapeError):
        compute_wk(0, 2)


@pytest.mark.parametrize("m, n", [(1, 2), (2, 1), (2, 3)])
def test_wk_on_random_matrices(m, n):

    rng = random.Random(m * 10 + n)
    wk = compute_wk(m, n)
    for _ in range(5):
        X = [[ZZ(rng.randint(-3, 3)) for _ in range(m)] for _ in range(m)]
        Y = [[ZZ(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        assert verify_wk_on_matrices(m, n, X, Y, ZZ, wk).ok


def test_wk_matrix_shape_checked():

    X = [[ZZ(1)]]
    with pytest.raises(ShapeError):
        verify_wk_on_matrices(2, 1, X, X, ZZ)


def test_monomial_symmetric():

    R = ZZ.extend("x1", "x2")
    x1, x2 = R.gens()
    assert monomial_symmetric(R, ["x1", "x2"], (2,)) == x1**2 + x2**2
    assert monomial_symmetric(R, ["x1", "x2"], (1, 1)) == x1 * x2


def test_fundamental_theorem_small_degrees():

    result = check_fundamental_theorem(3, 4)
    assert result.ok
    assert result.checked > 0
