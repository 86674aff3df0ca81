"""
Ready-made algebras used by the suites, tests and the command line.
"""

import random
from typing import Sequence, Union

from ..rings import BaseRing, GF, ZZ, random_scalar
from .table import MultTableAlgebra, random_element


def monogenic(
    base: Union[BaseRing, MultTableAlgebra], coeffs: Sequence, name: str = "x"
) -> MultTableAlgebra:
    """
    A[x]/(f) for the monic f = x^n + c_(n-1) x^(n-1) + ... + c_0, given
    coeffs = [c_0, ..., c_(n-1)], with basis 1, x, ..., x^(n-1).
    """
    n = len(coeffs)
    zero, one = base(0), base(1)
    reduction = [-base(c) for c in coeffs]

    powers = [[one if i == k else zero for i in range(n)] for k in range(n)]
    for _ in range(n, 2 * n - 1):
        last = powers[-1]
        shifted = [zero] + last[:-1]
        powers.append([s + last[-1] * r for s, r in zip(shifted, reduction)])

    table = [[powers[i + j] for j in range(n)] for i in range(n)]
    labels = ["1", name] + [f"{name}^{k}" for k in range(2, n)]
    return MultTableAlgebra(base, labels[:n], table, powers[0])


def gaussian_integers(base: BaseRing = ZZ) -> MultTableAlgebra:

    return monogenic(base, [1, 0], "i")


def f4() -> MultTableAlgebra:
    """GF(2)[w]/(w^2 + w + 1)."""

    return monogenic(GF(2), [1, 1], "w")


def quadratic(base: Union[BaseRing, MultTableAlgebra], d, name: str = "s") -> MultTableAlgebra:
    """A[s]/(s^2 - d)."""

    return monogenic(base, [-base(d), 0], name)


def truncated(base: BaseRing, k: int, name: str = "x") -> MultTableAlgebra:
    """A[x]/(x^k)."""

    return monogenic(base, [0] * k, name)


def dual_numbers(base: BaseRing) -> MultTableAlgebra:

    return truncated(base, 2)


def free_rank(base: BaseRing, n: int) -> MultTableAlgebra:
    """A^n with the coordinatewise product."""

    zero, one = base(0), base(1)
    table = [
        [[one if i == j == k else zero for k in range(n)] for j in range(n)] for i in range(n)
    ]
    return MultTableAlgebra(base, [f"e{i}" for i in range(1, n + 1)], table, [one] * n)


def base_ring_algebra(base: BaseRing) -> MultTableAlgebra:
    """A as a rank one algebra over itself."""

    return MultTableAlgebra(base, ["1"], [[[base(1)]]], [base(1)])


def random_monogenic(
    base: Union[BaseRing, MultTableAlgebra], rank: int, rng: random.Random,
    bound: int = 2, name: str = "x",
) -> MultTableAlgebra:
    """A[x]/(f) for a seeded random monic f of degree `rank`."""

    if isinstance(base, MultTableAlgebra):
        coeffs = [random_element(base, rng, bound) for _ in range(rank)]
    else:
        coeffs = [random_scalar(base, rng, bound) for _ in range(rank)]
    return monogenic(base, coeffs, name)
