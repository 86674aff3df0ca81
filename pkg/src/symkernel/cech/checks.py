"""
Identity checks over families of covers: the finitistic/unifibrant
equivalence, exactness of full complexes, the explicit homotopies, Euler
characteristics and the re-ordering isomorphisms.
"""

import logging
import random
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional

from sympy import Matrix, eye, kronecker_product

from ..errors import SymKernelError
from ..witness import CheckResult
from .complex import DoubleComplex, total_complex
from .cover import (
    Cover,
    cech_complex,
    enumerate_covers,
    euler_char,
    homotopy_witness,
    is_finitistic,
    is_unifibrant,
    point_complex,
    reorder_iso,
    unifibrant_witnesses,
)

logger = logging.getLogger(__name__)


def random_cover(
    rng: random.Random, max_base: int = 3, max_pieces: int = 3, max_piece_size: int = 4
) -> Cover:
    """A jointly surjective cover drawn from rng."""

    width = rng.randint(1, max_base)
    rows = []
    for _ in range(rng.randint(1, max_pieces)):
        row = [0] * width
        for _ in range(rng.randint(1, max_piece_size)):
            row[rng.randrange(width)] += 1
        rows.append(row)
    for k in range(width):
        if not any(row[k] for row in rows):
            rows[rng.randrange(len(rows))][k] += 1
    return Cover.from_profiles(rows)


def check_equivalence(covers: Optional[Iterable[Cover]] = None) -> CheckResult:
    """is_finitistic and is_unifibrant agree on every cover."""

    covers = enumerate_covers() if covers is None else covers
    checked = 0
    for cover in covers:
        checked += 1
        finitistic, unifibrant = is_finitistic(cover), is_unifibrant(cover)
        if finitistic != unifibrant:
            return CheckResult.failed(
                "finitistic_iff_unifibrant",
                {"cover": cover.to_dict(), "finitistic": finitistic, "unifibrant": unifibrant},
                checked,
            )
    logger.info("finitistic and unifibrant agree on %d covers", checked)
    return CheckResult.passed("finitistic_iff_unifibrant", checked, scope="model-level")


@lru_cache(maxsize=None)
def _full_exact(fibre_size: int, depth: int) -> bool:

    C = cech_complex(Cover.from_profiles([[fibre_size]]), depth, reduced=False)
    homology = C.homology()
    return all(homology[k].is_zero() for k in C.degrees if k > -depth)


def check_full_exactness(covers: Iterable[Cover], depth: int = 4) -> CheckResult:
    """
    The augmented full complex is exact above its truncation degree -depth.
    Over a point x it only depends on the number of points over x.
    """
    checked = 0
    for cover in covers:
        checked += 1
        for x in cover.base:
            size = sum(cover.profile(x))
            if not _full_exact(size, depth):
                return CheckResult.failed(
                    "full_cech_exact",
                    {"cover": cover.to_dict(), "point": x, "depth": depth},
                    checked,
                )
    return CheckResult.passed("full_cech_exact", checked, depth=depth)


def check_homotopies(covers: Iterable[Cover]) -> CheckResult:
    """h d + d h = id at every unifibrant point."""

    checked = 0
    for cover in covers:
        for x, piece in unifibrant_witnesses(cover).items():
            if piece is None:
                continue
            checked += 1
            if not homotopy_witness(cover, x).verify():
                return CheckResult.failed(
                    "homotopy", {"cover": cover.to_dict(), "point": x}, checked
                )
    return CheckResult.passed("homotopy", checked)


def check_euler(covers: Iterable[Cover]) -> CheckResult:
    """
    prod_i (1 - a_i(x)) is the alternating rank sum of l_x and vanishes
    exactly at unifibrant points.
    """
    checked = 0
    for cover in covers:
        witnesses = unifibrant_witnesses(cover)
        for x in cover.base:
            checked += 1
            chi = euler_char(cover, x)
            ranks = point_complex(cover, x).euler_characteristic()
            if chi != ranks or (chi == 0) != (witnesses[x] is not None):
                return CheckResult.failed(
                    "euler_characteristic",
                    {"cover": cover.to_dict(), "point": x, "product": chi, "ranks": ranks},
                    checked,
                )
    return CheckResult.passed("euler_characteristic", checked)


def check_reorderings(covers: Iterable[Cover]) -> CheckResult:
    """Every re-ordering is a chain isomorphism, inverse to the reverse re-ordering."""

    checked = 0
    for cover in covers:
        natural = tuple(range(len(cover)))
        for order in permutations(natural):
            checked += 1
            there = reorder_iso(cover, natural, order)
            back = reorder_iso(cover, order, natural)
            if not (there.is_isomorphism() and there.then(back).is_identity()):
                return CheckResult.failed(
                    "reorder_iso", {"cover": cover.to_dict(), "order": list(order)}, checked
                )
    return CheckResult.passed("reorder_iso", checked)


def _random_differential(rng: random.Random, rows: int, cols: int) -> Matrix:

    return Matrix(rows, cols, lambda i, j: rng.randint(-3, 3))


def random_double_complex(rng: random.Random, max_rank: int = 3) -> DoubleComplex:
    """
    The tensor product of two random two-term complexes A^0 -> A^1 and
    B^0 -> B^1, so that every square commutes.
    """
    a = [rng.randint(1, max_rank) for _ in range(2)]
    b = [rng.randint(1, max_rank) for _ in range(2)]
    dA = _random_differential(rng, a[1], a[0])
    dB = _random_differential(rng, b[1], b[0])
    ranks = {(i, j): a[i] * b[j] for i in range(2) for j in range(2)}
    horizontal = {(0, j): kronecker_product(dA, eye(b[j])) for j in range(2)}
    vertical = {(i, 0): kronecker_product(eye(a[i]), dB) for i in range(2)}
    return DoubleComplex(ranks, horizontal, vertical)


def check_total_complexes(rng: random.Random, samples: int = 100) -> CheckResult:
    """The total complex of a commuting double complex squares to zero."""

    for k in range(samples):
        double = random_double_complex(rng)
        try:
            total_complex(double)
        except SymKernelError as err:
            return CheckResult.failed(
                "total_complex",
                {
                    "sample": k,
                    "error": err.to_dict(),
                    "ranks": [[i, j, r] for (i, j), r in sorted(double.ranks.items())],
                },
                k + 1,
            )
    return CheckResult.passed("total_complex", samples)
