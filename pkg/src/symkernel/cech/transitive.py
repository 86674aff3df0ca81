"""
The difference map Lambda^A -> Lambda^(A x G), (l_a) -> (l_a - l_ga), of a
finite group acting transitively on a finite set A: its kernel is the
diagonal copy of Lambda and its image and cokernel are free.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, zeros
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.galois import (
    S1TransitiveSubgroups,
    S2TransitiveSubgroups,
    S3TransitiveSubgroups,
    S4TransitiveSubgroups,
    S5TransitiveSubgroups,
    S6TransitiveSubgroups,
)

from ..errors import NotTransitiveError, ShapeError
from ..rings import GF, QQ, ZZ, BaseRing, RingKind
from ..rings import matrix as mx
from ..witness import CheckResult, combine
from .smith import rank_over, smith

logger = logging.getLogger(__name__)

TABLES = {
    1: S1TransitiveSubgroups,
    2: S2TransitiveSubgroups,
    3: S3TransitiveSubgroups,
    4: S4TransitiveSubgroups,
    5: S5TransitiveSubgroups,
    6: S6TransitiveSubgroups,
}


@dataclass(frozen=True)
class GroupAction:
    """
    Attributes
    ----------
    points: int
        A = {0, ..., points - 1}.

    group: PermutationGroup
        Acting on A through its permutations.

    name: str = ""
    """

    points: int
    group: PermutationGroup
    name: str = ""

    def __post_init__(self) -> None:

        if self.group.degree != self.points:
            raise ShapeError(
                f"group acts on {self.group.degree} points, expected {self.points}",
                degree=self.group.degree,
            )

    @classmethod
    def from_generators(cls, points: int, generators: Sequence[Sequence[int]], name: str = "") -> "GroupAction":

        perms = [Permutation(list(g)) for g in generators] or [Permutation(list(range(points)))]
        return cls(points, PermutationGroup(perms), name)

    @cached_property
    def elements(self) -> Tuple[Permutation, ...]:

        return tuple(sorted(self.group.elements, key=lambda g: g.array_form))

    @property
    def order(self) -> int:

        return len(self.elements)

    def is_transitive(self) -> bool:

        return len(self.group.orbit(0)) == self.points if self.points else True


def difference_matrix(action: GroupAction) -> Matrix:
    """Rows indexed by (a, g) in that lexicographic order, columns by a."""

    n = action.points
    M = zeros(n * action.order, n)
    for a in range(n):
        for k, g in enumerate(action.elements):
            row = a * action.order + k
            M[row, a] += 1
            M[row, g(a)] -= 1
    return M


@dataclass
class TransitiveKernel:
    """
    Attributes
    ----------
    ring: BaseRing

    kernel: list<list>
        Basis of the kernel, integer vectors.

    image_rank: int

    cokernel_rank: int

    factors: tuple<int>
        Invariant factors of the difference map over the integers; empty over
        fields.
    """

    ring: BaseRing
    kernel: List[List[int]]
    image_rank: int
    cokernel_rank: int
    factors: Tuple[int, ...] = ()

    @property
    def kernel_is_diagonal(self) -> bool:

        if len(self.kernel) != 1:
            return False
        v = self.kernel[0]
        return len(set(v)) == 1 and v[0] != 0

    @property
    def cokernel_free(self) -> bool:

        return all(d == 1 for d in self.factors)

    def to_dict(self) -> dict:

        return {
            "ring": str(self.ring),
            "kernel": self.kernel,
            "image_rank": self.image_rank,
            "cokernel_rank": self.cokernel_rank,
            "factors": list(self.factors),
            "kernel_is_diagonal": self.kernel_is_diagonal,
            "cokernel_free": self.cokernel_free,
        }


def transitive_kernel(action: GroupAction, ring: BaseRing = ZZ) -> TransitiveKernel:

    if not action.is_transitive():
        raise NotTransitiveError(
            f"{action.name or 'the group'} does not act transitively", points=action.points
        )
    M = difference_matrix(action)
    rows, cols = M.shape

    if ring.kind is RingKind.INTEGERS:
        decomposition = smith(M)
        rank = decomposition.rank
        R = decomposition.right
        kernel = [[int(R[r, c]) for r in range(cols)] for c in range(rank, cols)]
        factors = decomposition.factors
    elif ring.is_field:
        rank = rank_over(M, ring)
        scalars = [[ring(int(a)) for a in row] for row in M.tolist()]
        kernel = [
            [_lift(c) for c in vector] for vector in mx.nullspace(scalars, ring)
        ]
        factors = ()
    else:
        raise ShapeError(f"coefficients must be ZZ, QQ or GF(p), got {ring}", ring=str(ring))

    result = TransitiveKernel(ring, kernel, rank, rows - rank, factors)
    logger.debug(
        "difference map of %s over %s: image rank %d, cokernel rank %d",
        action.name, ring, rank, rows - rank,
    )
    return result


def _lift(c):

    number = c.to_number()
    return int(number) if number == int(number) else str(number)


def transitive_actions(max_points: int = 6, max_order: int = 24) -> List[GroupAction]:
    """Every transitive group action with |A| <= max_points, |G| <= max_order, up to conjugacy."""

    actions = []
    for n in range(1, min(max_points, 6) + 1):
        for member in TABLES[n]:
            group = member.get_perm_group()
            if group.order() <= max_order:
                actions.append(GroupAction(n, group, f"{member.value} on {n}"))
    logger.debug("%d transitive actions", len(actions))
    return actions


def check_transitive_kernels(
    actions: Optional[Sequence[GroupAction]] = None,
    rings: Sequence[BaseRing] = (ZZ, QQ, GF(2), GF(3)),
) -> CheckResult:
    """Kernel diagonal, image of rank |A| - 1 and cokernel free, for every action."""

    actions = transitive_actions() if actions is None else actions
    results = []
    for action in actions:
        for ring in rings:
            name = f"{action.name} over {ring}"
            found = transitive_kernel(action, ring)
            if (
                found.kernel_is_diagonal
                and found.image_rank == action.points - 1
                and found.cokernel_free
            ):
                results.append(CheckResult.passed(name))
            else:
                results.append(CheckResult.failed(name, found.to_dict()))
    return combine("transitive_kernel", results)
