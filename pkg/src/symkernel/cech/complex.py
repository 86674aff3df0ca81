"""
Bounded cochain complexes of finitely generated free abelian groups.

Degrees follow the cohomological convention: d^k goes from degree k to
degree k + 1 and is stored as an integer matrix whose columns are indexed by
the basis of degree k.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix, eye, zeros

from ..errors import NonCommutingSquareError, ShapeError
from .smith import smith

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """
    Z^rank + sum_d Z/d.

    Attributes
    ----------
    rank: int

    torsion: tuple<int>
        Invariant factors greater than 1.
    """

    rank: int
    torsion: Tuple[int, ...] = ()

    def is_zero(self) -> bool:

        return self.rank == 0 and not self.torsion

    def to_dict(self) -> dict:

        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:

        parts = ([f"Z^{self.rank}"] if self.rank else []) + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


class ChainComplex:
    """
    Attributes
    ----------
    bases: dict<int, tuple>
        Labelled basis of every degree in [low, high].

    differentials: dict<int, Matrix>
        d^k of shape (rank(k + 1), rank(k)) for low <= k < high.
    """

    def __init__(
        self,
        bases: Mapping[int, Sequence[Hashable]],
        differentials: Mapping[int, Matrix],
        validate: bool = True,
    ) -> None:

        if not bases:
            raise ShapeError("a complex needs at least one degree")
        self.low, self.high = min(bases), max(bases)
        self.bases = {k: tuple(bases.get(k, ())) for k in range(self.low, self.high + 1)}
        self.differentials: Dict[int, Matrix] = {}
        for k in range(self.low, self.high):
            d = differentials.get(k)
            expected = (self.rank(k + 1), self.rank(k))
            if d is None:
                d = zeros(*expected)
            if d.shape != expected:
                raise ShapeError(
                    f"d^{k} has shape {d.shape}, expected {expected}", degree=k
                )
            self.differentials[k] = d
        if validate:
            self.validate()

    def rank(self, k: int) -> int:

        return len(self.bases.get(k, ()))

    def d(self, k: int) -> Matrix:
        """d^k; zero outside the stored range."""

        if k in self.differentials:
            return self.differentials[k]
        return zeros(self.rank(k + 1), self.rank(k))

    @property
    def degrees(self) -> range:

        return range(self.low, self.high + 1)

    def validate(self) -> None:

        for k in range(self.low, self.high - 1):
            if not (self.d(k + 1) * self.d(k)).is_zero_matrix:
                raise ShapeError(f"d^{k + 1} d^{k} is not zero", degree=k)

    def homology(self) -> Dict[int, HomologyGroup]:
        """H^k = ker d^k / im d^(k-1) for every degree."""

        result = {}
        for k in self.degrees:
            incoming = smith(self.d(k - 1))
            outgoing = smith(self.d(k))
            kernel_rank = self.rank(k) - outgoing.rank
            result[k] = HomologyGroup(kernel_rank - incoming.rank, incoming.torsion)
        logger.debug(
            "homology in degrees %d..%d: %s",
            self.low, self.high, {k: str(h) for k, h in result.items()},
        )
        return result

    def is_exact(self) -> bool:

        return all(h.is_zero() for h in self.homology().values())

    def euler_characteristic(self) -> int:
        """Alternating sum of ranks, counted positively in the top degree."""

        return sum((-1) ** (self.high - k) * self.rank(k) for k in self.degrees)

    def ranks(self) -> Dict[int, int]:

        return {k: self.rank(k) for k in self.degrees}

    def to_dict(self) -> dict:

        return {
            "ranks": {str(k): self.rank(k) for k in self.degrees},
            "differentials": {
                str(k): self.d(k).tolist() for k in range(self.low, self.high)
            },
        }

    def __repr__(self) -> str:

        return f"ChainComplex({self.ranks()})"


@dataclass
class ChainMap:
    """
    Degreewise matrices f^k from source degree k to target degree k.
    """

    source: ChainComplex
    target: ChainComplex
    components: Dict[int, Matrix] = field(default_factory=dict)

    def f(self, k: int) -> Matrix:

        if k in self.components:
            return self.components[k]
        return zeros(self.target.rank(k), self.source.rank(k))

    def commutes(self) -> bool:

        low = min(self.source.low, self.target.low)
        high = max(self.source.high, self.target.high)
        return all(
            self.target.d(k) * self.f(k) == self.f(k + 1) * self.source.d(k)
            for k in range(low, high)
        )

    def is_isomorphism(self) -> bool:

        for k in self.source.degrees:
            F = self.f(k)
            if F.shape[0] != F.shape[1] or abs(F.det()) != 1:
                return False
        return self.commutes()

    def then(self, other: "ChainMap") -> "ChainMap":

        return ChainMap(
            self.source,
            other.target,
            {k: other.f(k) * self.f(k) for k in self.source.degrees},
        )

    def is_identity(self) -> bool:

        return all(self.f(k) == eye(self.source.rank(k)) for k in self.source.degrees)


@dataclass
class DoubleComplex:
    """
    Attributes
    ----------
    ranks: dict<(i, j), int>

    horizontal: dict<(i, j), Matrix>
        delta_h from (i, j) to (i + 1, j).

    vertical: dict<(i, j), Matrix>
        delta_v from (i, j) to (i, j + 1).
    """

    ranks: Dict[Tuple[int, int], int]
    horizontal: Dict[Tuple[int, int], Matrix] = field(default_factory=dict)
    vertical: Dict[Tuple[int, int], Matrix] = field(default_factory=dict)

    def rank(self, i: int, j: int) -> int:

        return self.ranks.get((i, j), 0)

    def h(self, i: int, j: int) -> Matrix:

        return self.horizontal.get((i, j), zeros(self.rank(i + 1, j), self.rank(i, j)))

    def v(self, i: int, j: int) -> Matrix:

        return self.vertical.get((i, j), zeros(self.rank(i, j + 1), self.rank(i, j)))

    def validate(self) -> None:

        for (i, j) in self.ranks:
            if self.h(i, j).shape != (self.rank(i + 1, j), self.rank(i, j)):
                raise ShapeError(f"horizontal map at ({i}, {j}) has the wrong shape", i=i, j=j)
            if self.v(i, j).shape != (self.rank(i, j + 1), self.rank(i, j)):
                raise ShapeError(f"vertical map at ({i}, {j}) has the wrong shape", i=i, j=j)
            if not (self.h(i + 1, j) * self.h(i, j)).is_zero_matrix:
                raise ShapeError(f"row {j} is not a complex at {i}", i=i, j=j)
            if not (self.v(i, j + 1) * self.v(i, j)).is_zero_matrix:
                raise ShapeError(f"column {i} is not a complex at {j}", i=i, j=j)
            if self.v(i + 1, j) * self.h(i, j) != self.h(i, j + 1) * self.v(i, j):
                raise NonCommutingSquareError(i, j)


def total_complex(double: DoubleComplex) -> ChainComplex:
    """
    Tot^n = sum_(i + j = n) C^(i, j) with d = delta_v + (-1)^j delta_h; the
    summands of each degree are ordered by i.
    """
    double.validate()
    cells = [cell for cell, r in double.ranks.items() if r]
    if not cells:
        return ChainComplex({0: ()}, {})
    low = min(i + j for i, j in cells)
    high = max(i + j for i, j in cells)

    def summands(n: int) -> List[Tuple[int, int]]:

        return sorted(cell for cell in cells if sum(cell) == n)

    bases = {
        n: tuple((i, j, b) for i, j in summands(n) for b in range(double.rank(i, j)))
        for n in range(low, high + 1)
    }
    differentials = {}
    for n in range(low, high):
        rows = {label: r for r, label in enumerate(bases[n + 1])}
        D = zeros(len(bases[n + 1]), len(bases[n]))
        for col, (i, j, b) in enumerate(bases[n]):
            for (ti, tj), block, sign in (
                ((i, j + 1), double.v(i, j), 1),
                ((i + 1, j), double.h(i, j), (-1) ** j),
            ):
                for r in range(double.rank(ti, tj)):
                    if block[r, b]:
                        D[rows[(ti, tj, r)], col] += sign * block[r, b]
        differentials[n] = D
    return ChainComplex(bases, differentials)
