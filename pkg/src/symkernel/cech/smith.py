"""
Smith normal form of integer matrices with transformation matrices, and
ranks over the prime fields and the rationals.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import Matrix, eye, zeros
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ..rings import BaseRing
from ..rings import matrix as mx

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    """
    L * A * R = D with L, R unimodular and D diagonal.

    Attributes
    ----------
    left: Matrix

    diagonal: Matrix

    right: Matrix

    factors: tuple<int>
        Nonzero invariant factors, positive, each dividing the next.
    """

    left: Matrix
    diagonal: Matrix
    right: Matrix
    factors: Tuple[int, ...]

    @property
    def rank(self) -> int:

        return len(self.factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Invariant factors different from 1."""

        return tuple(d for d in self.factors if d != 1)

    def verify(self, original: Matrix) -> bool:

        D = self.diagonal
        diagonal = all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
        divides = all(b % a == 0 for a, b in zip(self.factors, self.factors[1:]))
        return (
            self.left * original * self.right == D
            and diagonal
            and divides
            and abs(self.left.det()) == 1
            and abs(self.right.det()) == 1
        )


def smith(M) -> SmithDecomposition:
    """
    Params
    ------
    M: Matrix or nested sequence of ints

    Returns
    -------
    SmithDecomposition
    """
    A = M if isinstance(M, Matrix) else Matrix(M)
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return SmithDecomposition(eye(rows), zeros(rows, cols), eye(cols), ())

    dm = DomainMatrix.from_Matrix(A).convert_to(ZZ)
    D, L, R = smith_normal_decomp(dm)
    D, L, R = D.to_Matrix(), L.to_Matrix(), R.to_Matrix()
    factors = tuple(abs(int(D[k, k])) for k in range(min(rows, cols)) if D[k, k] != 0)
    logger.debug("smith form of a %d x %d matrix: factors %s", rows, cols, factors)
    return SmithDecomposition(L, D, R, factors)


def rank_over(M: Sequence[Sequence[int]], ring: BaseRing) -> int:
    """Rank of an integer matrix after reduction into a field (GF(p) or QQ)."""

    if isinstance(M, Matrix):
        M = M.tolist()
    return mx.rank([[ring(int(a)) for a in row] for row in M], ring)


def invariant_factors(M) -> List[int]:

    return list(smith(M).factors)
