"""
Flags 0 = M_0 ⊂ M_1 ⊂ ... ⊂ M_r = M of A-free B-submodules with A-free
quotients, given by an adapted basis.
"""

import logging
from typing import List, Sequence

from ..algebra import GoodTriple, conjugate_triple
from ..errors import MembershipError, NotInvertibleError, ShapeError
from ..rings import is_unit
from ..rings import matrix as mx

logger = logging.getLogger(__name__)


class ModuleFlag:
    """
    Attributes
    ----------
    triple: GoodTriple
        (M|B|A) in its original basis.

    basis: matrix
        Invertible P over A; its first dims[j] columns span M_(j+1).

    dims: tuple<int>
        Strictly increasing ranks of the steps, ending at rank(M).
    """

    def __init__(self, triple: GoodTriple, basis: Sequence[Sequence], dims: Sequence[int]) -> None:

        base = triple.base
        n = triple.module_rank
        self.triple = triple
        self.basis = [[base(a) for a in row] for row in basis]
        self.dims = tuple(dims)
        if mx.shape(self.basis) != (n, n):
            raise ShapeError(f"adapted basis must be {n} x {n}")
        if not self.dims or self.dims[-1] != n:
            raise ShapeError("the last step must be the whole module", dims=list(self.dims))
        if any(b <= a for a, b in zip((0,) + self.dims, self.dims)):
            raise ShapeError("step ranks must increase strictly", dims=list(self.dims))
        if not is_unit(mx.det(self.basis, base)):
            raise NotInvertibleError("the adapted basis is not invertible over the base")
        self.adapted = conjugate_triple(triple, self.basis)
        self.validate()

    def validate(self) -> None:
        """Each step must be B-stable: the adapted action is block upper triangular."""

        for i, X in enumerate(self.adapted.action):
            for j, d in enumerate(self.dims[:-1]):
                for row in range(d, len(X)):
                    for col in range(d):
                        if not X[row][col].is_zero():
                            raise MembershipError(
                                f"step {j + 1} is not stable under basis element {i + 1}",
                                step=j + 1, basis_index=i + 1,
                            )
        logger.debug("flag with steps %s validated", self.dims)

    @property
    def length(self) -> int:

        return len(self.dims)

    def bounds(self, j: int) -> tuple:

        return ((0,) + self.dims)[j], self.dims[j]

    def __block(self, lo: int, hi: int) -> GoodTriple:

        action = [[row[lo:hi] for row in X[lo:hi]] for X in self.adapted.action]
        return GoodTriple(self.triple.algebra, action, validate=False)

    def quotient_step(self, j: int) -> GoodTriple:
        """M_(j+1) / M_j with its induced basis (0-based j)."""

        return self.__block(*self.bounds(j))

    def submodule_triple(self, j: int = 0) -> GoodTriple:
        """M_(j+1)."""

        return self.__block(0, self.dims[j])

    def quotient_triple(self, j: int = 0) -> GoodTriple:
        """M / M_(j+1)."""

        return self.__block(self.dims[j], self.triple.module_rank)

    def quotient_steps(self) -> List[GoodTriple]:

        return [self.quotient_step(j) for j in range(self.length)]
