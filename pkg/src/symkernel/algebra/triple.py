"""
Good triples (M|B|A): a free A-module M = A^n with an action of the algebra B.
"""

from typing import List, Sequence

from ..errors import AlgebraAxiomError, MembershipError, ShapeError
from ..rings import matrix as mx
from .table import AlgElement, MultTableAlgebra


def _mat_mul(A: list, B: list, one) -> list:

    zero = one - one
    n = len(B[0]) if B else 0
    result = [[zero for _ in range(n)] for _ in A]
    for i, row in enumerate(A):
        for k, a in enumerate(row):
            if a.is_zero():
                continue
            for j in range(n):
                result[i][j] = result[i][j] + a * B[k][j]
    return result


def _mat_combination(coeffs: Sequence, matrices: Sequence[list], size: int, one) -> list:

    zero = one - one
    result = [[zero for _ in range(size)] for _ in range(size)]
    for c, M in zip(coeffs, matrices):
        if c.is_zero():
            continue
        for i in range(size):
            for j in range(size):
                result[i][j] = result[i][j] + c * M[i][j]
    return result


class GoodTriple:
    """
    Attributes
    ----------
    algebra: MultTableAlgebra
        B, over the base A.

    module_rank: int
        n, the rank of M over A.

    action: list<matrix>
        action[i] is the n x n matrix over A of m -> e_i m.
    """

    def __init__(
        self, algebra: MultTableAlgebra, action: Sequence[Sequence[Sequence]], validate: bool = True
    ) -> None:

        if len(action) != algebra.rank:
            raise ShapeError(f"one action matrix per basis element expected ({algebra.rank})")
        base = algebra.base
        self.algebra = algebra
        self.action = [[[base(a) for a in row] for row in M] for M in action]
        self.module_rank = len(self.action[0]) if self.action else 0
        for M in self.action:
            if len(M) != self.module_rank or any(len(row) != self.module_rank for row in M):
                raise ShapeError("action matrices must be square of one size")
        if validate:
            self.validate()

    @property
    def base(self):

        return self.algebra.base

    def identity(self) -> list:

        base = self.base
        n = self.module_rank
        return [[base(1) if i == j else base(0) for j in range(n)] for i in range(n)]

    def mult_matrix(self, b: AlgElement) -> list:
        """Matrix of m -> b m in the module basis."""

        if b.algebra != self.algebra:
            raise MembershipError("element is not in the algebra of the triple")
        return _mat_combination(b.coords, self.action, self.module_rank, self.base(1))

    def validate(self) -> None:
        """The action must be a unital ring map B -> End(M)."""

        one = self.base(1)
        if self.mult_matrix(self.algebra.one) != self.identity():
            raise AlgebraAxiomError("action of 1 is not the identity", ())
        n = self.algebra.rank
        for i in range(n):
            for j in range(n):
                lhs = _mat_mul(self.action[i], self.action[j], one)
                rhs = _mat_combination(self.algebra.table[i][j], self.action, self.module_rank, one)
                if lhs != rhs:
                    raise AlgebraAxiomError("action is not multiplicative", (i + 1, j + 1))

    def __repr__(self) -> str:

        return f"GoodTriple({self.algebra}, rank={self.module_rank})"


def make_triple(algebra: MultTableAlgebra, action: Sequence) -> GoodTriple:

    return GoodTriple(algebra, action)


def regular_triple(algebra: MultTableAlgebra) -> GoodTriple:
    """(B|B|A): B acting on itself by multiplication."""

    return GoodTriple(
        algebra, [algebra.left_matrix(i) for i in range(algebra.rank)], validate=False
    )


def mult_matrix(b: AlgElement, triple: GoodTriple) -> List[list]:

    return triple.mult_matrix(b)


def conjugate_triple(triple: GoodTriple, P: list) -> GoodTriple:
    """The same module in the basis given by the columns of the invertible P."""

    base = triple.base
    P_inv = mx.inverse(P, base)
    action = [mx.matmul(mx.matmul(P_inv, M, base), P, base) for M in triple.action]
    return GoodTriple(triple.algebra, action, validate=False)
