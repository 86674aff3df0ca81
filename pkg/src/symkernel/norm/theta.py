"""
The symmetrization morphism theta: S_n(B|A) -> A of a good triple (M|B|A)
with M free of rank n.

theta(t) is the scalar by which t acts on the top exterior power of M: for a
pure tensor b_1 (x) ... (x) b_n it is det of the matrix whose k-th column is
the k-th column of the action of b_k, i.e. the coefficient of
b_1 e_1 ^ ... ^ b_n e_n on e_1 ^ ... ^ e_n.
"""

import logging
from typing import Dict, List, Sequence, Union

from ..algebra import AlgElement, GoodTriple, base_change_element, base_change_triple
from ..errors import MembershipError, NotInvariantError, ShapeError
from ..rings import BaseRing, RingHom, poly_coeff
from ..tensor import SymTensor, TensorElement, is_invariant
from .charpoly import fresh_variable, matrix_det

logger = logging.getLogger(__name__)


class Symmetrization:
    """
    theta for one triple, with the determinant of every basis tuple cached.
    """

    def __init__(self, triple: GoodTriple) -> None:

        self.triple = triple
        self.__cache: Dict[tuple, object] = {}

    @property
    def rank(self) -> int:

        return self.triple.module_rank

    def tuple_value(self, u: tuple):
        """theta(e_u1 (x) ... (x) e_un)."""

        if u not in self.__cache:
            action = self.triple.action
            n = self.rank
            columns = [[action[i][row][k] for row in range(n)] for k, i in enumerate(u)]
            self.__cache[u] = matrix_det([list(r) for r in zip(*columns)], self.triple.base)
        return self.__cache[u]

    def pure(self, elements: Sequence[AlgElement]):
        """theta(b_1 (x) ... (x) b_n) without expanding the tensor."""

        if len(elements) != self.rank:
            raise ShapeError(f"{self.rank} entries expected, got {len(elements)}")
        n = self.rank
        columns = []
        for k, b in enumerate(elements):
            M = self.triple.mult_matrix(b)
            columns.append([M[row][k] for row in range(n)])
        return matrix_det([list(r) for r in zip(*columns)], self.triple.base)

    def __call__(self, t: Union[SymTensor, TensorElement]):

        if t.algebra != self.triple.algebra:
            raise MembershipError("tensor is not over the algebra of the triple")
        if t.n != self.rank:
            raise ShapeError(
                f"tensor power {t.n} does not match module rank {self.rank}",
                power=t.n, rank=self.rank,
            )
        if isinstance(t, SymTensor):
            t = t.to_tensor()
        elif not is_invariant(t):
            raise NotInvariantError("theta is only defined on symmetric tensors")
        total = self.triple.base(0)
        for u, c in t.terms.items():
            total = total + self.tuple_value(u) * c
        return total


def theta(t: Union[SymTensor, TensorElement], triple: GoodTriple):

    return Symmetrization(triple)(t)


def theta_pure(elements: Sequence[AlgElement], triple: GoodTriple):

    return Symmetrization(triple).pure(elements)


def theta_charpoly(b: AlgElement, triple: GoodTriple, name: str = "x") -> List:
    """
    Coefficients of theta((x + b)^(x)n) computed after base change A -> A[x],
    read from x^n down to x^0.
    """
    base = triple.base
    if not isinstance(base, BaseRing):
        raise MembershipError("theta over A[x] needs a base ring")
    variable = fresh_variable(base, name)
    ring = base.extend(variable)
    h = RingHom.inclusion(base, ring)
    lifted = base_change_triple(triple, h)
    shifted = base_change_element(b, h, lifted.algebra) + lifted.algebra.one * ring.gen(variable)
    value = theta_pure([shifted] * triple.module_rank, lifted)
    n = triple.module_rank
    return [poly_coeff(value, n - k) for k in range(n + 1)]
