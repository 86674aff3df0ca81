"""
Algebras built from other algebras: tensor products over a common ring,
towers C|B|A flattened to C|A, and base change of tables and triples.

Product bases are indexed row-major in the sense of the grid embedding: the
pair (x, y) of a first index x in [m] and a second index y sits at x + m * y.
"""

import logging

from ..errors import MembershipError, RingMismatchError
from ..rings import BaseRing, RingHom
from .table import AlgElement, MultTableAlgebra
from .triple import GoodTriple

logger = logging.getLogger(__name__)


def merge_bases(A: BaseRing, At: BaseRing) -> BaseRing:
    """
    A (x)_R A~ for rings that are R or polynomial rings over R in disjoint
    variables: the polynomial ring over R in both variable lists.
    """
    if A.ground != At.ground:
        raise RingMismatchError(
            f"no common base ring for {A} and {At}", left=str(A), right=str(At)
        )
    if set(A.variables) & set(At.variables):
        raise RingMismatchError(
            "base rings share variables", shared=sorted(set(A.variables) & set(At.variables))
        )
    variables = A.variables + At.variables
    return BaseRing.poly(A.ground, variables) if variables else A.ground


def tensor_algebra(B: MultTableAlgebra, Bt: MultTableAlgebra) -> MultTableAlgebra:
    """
    B (x)_R B~ over A (x)_R A~, basis e_i (x) e~_j at index i + rank(B) * j,
    structure constants multiplied pointwise.
    """
    if not isinstance(B.base, BaseRing) or not isinstance(Bt.base, BaseRing):
        raise RingMismatchError("tensor products need algebras over base rings")
    base = merge_bases(B.base, Bt.base)
    left = RingHom.inclusion(B.base, base)
    right = RingHom.inclusion(Bt.base, base)

    n, nt = B.rank, Bt.rank
    size = n * nt
    labels = [f"{B.labels[i]}⊗{Bt.labels[j]}" for j in range(nt) for i in range(n)]
    table = [[[base.zero] * size for _ in range(size)] for _ in range(size)]
    for j in range(nt):
        for i in range(n):
            for jj in range(nt):
                for ii in range(n):
                    row = table[i + n * j][ii + n * jj]
                    for l in range(nt):
                        c_right = Bt.table[j][jj][l]
                        if c_right.is_zero():
                            continue
                        for k in range(n):
                            c_left = B.table[i][ii][k]
                            if not c_left.is_zero():
                                row[k + n * l] = left(c_left) * right(c_right)
    unit = [left(B.unit[i]) * right(Bt.unit[j]) for j in range(nt) for i in range(n)]
    logger.debug("tensor algebra of ranks %d and %d over %s", n, nt, base)
    return MultTableAlgebra(base, labels, table, unit, validate=False)


def pure_tensor(
    B: MultTableAlgebra, Bt: MultTableAlgebra, T: MultTableAlgebra, b: AlgElement, bt: AlgElement
) -> AlgElement:
    """b (x) b~ as an element of T = tensor_algebra(B, Bt)."""

    left = RingHom.inclusion(B.base, T.base)
    right = RingHom.inclusion(Bt.base, T.base)
    n = B.rank
    coords = [T.base.zero] * T.rank
    for j, y in enumerate(bt.coords):
        for i, x in enumerate(b.coords):
            coords[i + n * j] = left(x) * right(y)
    return T.element(coords)


def tower_compose(B: MultTableAlgebra, C: MultTableAlgebra) -> MultTableAlgebra:
    """
    C|A for C free of rank n over B and B free of rank m over A, with basis
    alpha_i beta_j at index i + m * j.
    """
    if C.base != B:
        raise MembershipError("the top algebra is not defined over the given middle algebra")
    A = B.base
    m, n = B.rank, C.rank
    size = m * n
    alphas = B.basis_elements()
    labels = [f"{B.labels[i]}·{C.labels[j]}" for j in range(n) for i in range(m)]
    table = [[[A(0)] * size for _ in range(size)] for _ in range(size)]
    for j in range(n):
        for i in range(m):
            for jj in range(n):
                for ii in range(m):
                    alpha = alphas[i] * alphas[ii]
                    row = table[i + m * j][ii + m * jj]
                    for l, gamma in enumerate(C.table[j][jj]):
                        coords = (alpha * gamma).coords
                        for k in range(m):
                            row[k + m * l] = row[k + m * l] + coords[k]
    unit = [C.unit[l].coords[k] for l in range(n) for k in range(m)]
    return MultTableAlgebra(A, labels, table, unit, validate=False)


class Tower:
    """
    The tower C|B|A together with its flattening C|A and the coordinate
    translation between them.
    """

    def __init__(self, B: MultTableAlgebra, C: MultTableAlgebra) -> None:

        self.lower = B
        self.upper = C
        self.total = tower_compose(B, C)

    def flatten(self, c: AlgElement) -> AlgElement:

        if c.algebra != self.upper:
            raise MembershipError("element not in the top algebra")
        m = self.lower.rank
        coords = [None] * self.total.rank
        for l, b in enumerate(c.coords):
            for k, a in enumerate(b.coords):
                coords[k + m * l] = a
        return self.total.element(coords)

    def lift(self, x: AlgElement) -> AlgElement:

        if x.algebra != self.total:
            raise MembershipError("element not in the flattened algebra")
        m, n = self.lower.rank, self.upper.rank
        return self.upper.element(
            [self.lower.element(x.coords[m * l : m * (l + 1)]) for l in range(n)]
        )


def base_change_algebra(B: MultTableAlgebra, h: RingHom) -> MultTableAlgebra:
    """B (x)_A A' for a ring map h: A -> A'."""

    if B.base != h.source:
        raise RingMismatchError("homomorphism does not start at the algebra base")
    table = [[[h(c) for c in entry] for entry in row] for row in B.table]
    return MultTableAlgebra(h.target, B.labels, table, [h(c) for c in B.unit], validate=False)


def base_change_element(x: AlgElement, h: RingHom, target: MultTableAlgebra) -> AlgElement:

    return target.element([h(c) for c in x.coords])


def base_change_triple(T: GoodTriple, h: RingHom) -> GoodTriple:

    algebra = base_change_algebra(T.algebra, h)
    action = [[[h(a) for a in row] for row in M] for M in T.action]
    return GoodTriple(algebra, action, validate=False)
