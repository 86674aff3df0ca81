"""
Subalgebras of S_n(B|A) generated by finitely many symmetric tensors, over a
field A, by closing the span under multiplication.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence

from ..errors import MembershipError, ShapeError
from ..rings import matrix as mx
from .element import SymTensor, invariant_basis

logger = logging.getLogger(__name__)


@dataclass
class Subalgebra:
    """
    Attributes
    ----------
    dimension: int
        Dimension of the generated subalgebra over A.

    ambient: int
        Dimension of S_n(B|A).

    basis: list<SymTensor>
        Linearly independent spanning elements, 1 first.
    """

    dimension: int
    ambient: int
    basis: List[SymTensor]

    @property
    def is_proper(self) -> bool:

        return self.dimension < self.ambient


def generated_subalgebra(generators: Sequence[SymTensor]) -> Subalgebra:
    """
    The A-subalgebra generated by `generators`; A must be a field.

    Products of pairs of the current basis are added until the rank stops
    growing.
    """
    if not generators:
        raise ShapeError("at least one generator is needed")
    algebra, n = generators[0].algebra, generators[0].n
    base = algebra.base
    if not getattr(base, "is_field", False):
        raise MembershipError(f"subalgebra closure needs a field, not {base}")
    for g in generators:
        if g.algebra != algebra or g.n != n or g.generators is not None:
            raise ShapeError("generators must be S_n-invariants of one tensor power")

    keys = [next(iter(s.coeffs)) for s in invariant_basis(algebra, n)]

    def vector(s: SymTensor) -> list:

        return [s.coeffs.get(key, base.zero) for key in keys]

    basis: List[SymTensor] = []
    rows: list = []

    def absorb(s: SymTensor) -> bool:

        candidate = rows + [vector(s)]
        if mx.rank(candidate, base) > len(rows):
            rows.append(candidate[-1])
            basis.append(s)
            return True
        return False

    absorb(SymTensor.one(algebra, n))
    for g in generators:
        absorb(g)

    grown = True
    while grown and len(basis) < len(keys):
        grown = False
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                if absorb(basis[i] * basis[j]):
                    grown = True
    logger.debug("generated subalgebra of dimension %d in %d", len(basis), len(keys))
    return Subalgebra(len(basis), len(keys), basis)
