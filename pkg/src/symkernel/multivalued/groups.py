"""
Finite abelian group objects and the transfers they admit along
multivalued morphisms.
"""

from itertools import product
from typing import Dict, Mapping, Tuple

from ..errors import AlgebraAxiomError, ShapeError
from .objects import FinSet, Label, MultiMorphism


class GroupObject:
    """
    Attributes
    ----------
    name: str

    elements: FinSet

    table: dict<(label, label), label>
        The addition.

    zero: label

    negation: dict<label, label>
    """

    def __init__(
        self,
        name: str,
        elements: FinSet,
        table: Mapping[Tuple[Label, Label], Label],
        zero: Label,
        negation: Mapping[Label, Label],
    ) -> None:

        self.name = name
        self.elements = elements
        self.table = dict(table)
        self.zero = zero
        self.negation = dict(negation)
        self.validate()

    def add(self, a: Label, b: Label) -> Label:

        return self.table[(a, b)]

    def sum(self, labels) -> Label:

        total = self.zero
        for a in labels:
            total = self.add(total, a)
        return total

    def validate(self) -> None:
        """Abelian group axioms, checked on every tuple of elements."""

        G = self.elements
        for a, b in product(G, repeat=2):
            if (a, b) not in self.table or self.table[(a, b)] not in G:
                raise AlgebraAxiomError("closure", (G.index(a) + 1, G.index(b) + 1))
        for a in G:
            if self.add(self.zero, a) != a:
                raise AlgebraAxiomError("neutral element", (G.index(a) + 1,))
            if self.add(a, self.negation[a]) != self.zero:
                raise AlgebraAxiomError("negation", (G.index(a) + 1,))
        for a, b in product(G, repeat=2):
            if self.add(a, b) != self.add(b, a):
                raise AlgebraAxiomError("commutativity", (G.index(a) + 1, G.index(b) + 1))
        for a, b, c in product(G, repeat=3):
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                raise AlgebraAxiomError(
                    "associativity", (G.index(a) + 1, G.index(b) + 1, G.index(c) + 1)
                )

    def __len__(self) -> int:

        return len(self.elements)

    def __repr__(self) -> str:

        return f"GroupObject({self.name})"


def cyclic(n: int) -> GroupObject:

    if n < 1:
        raise ShapeError("cyclic group order must be positive", order=n)
    G = FinSet(range(n))
    table = {(a, b): (a + b) % n for a in G for b in G}
    return GroupObject(f"Z/{n}", G, table, 0, {a: -a % n for a in G})


def klein() -> GroupObject:

    G = FinSet((a, b) for a in range(2) for b in range(2))
    table = {(x, y): ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2) for x in G for y in G}
    return GroupObject("Z/2xZ/2", G, table, (0, 0), {x: x for x in G})


def group_catalog() -> Dict[str, GroupObject]:

    groups = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), klein()]
    return {group.name: group for group in groups}


def transfer(
    group: GroupObject, alpha: MultiMorphism, f: Mapping[Label, Label]
) -> Dict[Label, Label]:
    """x -> sum over y in alpha(x), with multiplicity, of f(y) in the group."""

    for y in alpha.target:
        if y not in f or f[y] not in group.elements:
            raise ShapeError(f"f is not a map into {group.name} at {y!r}")
    result = {}
    for x in alpha.source:
        result[x] = group.sum(f[y] for y, c in alpha(x).items for _ in range(c))
    return result
