"""
Free commutative algebras presented by multiplication tables.

A MultTableAlgebra B over a base A has basis e_1..e_n and structure constants
c_ij^k with e_i e_j = sum_k c_ij^k e_k. The base is either a BaseRing or
another MultTableAlgebra; the latter carries the top of an algebra tower, whose
structure constants are elements of the lower algebra.
"""

import logging
import random
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Union

from ..errors import AlgebraAxiomError, MembershipError, ShapeError
from ..rings import BaseRing, Scalar, random_scalar

logger = logging.getLogger(__name__)


class MultTableAlgebra:
    """
    Attributes
    ----------
    base: BaseRing | MultTableAlgebra
        The ring A.

    labels: tuple<str>
        Basis names, in basis order.

    table: list<list<list<coefficient>>>
        table[i][j][k] = c_ij^k, 0-based.

    unit: tuple<coefficient>
        Coordinates of 1.
    """

    def __init__(
        self,
        base: Union[BaseRing, "MultTableAlgebra"],
        labels: Sequence[str],
        table: Sequence[Sequence[Sequence]],
        unit: Sequence,
        validate: bool = True,
    ) -> None:

        n = len(labels)
        if len(set(labels)) != n:
            raise ShapeError("basis labels must be distinct", labels=list(labels))
        if len(table) != n or any(len(row) != n for row in table):
            raise ShapeError(f"table must be {n} x {n} x {n}")
        if any(len(entry) != n for row in table for entry in row):
            raise ShapeError(f"table must be {n} x {n} x {n}")
        if len(unit) != n:
            raise ShapeError(f"unit must have {n} coordinates")

        self.base = base
        self.labels = tuple(labels)
        self.table = [[[base(c) for c in entry] for entry in row] for row in table]
        self.unit = tuple(base(c) for c in unit)
        if validate:
            self.validate()

    @property
    def rank(self) -> int:

        return len(self.labels)

    @property
    def ground(self) -> BaseRing:
        """The BaseRing at the bottom of the tower."""

        base = self.base
        while isinstance(base, MultTableAlgebra):
            base = base.base
        return base

    @cached_property
    def key(self) -> tuple:

        return (
            self.base,
            self.labels,
            tuple(tuple(tuple(entry) for entry in row) for row in self.table),
            self.unit,
        )

    def __eq__(self, other) -> bool:

        if self is other:
            return True
        return isinstance(other, MultTableAlgebra) and self.key == other.key

    def __hash__(self) -> int:

        return hash(self.key)

    # elements

    def element(self, coords: Sequence) -> "AlgElement":

        if len(coords) != self.rank:
            raise ShapeError(f"{self.rank} coordinates expected, got {len(coords)}")
        return AlgElement(self, tuple(self.base(c) for c in coords))

    def basis(self, i: int) -> "AlgElement":

        zero, one = self.base(0), self.base(1)
        return AlgElement(self, tuple(one if j == i else zero for j in range(self.rank)))

    def basis_elements(self) -> List["AlgElement"]:

        return [self.basis(i) for i in range(self.rank)]

    def label_index(self, label: str) -> int:

        if label not in self.labels:
            raise MembershipError(f"no basis element {label}", label=label)
        return self.labels.index(label)

    @cached_property
    def unit_index(self) -> Optional[int]:
        """Index of the basis vector equal to 1, if there is one."""

        for i in range(self.rank):
            if self.basis(i) == self.one:
                return i
        return None

    @property
    def zero(self) -> "AlgElement":

        return self.element([self.base(0)] * self.rank)

    @property
    def one(self) -> "AlgElement":

        return AlgElement(self, self.unit)

    def __call__(self, value=0) -> "AlgElement":
        """Coerce a base element or number to value * 1."""

        if isinstance(value, AlgElement):
            if value.algebra != self:
                raise MembershipError("element of another algebra")
            return value
        if isinstance(value, str):
            return self.basis(self.label_index(value))
        return self.one * self.base(value)

    # structure

    def mul_coords(self, x: Sequence, y: Sequence) -> tuple:

        n = self.rank
        result = [self.base(0)] * n
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in enumerate(y):
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in enumerate(self.table[i][j]):
                    if not c.is_zero():
                        result[k] = result[k] + ab * c
        return tuple(result)

    def left_matrix(self, i: int) -> list:
        """Matrix of multiplication by e_i: column j holds the coordinates of e_i e_j."""

        n = self.rank
        return [[self.table[i][j][k] for j in range(n)] for k in range(n)]

    def validate(self) -> None:
        """
        Raise AlgebraAxiomError naming the first violated axiom and its
        1-based indices.
        """
        n = self.rank
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    if self.table[i][j][k] != self.table[j][i][k]:
                        raise AlgebraAxiomError("non-commutative", (i + 1, j + 1, k + 1))

        basis = self.basis_elements()
        for i in range(n):
            if self.one * basis[i] != basis[i]:
                raise AlgebraAxiomError("bad unit", (i + 1,))

        for i in range(n):
            for j in range(n):
                ij = basis[i] * basis[j]
                for l in range(n):
                    if ij * basis[l] != basis[i] * (basis[j] * basis[l]):
                        raise AlgebraAxiomError("non-associative", (i + 1, j + 1, l + 1))
        logger.debug("validated algebra of rank %d over %s", n, self.base)

    def __repr__(self) -> str:

        return f"MultTableAlgebra({self.base}, {list(self.labels)})"

    def __str__(self) -> str:

        return f"<{','.join(self.labels)}>/{self.base}"


class AlgElement:
    """An element of a MultTableAlgebra, by its coordinates over the base."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: MultTableAlgebra, coords: tuple) -> None:

        self.algebra = algebra
        self.coords = coords

    def __check(self, other) -> "AlgElement":

        if isinstance(other, AlgElement):
            if other.algebra != self.algebra:
                raise MembershipError("elements of different algebras")
            return other
        return self.algebra(other)

    def __add__(self, other) -> "AlgElement":

        other = self.__check(other)
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other) -> "AlgElement":

        other = self.__check(other)
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other) -> "AlgElement":

        return self.__check(other) - self

    def __neg__(self) -> "AlgElement":

        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other) -> "AlgElement":

        if isinstance(other, AlgElement) and other.algebra == self.algebra:
            return AlgElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))
        if isinstance(other, AlgElement):
            raise MembershipError("elements of different algebras")
        if isinstance(other, (int, Fraction, Scalar)) or isinstance(
            self.algebra.base, MultTableAlgebra
        ):
            c = self.algebra.base(other)
            return AlgElement(self.algebra, tuple(c * a for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "AlgElement":

        result = self.algebra.one
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:

        if isinstance(other, AlgElement):
            return self.algebra == other.algebra and self.coords == other.coords
        if isinstance(other, (int, Fraction, Scalar)):
            return self == self.algebra(other)
        return NotImplemented

    def __hash__(self) -> int:

        return hash(self.coords)

    def is_zero(self) -> bool:

        return all(c.is_zero() for c in self.coords)

    def is_one(self) -> bool:

        return self.coords == self.algebra.unit

    def __bool__(self) -> bool:

        return not self.is_zero()

    def __repr__(self) -> str:

        return f"AlgElement({self})"

    def __str__(self) -> str:

        parts = [
            f"({c})*{label}"
            for c, label in zip(self.coords, self.algebra.labels)
            if not c.is_zero()
        ]
        return " + ".join(parts) or "0"


def make_algebra(
    base: BaseRing,
    rank: int,
    table: Sequence,
    unit: Sequence,
    labels: Optional[Sequence[str]] = None,
) -> MultTableAlgebra:
    """Validated algebra of the given rank; AlgebraAxiomError names a violation."""

    labels = labels or [f"e{i}" for i in range(1, rank + 1)]
    if len(labels) != rank:
        raise ShapeError(f"{rank} labels expected")
    return MultTableAlgebra(base, labels, table, unit)


def random_element(algebra: MultTableAlgebra, rng: random.Random, bound: int = 3) -> AlgElement:
    """Seeded sample; coordinates over an algebra base are sampled recursively."""

    base = algebra.base
    if isinstance(base, MultTableAlgebra):
        return algebra.element([random_element(base, rng, bound) for _ in range(algebra.rank)])
    return algebra.element([random_scalar(base, rng, bound) for _ in range(algebra.rank)])


def alg_mul(x: AlgElement, y: AlgElement) -> AlgElement:

    if x.algebra != y.algebra:
        raise MembershipError("elements of different algebras")
    return x * y


class AlgebraMap:
    """
    A unital base-linear ring map between algebras over the same base, given
    by the images of the source basis.
    """

    def __init__(
        self, source: MultTableAlgebra, target: MultTableAlgebra, images: Sequence[AlgElement]
    ) -> None:

        if source.base != target.base:
            raise MembershipError("algebra map needs a common base")
        if len(images) != source.rank:
            raise ShapeError(f"{source.rank} images expected")
        self.source = source
        self.target = target
        self.images = [target(image) for image in images]
        self.validate()

    def __call__(self, x: AlgElement) -> AlgElement:

        if x.algebra != self.source:
            raise MembershipError("element not in the source algebra")
        total = self.target.zero
        for c, image in zip(x.coords, self.images):
            if not c.is_zero():
                total = total + image * c
        return total

    def validate(self) -> None:

        if self(self.source.one) != self.target.one:
            raise AlgebraAxiomError("map is not unital", ())
        basis = self.source.basis_elements()
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                if self(x * y) != self(x) * self(y):
                    raise AlgebraAxiomError("map is not multiplicative", (i + 1, j + 1))

    @classmethod
    def identity(cls, algebra: MultTableAlgebra) -> "AlgebraMap":

        return cls(algebra, algebra, algebra.basis_elements())
