"""
The tower of exact base rings and their elements.

A BaseRing is one of the integers, the rationals, a prime field or a
multivariate polynomial ring over one of those. Polynomial rings over
polynomial rings are flattened: appending variables to a polynomial ring gives
a polynomial ring over the same ground ring with a longer variable list. The
last variable plays the role of the distinguished variable t of R[t].

Element arithmetic is delegated to the sympy domains ZZ, QQ, GF(p) and the
sparse PolyRing, so integers are arbitrary precision and every value is kept in
the canonical form of its domain.
"""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, Optional, Sequence, Tuple, Union

from sympy import Symbol, isprime
from sympy.polys.domains import FF, QQ, ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from ..errors import NotInvertibleError, RingMismatchError, VariableError

Number = Union[int, Fraction]


class RingKind(str, Enum):
    INTEGERS = "integers"
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"
    POLY = "poly"


@dataclass(frozen=True)
class BaseRing:
    """
    A commutative ring with unit from the tower.

    Attributes
    ----------
    kind: RingKind

    modulus: int = 0
        The prime p for PRIME_FIELD, 0 otherwise.

    coefficients: BaseRing = None
        Ground ring of a POLY ring; never itself a POLY ring.

    variables: tuple<str> = ()
        Ordered, distinct variable names of a POLY ring.
    """

    kind: RingKind
    modulus: int = 0
    coefficients: Optional["BaseRing"] = None
    variables: Tuple[str, ...] = ()

    def __post_init__(self) -> None:

        if self.kind is RingKind.PRIME_FIELD and not isprime(self.modulus):
            raise RingMismatchError(
                f"modulus {self.modulus} is not prime", modulus=self.modulus
            )
        if self.kind is RingKind.POLY:
            if self.coefficients is None or self.coefficients.is_poly:
                raise RingMismatchError("polynomial ring needs a non-polynomial ground")
            if not self.variables:
                raise VariableError("polynomial ring needs at least one variable")
            if len(set(self.variables)) != len(self.variables):
                raise VariableError(
                    "variable names must be distinct", variables=list(self.variables)
                )

    # constructors

    @classmethod
    def integers(cls) -> "BaseRing":

        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> "BaseRing":

        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "BaseRing":

        return cls(RingKind.PRIME_FIELD, modulus=int(p))

    @classmethod
    def poly(cls, coefficients: "BaseRing", variables: Sequence[str]) -> "BaseRing":
        """
        Polynomial ring over `coefficients` in `variables`. A polynomial
        coefficient ring is flattened by appending the new variables.
        """
        if coefficients.is_poly:
            return cls(
                RingKind.POLY,
                coefficients=coefficients.coefficients,
                variables=coefficients.variables + tuple(variables),
            )
        return cls(RingKind.POLY, coefficients=coefficients, variables=tuple(variables))

    # structure

    @property
    def is_poly(self) -> bool:

        return self.kind is RingKind.POLY

    @property
    def ground(self) -> "BaseRing":

        return self.coefficients if self.is_poly else self

    @property
    def is_field(self) -> bool:

        return self.kind in (RingKind.RATIONALS, RingKind.PRIME_FIELD)

    @property
    def characteristic(self) -> int:

        return self.ground.modulus

    @cached_property
    def poly_ring(self) -> PolyRing:

        if not self.is_poly:
            raise VariableError(f"{self} has no variables")
        symbols = [Symbol(name) for name in self.variables]
        return PolyRing(symbols, self.coefficients.domain, grlex)

    @cached_property
    def domain(self):

        if self.kind is RingKind.INTEGERS:
            return ZZ
        if self.kind is RingKind.RATIONALS:
            return QQ
        if self.kind is RingKind.PRIME_FIELD:
            return FF(self.modulus, symmetric=False)
        return self.poly_ring.to_domain()

    def extend(self, *names: str) -> "BaseRing":
        """Append variables, giving R[names]."""

        return BaseRing.poly(self, names)

    def drop_last(self) -> "BaseRing":
        """R for a ring R[t] whose distinguished variable t is the last one."""

        if not self.is_poly:
            raise VariableError(f"{self} has no distinguished variable")
        if len(self.variables) == 1:
            return self.coefficients
        return BaseRing(
            RingKind.POLY, coefficients=self.coefficients, variables=self.variables[:-1]
        )

    def index(self, name: str) -> int:

        if name not in self.variables:
            raise VariableError(f"{name} is not a variable of {self}", variable=name)
        return self.variables.index(name)

    # elements

    def element(self, value) -> "Scalar":
        """Wrap a raw domain value without conversion."""

        if self.is_poly:
            return Polynomial(self, value)
        return Scalar(self, value)

    def __call__(self, value: Union[Number, "Scalar"] = 0) -> "Scalar":

        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatchError(
                    f"{value.ring} element given where {self} expected",
                    source=str(value.ring),
                    target=str(self),
                )
            return value
        return self.element(self.convert_number(value))

    def convert_number(self, value: Number):

        ground = self.ground
        if isinstance(value, Fraction) and value.denominator != 1:
            if ground.kind is RingKind.INTEGERS:
                raise RingMismatchError(f"{value} is not an integer")
            num = ground.domain.convert(value.numerator)
            den = ground.domain.convert(value.denominator)
            if not den:
                raise NotInvertibleError(f"{value.denominator} vanishes in {ground}")
            raw = ground.domain.quo(num, den)
        else:
            raw = ground.domain.convert(int(value))
        if self.is_poly:
            return self.poly_ring.ground_new(raw)
        return raw

    @property
    def zero(self) -> "Scalar":

        return self(0)

    @property
    def one(self) -> "Scalar":

        return self(1)

    def gen(self, name: str) -> "Polynomial":

        return self.element(self.poly_ring.gens[self.index(name)])

    def gens(self) -> Tuple["Polynomial", ...]:

        return tuple(self.element(g) for g in self.poly_ring.gens)

    def from_terms(self, terms: Dict[Tuple[int, ...], "Scalar"]) -> "Polynomial":
        """Polynomial with the given exponent vectors and ground coefficients."""

        raw = {}
        for monom, coeff in terms.items():
            if len(monom) != len(self.variables):
                raise VariableError(
                    "exponent vector does not match variables", exponents=list(monom)
                )
            value = self.coefficients(coeff).value
            if value:
                raw[tuple(int(e) for e in monom)] = value
        return self.element(self.poly_ring.from_dict(raw))

    def __str__(self) -> str:

        if self.kind is RingKind.INTEGERS:
            return "ZZ"
        if self.kind is RingKind.RATIONALS:
            return "QQ"
        if self.kind is RingKind.PRIME_FIELD:
            return f"GF({self.modulus})"
        return f"{self.coefficients}[{','.join(self.variables)}]"


class Scalar:
    """
    An exact element of a BaseRing.

    The value is the canonical element of the ring's sympy domain. Scalars are
    immutable; all arithmetic returns new Scalars and refuses operands from a
    different ring.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: BaseRing, value) -> None:

        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):

        raise AttributeError("Scalar is immutable")

    def __coerce(self, other) -> "Scalar":

        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine {self.ring} and {other.ring}",
                    left=str(self.ring),
                    right=str(other.ring),
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):

        other = self.__coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.element(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):

        other = self.__coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.element(self.value - other.value)

    def __rsub__(self, other):

        other = self.__coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.element(other.value - self.value)

    def __mul__(self, other):

        other = self.__coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.element(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":

        return self.ring.element(-self.value)

    def __pow__(self, exponent: int) -> "Scalar":

        if exponent < 0:
            return unit_inverse(self) ** (-exponent)
        return self.ring.element(self.value**exponent)

    def __eq__(self, other) -> bool:

        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            # constants compare as numbers; residues by their representative in [0, p)
            return self.is_constant() and self.to_number() == other
        return NotImplemented

    def __hash__(self) -> int:

        if self.is_constant():
            return hash(self.to_number())
        return hash((self.ring, self.value))

    def __bool__(self) -> bool:

        return bool(self.value)

    def is_zero(self) -> bool:

        return not self.value

    def is_one(self) -> bool:

        return self.value == self.ring.one.value

    def is_constant(self) -> bool:

        return not self.ring.is_poly or self.value.is_ground

    def to_number(self) -> Number:
        """Python int (integers, residues in [0, p)) or Fraction (rationals)."""

        kind = self.ring.kind
        if kind is RingKind.INTEGERS:
            return int(self.value)
        if kind is RingKind.RATIONALS:
            return Fraction(int(self.value.numerator), int(self.value.denominator))
        if kind is RingKind.PRIME_FIELD:
            return int(self.ring.domain.to_int(self.value)) % self.ring.modulus
        if self.value.is_ground:
            return self.ring.coefficients.element(self.value.LC).to_number()
        raise VariableError(f"{self} is not a constant")

    def __repr__(self) -> str:

        return f"Scalar({self.ring}, {self})"

    def __str__(self) -> str:

        if self.ring.kind is RingKind.PRIME_FIELD:
            return str(self.to_number())
        if self.ring.kind is RingKind.RATIONALS:
            return str(self.to_number())
        return str(self.value)


class Polynomial(Scalar):
    """
    An element of a POLY ring, exposing its sparse term mapping.
    """

    __slots__ = ()

    @property
    def terms(self) -> Dict[Tuple[int, ...], Scalar]:

        ground = self.ring.coefficients
        return {monom: ground.element(c) for monom, c in self.value.items()}

    def coefficient(self, monom: Sequence[int]) -> Scalar:

        return self.ring.coefficients.element(self.value.get(tuple(monom), self.ring.coefficients.domain.zero))

    def total_degree(self) -> int:

        return max((sum(m) for m in self.value.keys()), default=0)

    def sorted_terms(self):
        """Terms in decreasing graded-lex order."""

        ground = self.ring.coefficients
        return [(m, ground.element(c)) for m, c in self.value.terms(grlex)]


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """
    Exact ring operation `op` in {"add", "sub", "mul"} on two elements of the
    same ring.
    """
    if a.ring != b.ring:
        raise RingMismatchError(
            f"cannot combine {a.ring} and {b.ring}", left=str(a.ring), right=str(b.ring)
        )
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op}")


def unit_inverse(a: Scalar) -> Scalar:
    """Inverse of a unit; NotInvertibleError for non-units."""

    ring = a.ring
    if ring.is_poly:
        if not a.value.is_ground:
            raise NotInvertibleError(f"{a} is not a unit of {ring}")
        inverse = unit_inverse(ring.coefficients.element(a.value.LC))
        return ring.element(ring.poly_ring.ground_new(inverse.value))
    if not a.value:
        raise NotInvertibleError(f"0 is not a unit of {ring}")
    if ring.kind is RingKind.INTEGERS:
        if a.value not in (1, -1):
            raise NotInvertibleError(f"{a} is not a unit of {ring}")
        return a
    return ring.element(ring.domain.quo(ring.domain.one, a.value))


def is_unit(a: Scalar) -> bool:

    try:
        unit_inverse(a)
    except NotInvertibleError:
        return False
    return True


def poly_coeff(p: Scalar, k: int) -> Scalar:
    """
    Coefficient of t^k in p, where t is the distinguished last variable of the
    polynomial ring of p, as an element of the ring without t.
    """
    ring = p.ring
    if not ring.is_poly:
        raise VariableError(f"{ring} has no distinguished variable")
    lower = ring.drop_last()
    picked = {m[:-1]: c for m, c in p.value.items() if m[-1] == k}
    if not lower.is_poly:
        return lower.element(picked.get((), lower.domain.zero))
    return lower.element(lower.poly_ring.from_dict(picked))


def random_scalar(
    ring: BaseRing, rng: random.Random, bound: int = 5, degree: int = 1
) -> Scalar:
    """
    Seeded sample of `ring`. Polynomial samples have total degree at most
    `degree` with ground coefficients drawn the same way.
    """
    kind = ring.kind
    if kind is RingKind.INTEGERS:
        return ring(rng.randint(-bound, bound))
    if kind is RingKind.RATIONALS:
        return ring(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
    if kind is RingKind.PRIME_FIELD:
        return ring(rng.randrange(ring.modulus))

    terms = {}
    nvars = len(ring.variables)
    for monom in product(range(degree + 1), repeat=nvars):
        if sum(monom) <= degree and rng.random() < 0.6:
            terms[monom] = random_scalar(ring.coefficients, rng, bound)
    return ring.from_terms(terms)
