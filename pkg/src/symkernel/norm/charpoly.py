"""
Characteristic coefficients chi_k(b|M): the coefficients of
det(x + b|M) = sum_k chi_k x^(n - k), computed without division.
"""

from dataclasses import dataclass
from typing import Tuple

from ..algebra import AlgElement, GoodTriple, MultTableAlgebra
from ..errors import MembershipError
from ..rings import BaseRing, RingHom, Scalar
from ..rings import matrix as mx


def fresh_variable(ring: BaseRing, name: str = "x") -> str:

    candidate, k = name, 0
    while candidate in ring.variables:
        k += 1
        candidate = f"{name}{k}"
    return candidate


def matrix_char_coefficients(M: list, base) -> list:
    """chi_0..chi_n of det(x + M) over a base ring or an algebra base."""

    if isinstance(base, MultTableAlgebra):
        return mx.berkowitz([[-a for a in row] for row in M], base.one)
    return mx.char_coefficients(M, base)


def matrix_det(M: list, base):

    if isinstance(base, MultTableAlgebra):
        return mx.generic_det(M, base.one)
    return mx.det(M, base)


@dataclass(frozen=True)
class CharPolynomial:
    """
    Attributes
    ----------
    triple: GoodTriple

    element: AlgElement

    coefficients: tuple
        chi_0 = 1, chi_1, ..., chi_n over the base of the triple.
    """

    triple: GoodTriple
    element: AlgElement
    coefficients: Tuple

    @property
    def degree(self) -> int:

        return len(self.coefficients) - 1

    @property
    def trace(self):

        return self.coefficients[1] if self.degree else self.triple.base(0)

    @property
    def norm(self):

        return self.coefficients[-1]

    def __getitem__(self, k: int):

        return self.coefficients[k]

    def as_polynomial(self, name: str = "x") -> Scalar:
        """sum_k chi_k x^(n - k) in A[x]."""

        base = self.triple.base
        if not isinstance(base, BaseRing):
            raise MembershipError("polynomial form needs a base ring")
        ring = base.extend(fresh_variable(base, name))
        x = ring.gens()[-1]
        lift = RingHom.inclusion(base, ring)
        total = ring.zero
        for k, c in enumerate(self.coefficients):
            total = total + lift(c) * x ** (self.degree - k)
        return total


def char_coeffs(b: AlgElement, triple: GoodTriple) -> CharPolynomial:

    M = triple.mult_matrix(b)
    return CharPolynomial(triple, b, tuple(matrix_char_coefficients(M, triple.base)))


def trace(b: AlgElement, triple: GoodTriple):

    return char_coeffs(b, triple).trace


def norm(b: AlgElement, triple: GoodTriple):

    return matrix_det(triple.mult_matrix(b), triple.base)
