from .base import (
    BaseRing,
    Polynomial,
    RingKind,
    Scalar,
    arith,
    is_unit,
    poly_coeff,
    random_scalar,
    unit_inverse,
)
from .hom import RingHom, base_change

ZZ = BaseRing.integers()
QQ = BaseRing.rationals()


def GF(p: int) -> BaseRing:

    return BaseRing.prime_field(p)


__all__ = [
    "BaseRing",
    "GF",
    "Polynomial",
    "QQ",
    "RingHom",
    "RingKind",
    "Scalar",
    "ZZ",
    "arith",
    "base_change",
    "is_unit",
    "poly_coeff",
    "random_scalar",
    "unit_inverse",
]
