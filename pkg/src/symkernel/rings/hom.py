"""
Ring homomorphisms between rings of the tower, used for base change.
"""

import random
from typing import Mapping, Optional

from ..errors import RingMismatchError, VariableError
from .base import BaseRing, RingKind, Scalar, random_scalar


def _canonical_ground_map(source: BaseRing, target: BaseRing) -> bool:

    if source == target:
        return True
    if source.kind is RingKind.INTEGERS:
        return True
    if source.kind is RingKind.RATIONALS:
        return target.kind is RingKind.RATIONALS
    return target.kind is RingKind.PRIME_FIELD and target.modulus == source.modulus


class RingHom:
    """
    A ring homomorphism source -> target.

    Ground coefficients map canonically (ZZ into anything, QQ into QQ-algebras,
    GF(p) into GF(p)-algebras); each variable of a polynomial source is sent to
    the supplied image.

    Attributes
    ----------
    source: BaseRing

    target: BaseRing

    variable_images: dict<str, Scalar>
    """

    def __init__(
        self,
        source: BaseRing,
        target: BaseRing,
        variable_images: Optional[Mapping[str, Scalar]] = None,
    ) -> None:

        if not _canonical_ground_map(source.ground, target.ground):
            raise RingMismatchError(
                f"no canonical map {source.ground} -> {target.ground}",
                source=str(source),
                target=str(target),
            )
        images = dict(variable_images or {})
        for name in source.variables:
            if name not in images:
                raise VariableError(f"no image for variable {name}", variable=name)
            images[name] = target(images[name])
        extra = set(images) - set(source.variables)
        if extra:
            raise VariableError(
                "images given for unknown variables", variables=sorted(extra)
            )

        self.source = source
        self.target = target
        self.variable_images = images

    @classmethod
    def identity(cls, ring: BaseRing) -> "RingHom":

        images = {name: ring.gen(name) for name in ring.variables}
        return cls(ring, ring, images)

    @classmethod
    def inclusion(cls, source: BaseRing, target: BaseRing) -> "RingHom":
        """Each variable of the source goes to the equally named one of the target."""

        images = {name: target.gen(name) for name in source.variables}
        return cls(source, target, images)

    @classmethod
    def reduction(cls, source: BaseRing, p: int) -> "RingHom":
        """Reduction mod p of an integral ring, keeping variables."""

        field = BaseRing.prime_field(p)
        target = BaseRing.poly(field, source.variables) if source.is_poly else field
        return cls.inclusion(source, target)

    def __ground(self, value: Scalar) -> Scalar:

        return self.target(value.to_number())

    def __call__(self, x: Scalar) -> Scalar:

        return base_change(x, self)

    def apply(self, x: Scalar) -> Scalar:

        if x.ring != self.source:
            raise RingMismatchError(
                f"{x.ring} element given to a map from {self.source}",
                source=str(self.source),
                given=str(x.ring),
            )
        if not self.source.is_poly:
            return self.__ground(x)

        images = [self.variable_images[name] for name in self.source.variables]
        total = self.target.zero
        for monom, coeff in x.terms.items():
            term = self.__ground(coeff)
            for image, exponent in zip(images, monom):
                if exponent:
                    term = term * image**exponent
            total = total + term
        return total

    def compose(self, before: "RingHom") -> "RingHom":
        """self after `before`."""

        if before.target != self.source:
            raise RingMismatchError("homomorphisms do not compose")
        images = {name: self(image) for name, image in before.variable_images.items()}
        return RingHom(before.source, self.target, images)

    def verify(self, rng: random.Random, samples: int = 10) -> bool:
        """
        Sampled homomorphism check: 0 and 1 are preserved and the map is
        additive and multiplicative on random pairs.
        """
        if not (self(self.source.zero).is_zero() and self(self.source.one).is_one()):
            return False
        for _ in range(samples):
            a = random_scalar(self.source, rng)
            b = random_scalar(self.source, rng)
            if self(a + b) != self(a) + self(b):
                return False
            if self(a * b) != self(a) * self(b):
                return False
        return True

    def __repr__(self) -> str:

        return f"RingHom({self.source} -> {self.target})"


def base_change(x: Scalar, h: RingHom) -> Scalar:
    """Image of x under h, in canonical form in h.target."""

    return h.apply(x)
