"""
The tensor power (B|A)^(x)n of a free algebra, its symmetric invariants and
the elementary and typed symmetric tensors.

A TensorElement is stored sparsely on n-tuples of basis indices. A SymTensor
stores the coordinates of an invariant on one representative per orbit: the
sorted tuple for S_n, the smallest tuple of the orbit for a subgroup.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from ..algebra import AlgebraMap, AlgElement, MultTableAlgebra
from ..errors import MembershipError, NotInvariantError, ResourceCapError, ShapeError
from ..rings import Scalar, random_scalar
from .perm import (
    adjacent_transpositions,
    generators_key,
    orbit,
    permute_tuple,
)

logger = logging.getLogger(__name__)

MAX_TUPLES = 50000

Terms = Dict[tuple, Scalar]


def _check_cap(count: int, cap: int) -> None:

    if count > cap:
        raise ResourceCapError(
            f"tensor expansion of {count} tuples exceeds the cap {cap}", tuples=count, cap=cap
        )


@dataclass(frozen=True)
class TypeVector:
    """
    An n-type a = (a_1, ..., a_r) of weight |a| = sum a_i <= n.
    """

    n: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:

        if any(a < 0 for a in self.entries):
            raise ShapeError("type entries must be non-negative", entries=list(self.entries))
        if self.weight > self.n:
            raise ShapeError(
                f"type of weight {self.weight} exceeds n = {self.n}", entries=list(self.entries)
            )

    @property
    def weight(self) -> int:

        return sum(self.entries)

    @property
    def length(self) -> int:

        return len(self.entries)


class TensorElement:
    """
    Attributes
    ----------
    algebra: MultTableAlgebra
        B, whose base A carries the coefficients.

    n: int

    terms: dict<tuple<int>, Scalar>
        Nonzero coefficients of e_u1 (x) ... (x) e_un.
    """

    __slots__ = ("algebra", "n", "terms")

    def __init__(self, algebra: MultTableAlgebra, n: int, terms: Optional[Terms] = None) -> None:

        self.algebra = algebra
        self.n = n
        self.terms = {u: c for u, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def zero(cls, algebra: MultTableAlgebra, n: int) -> "TensorElement":

        return cls(algebra, n)

    @classmethod
    def one(cls, algebra: MultTableAlgebra, n: int) -> "TensorElement":

        return pure([algebra.one] * n, algebra)

    def __check(self, other: "TensorElement") -> None:

        if not isinstance(other, TensorElement):
            raise MembershipError("not a tensor")
        if other.algebra != self.algebra or other.n != self.n:
            raise ShapeError(
                "tensors of different powers or algebras", left=self.n, right=other.n
            )

    def __add__(self, other: "TensorElement") -> "TensorElement":

        self.__check(other)
        terms = dict(self.terms)
        for u, c in other.terms.items():
            terms[u] = terms[u] + c if u in terms else c
        return TensorElement(self.algebra, self.n, terms)

    def __neg__(self) -> "TensorElement":

        return TensorElement(self.algebra, self.n, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":

        return self + (-other)

    def scale(self, c) -> "TensorElement":

        c = self.algebra.base(c)
        return TensorElement(self.algebra, self.n, {u: c * a for u, a in self.terms.items()})

    def __mul__(self, other) -> "TensorElement":

        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:

        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra == other.algebra and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:

        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:

        return not self.terms

    def permute(self, sigma) -> "TensorElement":

        return permute(self, sigma)

    def is_invariant(self, generators: Optional[Sequence] = None) -> bool:

        return is_invariant(self, generators)

    def __repr__(self) -> str:

        return f"TensorElement(n={self.n}, terms={len(self.terms)})"

    def __str__(self) -> str:

        if not self.terms:
            return "0"
        labels = self.algebra.labels
        parts = []
        for u in sorted(self.terms):
            pure_part = "⊗".join(labels[i] for i in u) if u else "1"
            parts.append(f"({self.terms[u]})*{pure_part}")
        return " + ".join(parts)


def pure(elements: Sequence[AlgElement], algebra: Optional[MultTableAlgebra] = None,
         cap: int = MAX_TUPLES) -> TensorElement:
    """b_1 (x) ... (x) b_n expanded in the tuple basis."""

    if algebra is None:
        if not elements:
            raise ShapeError("the algebra of an empty pure tensor must be given")
        algebra = elements[0].algebra
    for b in elements:
        if b.algebra != algebra:
            raise MembershipError("pure tensor entries from different algebras")
    supports = [[(i, c) for i, c in enumerate(b.coords) if not c.is_zero()] for b in elements]
    _check_cap(reduce(lambda acc, s: acc * len(s), supports, 1), cap)

    one = algebra.base(1)
    terms: Terms = {}
    for choice in itertools.product(*supports):
        u = tuple(i for i, _ in choice)
        terms[u] = reduce(lambda acc, ic: acc * ic[1], choice, one)
    return TensorElement(algebra, len(elements), terms)


def tensor_mul(s: TensorElement, t: TensorElement, cap: int = MAX_TUPLES) -> TensorElement:
    """Slotwise product, extended bilinearly."""

    if s.algebra != t.algebra or s.n != t.n:
        raise ShapeError("tensors of different powers or algebras", left=s.n, right=t.n)
    algebra = s.algebra
    products: Dict[Tuple[int, int], List[Tuple[int, Scalar]]] = {}

    def slot(i: int, j: int) -> List[Tuple[int, Scalar]]:

        if (i, j) not in products:
            products[(i, j)] = [
                (k, c) for k, c in enumerate(algebra.table[i][j]) if not c.is_zero()
            ]
        return products[(i, j)]

    terms: Terms = {}
    expanded = 0
    for u, a in s.terms.items():
        for v, b in t.terms.items():
            supports = [slot(i, j) for i, j in zip(u, v)]
            count = reduce(lambda acc, x: acc * len(x), supports, 1)
            expanded += count
            _check_cap(expanded, cap)
            ab = a * b
            for choice in itertools.product(*supports):
                w = tuple(k for k, _ in choice)
                c = reduce(lambda acc, kc: acc * kc[1], choice, ab)
                terms[w] = terms[w] + c if w in terms else c
    return TensorElement(algebra, s.n, terms)


def permute(t: TensorElement, sigma) -> TensorElement:

    if sigma.size != t.n:
        raise ShapeError(f"permutation of {sigma.size} points acting on {t.n} slots")
    return TensorElement(
        t.algebra, t.n, {permute_tuple(u, sigma): c for u, c in t.terms.items()}
    )


def is_invariant(t: TensorElement, generators: Optional[Sequence] = None) -> bool:
    """Invariance under the group generated by `generators` (default S_n)."""

    gens = adjacent_transpositions(t.n) if generators is None else generators
    return all(permute(t, g) == t for g in gens)


def conjugate(b: AlgElement, k: int, n: int) -> TensorElement:
    """1 (x) ... (x) b (x) ... (x) 1 with b in slot k (1-based)."""

    if not 1 <= k <= n:
        raise ShapeError(f"slot {k} out of range 1..{n}", k=k, n=n)
    algebra = b.algebra
    return pure([b if i == k else algebra.one for i in range(1, n + 1)], algebra)


class SymTensor:
    """
    An invariant tensor in orbit-sum coordinates.

    Attributes
    ----------
    algebra: MultTableAlgebra

    n: int

    coeffs: dict<tuple<int>, Scalar>
        Coefficient of each orbit sum, keyed by its representative.

    generators: tuple<Permutation> = None
        Generators of the invariance group; None stands for S_n.
    """

    __slots__ = ("algebra", "n", "coeffs", "generators")

    def __init__(
        self,
        algebra: MultTableAlgebra,
        n: int,
        coeffs: Optional[Terms] = None,
        generators: Optional[Sequence] = None,
    ) -> None:

        self.algebra = algebra
        self.n = n
        self.generators = None if generators is None else tuple(generators)
        self.coeffs: Terms = {}
        for u, c in (coeffs or {}).items():
            if c.is_zero():
                continue
            key = self.orbit_key(u)
            if key in self.coeffs:
                raise ShapeError("two coefficients given for one orbit", orbit=list(key))
            self.coeffs[key] = c

    # orbits

    def orbit_key(self, u: tuple) -> tuple:

        if self.generators is None:
            return tuple(sorted(u))
        return orbit(tuple(u), generators_key(self.generators))[0]

    def orbit(self, key: tuple) -> Iterable[tuple]:

        if self.generators is None:
            return (tuple(v) for v in multiset_permutations(list(key)))
        return orbit(tuple(key), generators_key(self.generators))

    # conversion

    @classmethod
    def from_tensor(cls, t: TensorElement, generators: Optional[Sequence] = None) -> "SymTensor":
        """Read an invariant tensor; raise NotInvariantError otherwise."""

        if not is_invariant(t, generators):
            raise NotInvariantError("tensor is not invariant under the given group", n=t.n)
        result = cls(t.algebra, t.n, generators=generators)
        for u, c in t.terms.items():
            result.coeffs.setdefault(result.orbit_key(u), c)
        return result

    def to_tensor(self) -> TensorElement:

        terms: Terms = {}
        for key, c in self.coeffs.items():
            for u in self.orbit(key):
                terms[u] = c
        _check_cap(len(terms), MAX_TUPLES)
        return TensorElement(self.algebra, self.n, terms)

    # arithmetic

    def __check(self, other: "SymTensor") -> None:

        if not isinstance(other, SymTensor):
            raise MembershipError("not a symmetric tensor")
        if other.algebra != self.algebra or other.n != self.n:
            raise ShapeError("symmetric tensors of different powers or algebras")
        if other.generators != self.generators:
            raise ShapeError("symmetric tensors for different groups")

    def __copy_with(self, coeffs: Terms) -> "SymTensor":

        result = SymTensor(self.algebra, self.n, generators=self.generators)
        result.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}
        return result

    def __add__(self, other: "SymTensor") -> "SymTensor":

        self.__check(other)
        coeffs = dict(self.coeffs)
        for key, c in other.coeffs.items():
            coeffs[key] = coeffs[key] + c if key in coeffs else c
        return self.__copy_with(coeffs)

    def __neg__(self) -> "SymTensor":

        return self.__copy_with({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "SymTensor") -> "SymTensor":

        return self + (-other)

    def scale(self, c) -> "SymTensor":

        c = self.algebra.base(c)
        return self.__copy_with({k: c * a for k, a in self.coeffs.items()})

    def __mul__(self, other) -> "SymTensor":

        if isinstance(other, SymTensor):
            self.__check(other)
            product = tensor_mul(self.to_tensor(), other.to_tensor())
            result = SymTensor(self.algebra, self.n, generators=self.generators)
            for u, c in product.terms.items():
                result.coeffs.setdefault(result.orbit_key(u), c)
            return result
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SymTensor":

        result = SymTensor.one(self.algebra, self.n, self.generators)
        for _ in range(exponent):
            result = result * self
        return result

    @classmethod
    def one(cls, algebra: MultTableAlgebra, n: int, generators=None) -> "SymTensor":

        return cls.from_tensor(TensorElement.one(algebra, n), generators)

    @classmethod
    def zero(cls, algebra: MultTableAlgebra, n: int, generators=None) -> "SymTensor":

        return cls(algebra, n, generators=generators)

    def __eq__(self, other) -> bool:

        if not isinstance(other, SymTensor):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.n == other.n
            and self.generators == other.generators
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:

        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:

        return not self.coeffs

    def __repr__(self) -> str:

        return f"SymTensor(n={self.n}, orbits={len(self.coeffs)})"

    def __str__(self) -> str:

        if not self.coeffs:
            return "0"
        labels = self.algebra.labels
        return " + ".join(
            f"({self.coeffs[k]})*O[{','.join(labels[i] for i in k)}]" for k in sorted(self.coeffs)
        )


def typed_sym(a: Sequence[int], bs: Sequence[AlgElement], n: int,
              algebra: Optional[MultTableAlgebra] = None) -> SymTensor:
    """
    rho_a(b_1, ..., b_r): the sum over all maps f: [n] -> {0..r} with fibre
    sizes a_i over i of b_f(1) (x) ... (x) b_f(n), where b_0 = 1.
    """
    a_type = TypeVector(n, tuple(a))
    if len(bs) != a_type.length:
        raise ShapeError(f"{a_type.length} entries expected, got {len(bs)}")
    if algebra is None:
        if not bs:
            raise ShapeError("the algebra of an empty type must be given")
        algebra = bs[0].algebra
    entries = [algebra.one] + list(bs)
    slots = [i + 1 for i, ai in enumerate(a_type.entries) for _ in range(ai)]
    slots += [0] * (n - a_type.weight)

    total = TensorElement.zero(algebra, n)
    for arrangement in multiset_permutations(slots):
        total = total + pure([entries[i] for i in arrangement], algebra)
    return SymTensor.from_tensor(total)


def elem_sym(b: AlgElement, k: int, n: int) -> SymTensor:
    """rho_k(b): the k-subsets of slots carry b, the others 1."""

    if not 0 <= k <= n:
        raise ShapeError(f"k = {k} out of range 0..{n}", k=k, n=n)
    return typed_sym((k,), [b], n)


def invariant_basis(
    algebra: MultTableAlgebra, n: int, generators: Optional[Sequence] = None,
    cap: int = MAX_TUPLES,
) -> List[SymTensor]:
    """
    Orbit sums of the tuple basis. For S_n these are the rho_a(e) of weight
    n on distinct basis vectors, one per multiset of basis indices.
    """
    r = algebra.rank
    one = algebra.base(1)
    if generators is None:
        keys = list(itertools.combinations_with_replacement(range(r), n))
    else:
        _check_cap(r**n, cap)
        gens_key = generators_key(generators)
        keys = sorted({orbit(u, gens_key)[0] for u in itertools.product(range(r), repeat=n)})
    basis = [SymTensor(algebra, n, {key: one}, generators) for key in keys]
    logger.debug("invariant basis of rank %d power %d: %d orbits", r, n, len(basis))
    return basis


def is_partition_basis(basis: Sequence[SymTensor]) -> bool:
    """
    The tuple-coordinate matrix of the basis is a 0/1 partition matrix: every
    tuple occurs in exactly one basis element, with coefficient 1.
    """
    if not basis:
        return True
    algebra, n = basis[0].algebra, basis[0].n
    seen = set()
    for s in basis:
        for u, c in s.to_tensor().terms.items():
            if not c.is_one() or u in seen:
                return False
            seen.add(u)
    return len(seen) == algebra.rank**n


def tensor_power_map(f: AlgebraMap, t: TensorElement) -> TensorElement:
    """f^(x)n(t) for an algebra map f: B -> B'."""

    if t.algebra != f.source:
        raise MembershipError("tensor is not over the source of the map")
    images = [f(e) for e in f.source.basis_elements()]
    total = TensorElement.zero(f.target, t.n)
    for u, c in t.terms.items():
        total = total + pure([images[i] for i in u], f.target).scale(c)
    return total


def random_invariant(
    algebra: MultTableAlgebra, n: int, rng: random.Random, terms: int = 3, bound: int = 3
) -> SymTensor:
    """Seeded S_n-invariant with at most `terms` orbit sums."""

    keys = list(itertools.combinations_with_replacement(range(algebra.rank), n))
    chosen = rng.sample(keys, min(terms, len(keys)))
    return SymTensor(
        algebra, n, {key: random_scalar(algebra.base, rng, bound) for key in sorted(chosen)}
    )
