"""
Divided powers Gamma_d(M|A) of a free module M = A^r with basis e_1..e_r.

The basis monomial gamma_d1(e_1) * ... * gamma_dr(e_r) with d_1 + ... + d_r = d
is keyed by its exponent vector (d_1, ..., d_r). The comparison map to
symmetric tensors sends it to rho_(d_1, ..., d_r)(e_1, ..., e_r), the orbit
sum of the sorted tuple with e_i repeated d_i times.
"""

import itertools
import logging
import random
from enum import Enum
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .algebra import (
    AlgElement,
    GoodTriple,
    MultTableAlgebra,
    base_change_element,
    base_change_triple,
    random_element,
)
from .errors import MembershipError, ShapeError
from .norm import Symmetrization, char_coeffs, fresh_variable
from .rings import BaseRing, RingHom, RingKind, random_scalar
from .tensor import SymTensor, TensorElement, pure, sigma_map, tau_map
from .witness import CheckResult, combine

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


def exponent_vectors(rank: int, degree: int) -> Iterator[Exponents]:
    """All (d_1, ..., d_r) with sum d, in decreasing lexicographic order."""

    if rank == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in exponent_vectors(rank - 1, degree - first):
            yield (first,) + rest


class DividedElement:
    """
    Attributes
    ----------
    base: BaseRing

    labels: tuple<str>
        Basis of M.

    degree: int

    terms: dict<tuple<int>, Scalar>
        Nonzero coefficients of the basis monomials, by exponent vector.
    """

    __slots__ = ("base", "labels", "degree", "terms")

    def __init__(
        self,
        base: BaseRing,
        labels: Sequence[str],
        degree: int,
        terms: Optional[Dict[Exponents, object]] = None,
    ) -> None:

        self.base = base
        self.labels = tuple(labels)
        self.degree = degree
        self.terms = {}
        for delta, c in (terms or {}).items():
            delta = tuple(delta)
            if len(delta) != len(self.labels) or sum(delta) != degree or min(delta, default=0) < 0:
                raise ShapeError(
                    f"exponent vector {list(delta)} is not of degree {degree}", degree=degree
                )
            c = base(c)
            if not c.is_zero():
                self.terms[delta] = c

    @classmethod
    def one(cls, base: BaseRing, labels: Sequence[str]) -> "DividedElement":

        return cls(base, labels, 0, {(0,) * len(labels): base.one})

    @classmethod
    def basis(cls, base: BaseRing, labels: Sequence[str], degree: int) -> List["DividedElement"]:

        return [
            cls(base, labels, degree, {delta: base.one})
            for delta in exponent_vectors(len(labels), degree)
        ]

    def __check(self, other: "DividedElement") -> None:

        if not isinstance(other, DividedElement):
            raise MembershipError("not a divided power")
        if other.base != self.base or other.labels != self.labels:
            raise MembershipError("divided powers of different modules")

    def __add__(self, other: "DividedElement") -> "DividedElement":

        self.__check(other)
        if other.degree != self.degree:
            raise ShapeError("cannot add divided powers of different degrees")
        terms = dict(self.terms)
        for delta, c in other.terms.items():
            terms[delta] = terms[delta] + c if delta in terms else c
        return DividedElement(self.base, self.labels, self.degree, terms)

    def __neg__(self) -> "DividedElement":

        return self.scale(-1)

    def __sub__(self, other: "DividedElement") -> "DividedElement":

        return self + (-other)

    def scale(self, c) -> "DividedElement":

        c = self.base(c)
        return DividedElement(
            self.base, self.labels, self.degree, {d: c * a for d, a in self.terms.items()}
        )

    def __mul__(self, other) -> "DividedElement":

        if isinstance(other, DividedElement):
            return star_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:

        if not isinstance(other, DividedElement):
            return NotImplemented
        return (
            self.base == other.base
            and self.labels == other.labels
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self) -> int:

        return hash((self.labels, self.degree, frozenset(self.terms.items())))

    def is_zero(self) -> bool:

        return not self.terms

    def __repr__(self) -> str:

        return f"DividedElement(degree={self.degree}, terms={len(self.terms)})"

    def __str__(self) -> str:

        if not self.terms:
            return "0"
        parts = []
        for delta in sorted(self.terms, reverse=True):
            monomial = "*".join(
                f"γ{d}({label})" for d, label in zip(delta, self.labels) if d
            ) or "1"
            parts.append(f"({self.terms[delta]})*{monomial}")
        return " + ".join(parts)


def _coords(m: Union[AlgElement, Sequence]) -> tuple:

    return tuple(m.coords) if isinstance(m, AlgElement) else tuple(m)


def gamma_of(
    m: Union[AlgElement, Sequence],
    d: int,
    labels: Optional[Sequence[str]] = None,
) -> DividedElement:
    """gamma_d(sum a_i e_i) = sum over |delta| = d of prod a_i^delta_i [delta]."""

    if d < 0:
        raise ShapeError("degree must be non-negative", degree=d)
    coords = _coords(m)
    if labels is None:
        if not isinstance(m, AlgElement):
            raise ShapeError("labels are needed for a bare coordinate vector")
        labels = m.algebra.labels
    if len(labels) != len(coords):
        raise ShapeError(f"{len(labels)} coordinates expected, got {len(coords)}")
    base = coords[0].ring if coords else None
    if base is None:
        raise ShapeError("the zero module has no divided powers to compute here")

    support = [i for i, a in enumerate(coords) if not a.is_zero()]
    terms: Dict[Exponents, object] = {}
    for partial in exponent_vectors(len(support), d):
        delta = [0] * len(coords)
        c = base.one
        for i, k in zip(support, partial):
            delta[i] = k
            if k:
                c = c * coords[i] ** k
        terms[tuple(delta)] = c
    return DividedElement(base, labels, d, terms)


def star_mul(u: DividedElement, v: DividedElement) -> DividedElement:
    """[delta] * [eps] = prod_i C(delta_i + eps_i, delta_i) [delta + eps]."""

    if u.base != v.base or u.labels != v.labels:
        raise MembershipError("divided powers of different modules")
    terms: Dict[Exponents, object] = {}
    for delta, a in u.terms.items():
        for eps, b in v.terms.items():
            factor = 1
            for x, y in zip(delta, eps):
                factor *= comb(x + y, x)
            key = tuple(x + y for x, y in zip(delta, eps))
            c = a * b * factor
            terms[key] = terms[key] + c if key in terms else c
    return DividedElement(u.base, u.labels, u.degree + v.degree, terms)


def orbit_key(delta: Exponents) -> tuple:

    return tuple(i for i, k in enumerate(delta) for _ in range(k))


def exponents_of(key: Sequence[int], rank: int) -> Exponents:

    delta = [0] * rank
    for i in key:
        delta[i] += 1
    return tuple(delta)


def gamma_compare(u: DividedElement, algebra: MultTableAlgebra) -> SymTensor:
    """Gamma_n(B|A) -> S_n(B|A), [delta] -> rho_delta(e)."""

    if algebra.labels != u.labels or algebra.base != u.base:
        raise MembershipError("divided power is not over the given algebra")
    return SymTensor(
        algebra, u.degree, {orbit_key(delta): c for delta, c in u.terms.items()}
    )


def gamma_from_sym(t: SymTensor) -> DividedElement:
    """Inverse of gamma_compare."""

    if t.generators is not None:
        t = SymTensor.from_tensor(t.to_tensor())
    r = t.algebra.rank
    return DividedElement(
        t.algebra.base, t.algebra.labels, t.n,
        {exponents_of(key, r): c for key, c in t.coeffs.items()},
    )


def gamma_mul(u: DividedElement, v: DividedElement, algebra: MultTableAlgebra) -> DividedElement:
    """The algebra product of Gamma_n(B|A), transported from S_n(B|A)."""

    if u.degree != v.degree:
        raise ShapeError("the algebra product needs equal degrees")
    return gamma_from_sym(gamma_compare(u, algebra) * gamma_compare(v, algebra))


def theta_div(u: DividedElement, triple: GoodTriple):
    """theta o gamma_compare; theta_div(gamma_n(b)) = det(b|M)."""

    if u.degree != triple.module_rank:
        raise ShapeError(
            f"degree {u.degree} does not match module rank {triple.module_rank}",
            degree=u.degree, rank=triple.module_rank,
        )
    return Symmetrization(triple)(gamma_compare(u, triple.algebra))


def sigma_gamma(u: DividedElement, m: int, n: int) -> Dict[Tuple[Exponents, Exponents], object]:
    """Gamma_(m+n)(M) -> Gamma_m(M) (x) Gamma_n(M), [eps] -> sum over delta + delta' = eps."""

    if u.degree != m + n:
        raise ShapeError(f"degree {u.degree} is not {m} + {n}")
    result: Dict[Tuple[Exponents, Exponents], object] = {}
    for eps, c in u.terms.items():
        for delta in itertools.product(*(range(e + 1) for e in eps)):
            if sum(delta) != m:
                continue
            rest = tuple(e - d for e, d in zip(eps, delta))
            result[(tuple(delta), rest)] = c
    return result


def _exponent_multisets(
    eps: Exponents, candidates: List[Exponents], m: int, start: int
) -> Iterator[Tuple[Exponents, ...]]:

    if m == 0:
        if not any(eps):
            yield ()
        return
    for idx in range(start, len(candidates)):
        delta = candidates[idx]
        if all(d <= e for d, e in zip(delta, eps)):
            rest = tuple(e - d for e, d in zip(eps, delta))
            for tail in _exponent_multisets(rest, candidates, m - 1, idx):
                yield (delta,) + tail


def tau_gamma(u: DividedElement, m: int, n: int) -> Dict[Tuple[Exponents, ...], object]:
    """
    Gamma_mn(M) -> Gamma_m(Gamma_n(M)), [eps] -> sum of [Delta] over multisets
    Delta of m degree-n exponent vectors adding up to eps.
    """
    if u.degree != m * n:
        raise ShapeError(f"degree {u.degree} is not {m} x {n}")
    candidates = list(exponent_vectors(len(u.labels), n))
    result: Dict[Tuple[Exponents, ...], object] = {}
    for eps, c in u.terms.items():
        for Delta in _exponent_multisets(eps, candidates, m, 0):
            result[Delta] = c
    return result


# checks


def check_relations(
    algebra: MultTableAlgebra, rng: random.Random, samples: int = 30, max_degree: int = 3
) -> CheckResult:
    """The defining relations of divided powers on random elements."""

    name = "divided_relations"
    base, labels = algebra.base, algebra.labels
    one = DividedElement.one(base, labels)
    for i in range(samples):
        x, y = random_element(algebra, rng), random_element(algebra, rng)
        a = random_scalar(base, rng)
        d = rng.randint(0, max_degree)
        e = rng.randint(0, max_degree)
        failures = []
        if gamma_of(x, 0) != one:
            failures.append("gamma_0")
        if gamma_of(x * a, d) != gamma_of(x, d).scale(a**d):
            failures.append("scaling")
        expanded = DividedElement(base, labels, d)
        for k in range(d + 1):
            expanded = expanded + gamma_of(x, k) * gamma_of(y, d - k)
        if gamma_of(x + y, d) != expanded:
            failures.append("addition")
        if gamma_of(x, d) * gamma_of(x, e) != gamma_of(x, d + e).scale(comb(d + e, d)):
            failures.append("star_power")
        if failures:
            return CheckResult.failed(
                name, {"x": str(x), "y": str(y), "a": str(a), "d": d, "e": e,
                       "relations": failures}, i,
            )
    return CheckResult.passed(name, samples)


def check_comparison(
    algebra: MultTableAlgebra, n: int, rng: random.Random, samples: int = 30
) -> CheckResult:
    """
    gamma_compare maps the exponent basis bijectively onto the orbit basis,
    sends gamma_n(m) to m^(x)n and intertwines sigma and tau.
    """
    name = "divided_comparison"
    basis = DividedElement.basis(algebra.base, algebra.labels, n)
    images = {next(iter(gamma_compare(u, algebra).coeffs)) for u in basis}
    expected = set(itertools.combinations_with_replacement(range(algebra.rank), n))
    if images != expected:
        return CheckResult.failed(name, {"route": "basis", "n": n}, 0)

    for i in range(samples):
        m = random_element(algebra, rng)
        if gamma_compare(gamma_of(m, n), algebra) != SymTensor.from_tensor(pure([m] * n, algebra)):
            return CheckResult.failed(name, {"route": "power", "m": str(m), "n": n}, i)

    for j, u in enumerate(basis):
        t = gamma_compare(u, algebra)
        for k in range(n + 1):
            split = sigma_map(t, (k, n - k))
            moved = {
                (orbit_key(a), orbit_key(b)): c for (a, b), c in sigma_gamma(u, k, n - k).items()
            }
            if split.coeffs != moved:
                return CheckResult.failed(name, {"route": "sigma", "u": str(u), "m": k}, j)
        for m in range(1, n + 1):
            if n % m:
                continue
            nested = tau_map(t, m, n // m)
            moved = {
                tuple(sorted(orbit_key(delta) for delta in Delta)): c
                for Delta, c in tau_gamma(u, m, n // m).items()
            }
            if nested.coeffs != moved:
                return CheckResult.failed(name, {"route": "tau", "u": str(u), "m": m}, j)
    return CheckResult.passed(name, samples + len(basis))


class LawKind(str, Enum):
    TENSOR_POWER = "tensor_power"
    DETERMINANT = "determinant"


def standard_homs(base: BaseRing, prime: int = 5) -> List[RingHom]:
    """Identity, the generic point A -> A[t] and, over ZZ, reduction mod p."""

    homs = [RingHom.identity(base)]
    t = fresh_variable(base, "t")
    homs.append(RingHom.inclusion(base, base.extend(t)))
    if base.ground.kind is RingKind.INTEGERS:
        homs.append(RingHom.reduction(base, prime))
    return homs


def law_check(
    triple: GoodTriple,
    kind: Union[LawKind, str],
    rng: random.Random,
    homs: Optional[Sequence[RingHom]] = None,
    samples: int = 30,
) -> CheckResult:
    """
    Homogeneity F(a m) = a^n F(m), F(1) = 1, multiplicativity F(xy) = F(x)F(y)
    and naturality under each base change, for the n-th tensor power law or
    the determinant law of the triple.
    """
    kind = LawKind(kind)
    n = triple.module_rank
    homs = list(homs) if homs is not None else standard_homs(triple.base)

    def transport(hom: RingHom, value, algebra: MultTableAlgebra):

        if kind is LawKind.DETERMINANT:
            return hom(value)
        return TensorElement(algebra, n, {u: hom(c) for u, c in value.terms.items()})

    def law(target: GoodTriple, m: AlgElement):

        if kind is LawKind.DETERMINANT:
            return char_coeffs(m, target)[n]
        return pure([m] * n, target.algebra)

    results = []
    for hom in homs:
        name = f"law_{kind.value}_{hom.target}"
        changed = base_change_triple(triple, hom)
        algebra, base = changed.algebra, changed.base

        def fail(payload: dict, checked: int) -> CheckResult:

            return CheckResult.failed(name, dict(payload, target=str(base)), checked)

        one_value = law(changed, algebra.one)
        expected_one = base.one if kind is LawKind.DETERMINANT else pure([algebra.one] * n, algebra)
        if one_value != expected_one:
            results.append(fail({"law": "unit"}, 0))
            continue

        failed = None
        for i in range(samples):
            x, y = random_element(algebra, rng), random_element(algebra, rng)
            a = random_scalar(base, rng)
            fx = law(changed, x)
            scaled = law(changed, x * a)
            if kind is LawKind.DETERMINANT:
                homogeneous = scaled == fx * a**n
            else:
                homogeneous = scaled == fx.scale(a**n)
            if not homogeneous:
                failed = fail({"law": "homogeneity", "x": str(x), "a": str(a)}, i)
                break
            if law(changed, x * y) != fx * law(changed, y):
                failed = fail({"law": "multiplicativity", "x": str(x), "y": str(y)}, i)
                break
        if failed is None:
            for i in range(samples):
                m = random_element(triple.algebra, rng)
                moved = base_change_element(m, hom, algebra)
                if transport(hom, law(triple, m), algebra) != law(changed, moved):
                    failed = fail({"law": "naturality", "m": str(m)}, i)
                    break
        results.append(failed or CheckResult.passed(name, samples))
    return combine(f"law_{kind.value}", results)


def check_theta_div(triple: GoodTriple, rng: random.Random, samples: int = 30) -> CheckResult:
    """theta_div(gamma_n(b)) = det(b|M)."""

    name = "divided_theta"
    n = triple.module_rank
    for i in range(samples):
        b = random_element(triple.algebra, rng)
        lhs, rhs = theta_div(gamma_of(b, n), triple), char_coeffs(b, triple)[n]
        if lhs != rhs:
            return CheckResult.failed(name, {"b": str(b), "lhs": str(lhs), "rhs": str(rhs)}, i)
    return CheckResult.passed(name, samples)
