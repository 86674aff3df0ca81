"""
Rewriting symmetric tensors as polynomials in the elementary symmetric
tensors rho_k(e) of basis vectors e.

A typed term rho_a(e_l1, ..., e_lr) on distinct non-unit basis vectors is
keyed by the sorted tuple ((l_1, a_1), ..., (l_r, a_r)). Terms are reduced by
induction on the weight, using

    prod_i rho_(a_i)(e_i) = sum over slot patterns (k_T)_T of rho_(k_T)((prod_(i in T) e_i)_T)

where T runs over non-empty subsets of the entries, sum_(T containing i) k_T = a_i
and sum_T k_T <= n. The disjoint pattern is rho_a(e) itself; every other
pattern has smaller weight. Entries that are not basis vectors are expanded
by the weighted binomial rule rho_k(x + y) = sum_(i+j=k) rho_(i,j)(x, y).
"""

import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra import AlgElement, MultTableAlgebra
from ..errors import MembershipError, NotInvertibleError, ShapeError
from ..rings import BaseRing, RingHom, Scalar, unit_inverse
from .element import SymTensor, typed_sym

logger = logging.getLogger(__name__)

TypedKey = Tuple[Tuple[int, int], ...]


def symbol_name(k: int, label: str) -> str:

    return f"R[{k}][{label}]"


@dataclass(frozen=True)
class ElementaryExpr:
    """
    A polynomial over A in the symbols R[k][e] standing for rho_k(e).

    Attributes
    ----------
    algebra: MultTableAlgebra

    n: int

    expr: Scalar
        Element of A[R[1][e_1], ...]; the symbols follow the variables of A,
        ordered by (k, basis index).

    symbols: tuple<(int, int)>
        (k, basis index) of every symbol, in variable order.
    """

    algebra: MultTableAlgebra
    n: int
    expr: Scalar
    symbols: Tuple[Tuple[int, int], ...]

    def evaluate(self) -> SymTensor:

        return evaluate_elementary(self)

    def __str__(self) -> str:

        return str(self.expr)


def _compositions(k: int, parts: int) -> Iterator[Tuple[int, ...]]:

    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def _slot_patterns(a: Sequence[int], n: int) -> Iterator[List[Tuple[int, int]]]:
    """
    All (mask, k_mask) lists with sum over masks containing i of k = a_i and
    total at most n, masks being non-empty subsets of range(len(a)).
    """
    r = len(a)
    masks = list(range(1, 1 << r))

    def walk(idx: int, remaining: Tuple[int, ...], used: int, chosen: list):

        if idx == len(masks):
            if not any(remaining):
                yield list(chosen)
            return
        mask = masks[idx]
        members = [i for i in range(r) if mask >> i & 1]
        top = min(min(remaining[i] for i in members), n - used)
        for k in range(top + 1):
            left = tuple(
                remaining[i] - k if mask >> i & 1 else remaining[i] for i in range(r)
            )
            if k:
                chosen.append((mask, k))
            yield from walk(idx + 1, left, used + k, chosen)
            if k:
                chosen.pop()

    yield from walk(0, tuple(a), 0, [])


class ElementaryRewriter:
    """
    Memoized reduction of typed terms of S_n(B|A) to polynomials in the
    elementary symbols.
    """

    def __init__(self, algebra: MultTableAlgebra, n: int) -> None:

        if not isinstance(algebra.base, BaseRing):
            raise MembershipError("rewriting needs an algebra over a base ring")
        self.algebra = algebra
        self.n = n
        self.base: BaseRing = algebra.base
        self.unit = algebra.unit_index
        self.generators = [i for i in range(algebra.rank) if i != self.unit]
        self.symbols = tuple((k, i) for k in range(1, n + 1) for i in self.generators)
        names = [symbol_name(k, algebra.labels[i]) for k, i in self.symbols]
        self.ring = self.base.extend(*names) if names else self.base
        self.lift = RingHom.inclusion(self.base, self.ring)
        self.__memo: Dict[TypedKey, Scalar] = {}

    def symbol(self, k: int, i: int) -> Scalar:

        if k == 0:
            return self.ring.one
        return self.ring.gen(symbol_name(k, self.algebra.labels[i]))

    # expansion

    def normalize(self, counts: Dict[int, int]) -> Tuple[int, TypedKey]:
        """Drop the unit entry: rho_(a, c)(e, 1) = C(n - |a|, c) rho_a(e)."""

        counts = {l: c for l, c in counts.items() if c}
        factor = 1
        if self.unit is not None and self.unit in counts:
            c = counts.pop(self.unit)
            factor = comb(self.n - sum(counts.values()), c)
        return factor, tuple(sorted(counts.items()))

    def expand(self, entries: Sequence[Tuple[AlgElement, int]]) -> Dict[TypedKey, Scalar]:
        """rho_(k_1, ..., k_s)(y_1, ..., y_s) in typed terms on basis vectors."""

        base = self.base
        partial: Dict[TypedKey, Scalar] = {(): base.one}
        for y, k in entries:
            if k == 0:
                continue
            support = [(l, c) for l, c in enumerate(y.coords) if not c.is_zero()]
            grown: Dict[TypedKey, Scalar] = {}
            for key, coef in partial.items():
                for beta in _compositions(k, len(support)):
                    counts = dict(key)
                    f = coef
                    for (l, c), b in zip(support, beta):
                        if not b:
                            continue
                        before = counts.get(l, 0)
                        f = f * c**b * comb(before + b, b)
                        counts[l] = before + b
                    new_key = tuple(sorted(counts.items()))
                    grown[new_key] = grown[new_key] + f if new_key in grown else f
            partial = grown

        result: Dict[TypedKey, Scalar] = {}
        for key, coef in partial.items():
            factor, reduced = self.normalize(dict(key))
            value = coef * factor
            result[reduced] = result[reduced] + value if reduced in result else value
        return {key: c for key, c in result.items() if not c.is_zero()}

    # reduction

    def express_key(self, key: TypedKey) -> Scalar:

        if key in self.__memo:
            return self.__memo[key]
        if not key:
            value = self.ring.one
        elif len(key) == 1:
            (i, k), = key
            value = self.symbol(k, i)
        else:
            a = [k for _, k in key]
            basis = [self.algebra.basis(i) for i, _ in key]
            value = self.ring.one
            for (i, k) in key:
                value = value * self.symbol(k, i)
            for pattern in _slot_patterns(a, self.n):
                if all(bin(mask).count("1") == 1 for mask, _ in pattern):
                    continue
                entries = []
                for mask, k in pattern:
                    e = self.algebra.one
                    for i, b in enumerate(basis):
                        if mask >> i & 1:
                            e = e * b
                    entries.append((e, k))
                for sub_key, coef in self.expand(entries).items():
                    value = value - self.lift(coef) * self.express_key(sub_key)
        self.__memo[key] = value
        return value

    def express(self, t: SymTensor) -> Scalar:

        value = self.ring.zero
        for rep, c in t.coeffs.items():
            counts: Dict[int, int] = {}
            for i in rep:
                counts[i] = counts.get(i, 0) + 1
            factor, key = self.normalize(counts)
            value = value + self.lift(c * factor) * self.express_key(key)
        logger.debug("rewrote %d orbits using %d typed terms", len(t.coeffs), len(self.__memo))
        return value

    # power sums

    def newton_images(self) -> Dict[str, Scalar]:
        """
        rho_k(e) through rho_1 alone: k rho_k(e) = sum_(i=1..k) (-1)^(i-1)
        rho_(k-i)(e) rho_1(e^i), valid when n! is a unit of A.
        """
        base, n = self.base, self.n
        try:
            unit_inverse(base(factorial(n)))
        except NotInvertibleError:
            raise NotInvertibleError(
                f"{n}! is not invertible in {base}; rho_1 does not suffice", n=n
            ) from None

        def rho_1(y: AlgElement) -> Scalar:

            total = self.ring.zero
            for l, c in enumerate(y.coords):
                if c.is_zero():
                    continue
                term = self.ring(n) if l == self.unit else self.symbol(1, l)
                total = total + self.lift(c) * term
            return total

        images = {name: self.ring.gen(name) for name in self.base.variables}
        for i in self.generators:
            e = self.algebra.basis(i)
            powers = [None] + [rho_1(e**j) for j in range(1, n + 1)]
            values = [self.ring.one]
            for k in range(1, n + 1):
                total = self.ring.zero
                for j in range(1, k + 1):
                    sign = 1 if j % 2 else -1
                    total = total + values[k - j] * powers[j] * sign
                values.append(total * self.lift(unit_inverse(base(k))))
            for k in range(1, n + 1):
                images[symbol_name(k, self.algebra.labels[i])] = values[k]
        return images


def express_in_elementary(t: SymTensor, rho1_only: bool = False) -> ElementaryExpr:
    """
    An ElementaryExpr evaluating to the S_n-invariant t. With `rho1_only` the
    result uses the symbols R[1][e] only, which needs n! to be a unit of A.
    """
    if t.generators is not None:
        t = SymTensor.from_tensor(t.to_tensor())
    rewriter = ElementaryRewriter(t.algebra, t.n)
    value = rewriter.express(t)
    if rho1_only and rewriter.symbols:
        images = rewriter.newton_images()
        value = RingHom(rewriter.ring, rewriter.ring, images)(value)
    return ElementaryExpr(t.algebra, t.n, value, rewriter.symbols)


def typed_expand(
    a: Sequence[int], sums: Sequence[AlgElement], n: int
) -> Dict[TypedKey, Scalar]:
    """
    rho_a(y_1, ..., y_r) for arbitrary entries, as coefficients of typed terms
    on distinct non-unit basis vectors.
    """
    if len(a) != len(sums):
        raise ShapeError(f"{len(a)} entries expected, got {len(sums)}")
    if sum(a) > n:
        raise ShapeError(f"type of weight {sum(a)} exceeds n = {n}")
    if not sums:
        raise ShapeError("at least one entry is needed")
    rewriter = ElementaryRewriter(sums[0].algebra, n)
    return rewriter.expand(list(zip(sums, a)))


def typed_term(algebra: MultTableAlgebra, key: TypedKey, n: int) -> SymTensor:
    """The symmetric tensor rho_a(e_l1, ..., e_lr) named by a typed key."""

    return typed_sym([k for _, k in key], [algebra.basis(i) for i, _ in key], n, algebra)


def evaluate_elementary(
    expr, algebra: Optional[MultTableAlgebra] = None, n: Optional[int] = None
) -> SymTensor:
    """Substitute rho_k(e) for every symbol R[k][e]."""

    if isinstance(expr, ElementaryExpr):
        algebra, n, value, symbols = expr.algebra, expr.n, expr.expr, expr.symbols
    else:
        if algebra is None or n is None:
            raise ShapeError("algebra and n are needed to evaluate a bare polynomial")
        rewriter = ElementaryRewriter(algebra, n)
        value, symbols = expr, rewriter.symbols
        if value.ring != rewriter.ring:
            value = RingHom.inclusion(value.ring, rewriter.ring)(value)

    base: BaseRing = algebra.base
    one = SymTensor.one(algebra, n)
    if not symbols:
        return one.scale(value)

    offset = len(base.variables)
    grouped: Dict[tuple, dict] = {}
    for monom, coeff in value.value.items():
        grouped.setdefault(monom[offset:], {})[monom[:offset]] = coeff

    rho_cache: Dict[Tuple[int, int], SymTensor] = {}

    def rho(k: int, i: int) -> SymTensor:

        if (k, i) not in rho_cache:
            rho_cache[(k, i)] = typed_sym((k,), [algebra.basis(i)], n, algebra)
        return rho_cache[(k, i)]

    total = SymTensor.zero(algebra, n)
    for s_part, a_terms in sorted(grouped.items()):
        if base.is_poly:
            coef = base.element(base.poly_ring.from_dict(a_terms))
        else:
            coef = base.element(a_terms[()])
        term = one
        for (k, i), e in zip(symbols, s_part):
            if e:
                term = term * rho(k, i) ** e
        total = total + term.scale(coef)
    return total
