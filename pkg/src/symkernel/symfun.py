"""
Symmetric polynomials: decomposition into elementary symmetric polynomials and
the universal polynomials w_k relating the characteristic polynomial of a
Kronecker product to those of its factors.

A decomposition is a SymPolyExpr, a polynomial in formal symbols u_1, ..., u_m
(and v_1, ..., v_n for a second alphabet) standing for the elementary symmetric
polynomials of each alphabet.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Tuple

from .errors import NotSymmetricError, ResourceCapError, ShapeError, SymKernelError
from .rings import BaseRing, Polynomial, RingHom, Scalar, ZZ, poly_coeff
from .rings import matrix as mx
from .witness import CheckResult

logger = logging.getLogger(__name__)

DEFAULT_MAX_MN = 12


@dataclass(frozen=True)
class SymPolyExpr:
    """
    Attributes
    ----------
    alphabet_sizes: tuple<int>
        (m,) or (m, n).

    expr: Polynomial
        Over R[u_1..u_m] or R[u_1..u_m, v_1..v_n]; variables not belonging to
        an alphabet come first and act as coefficients.
    """

    alphabet_sizes: Tuple[int, ...]
    expr: Scalar

    @property
    def ring(self) -> BaseRing:

        return self.expr.ring

    def evaluate(self, *alphabets: Sequence[Scalar]) -> Scalar:
        """
        Substitute u_i := sigma_i(first alphabet), v_j := sigma_j(second).

        Each alphabet is a sequence of elements of one common ring, of the
        declared size.
        """
        if len(alphabets) != len(self.alphabet_sizes):
            raise ShapeError("wrong number of alphabets")
        target = alphabets[0][0].ring
        images = {}
        for prefix, size, values in zip("uv", self.alphabet_sizes, alphabets):
            if len(values) != size:
                raise ShapeError(f"alphabet of size {size} expected")
            sigma = elementary_values(values, target)
            for i in range(1, size + 1):
                images[f"{prefix}{i}"] = sigma[i]
        return substitute(self.expr, target, images)


def substitute(p: Scalar, target: BaseRing, images: dict) -> Scalar:
    """Image of p under the ring map sending each variable to images[name]."""

    if not p.ring.is_poly:
        return target(p.to_number())
    return RingHom(p.ring, target, images)(p)


def elementary_values(values: Sequence[Scalar], ring: BaseRing) -> List[Scalar]:
    """sigma_0 = 1, sigma_1, ..., sigma_m of the given elements."""

    sigma = [ring.one] + [ring.zero] * len(values)
    for count, x in enumerate(values, start=1):
        for k in range(count, 0, -1):
            sigma[k] = sigma[k] + sigma[k - 1] * x
    return sigma


def elementary_symmetric(ring: BaseRing, alphabet: Sequence[str], k: int) -> Scalar:

    gens = [ring.gen(name) for name in alphabet]
    total = ring.zero
    for subset in combinations(gens, k):
        term = ring.one
        for g in subset:
            term = term * g
        total = total + term
    return total


def check_symmetric(p: Scalar, alphabet: Sequence[str]) -> None:
    """Raise NotSymmetricError naming the first violating transposition."""

    ring = p.ring
    positions = [ring.index(name) for name in alphabet]
    terms = dict(p.value.items())
    for (i, a), (j, b) in combinations(enumerate(positions, start=1), 2):
        for monom, coeff in terms.items():
            swapped = list(monom)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            if terms.get(tuple(swapped)) != coeff:
                raise NotSymmetricError((i, j))


def elementary_decompose(
    p: Scalar,
    alphabet: Optional[Sequence[str]] = None,
    prefix: str = "u",
    verify: bool = True,
) -> SymPolyExpr:
    """
    Write a symmetric polynomial in the elementary symmetric polynomials of an
    alphabet by leading-term reduction under graded-lex order.

    Params
    ------
    p: Polynomial
        Symmetric in the variables named by `alphabet`.

    alphabet: sequence<str> = None
        The permuted variables a_1..a_m; defaults to every variable of p.

    prefix: str = "u"
        Name stem of the formal symbols for sigma_1..sigma_m.

    Returns
    -------
    SymPolyExpr
        Over ground[other variables, prefix1..prefixm].
    """
    ring = p.ring
    alphabet = tuple(alphabet or ring.variables)
    positions = [ring.index(name) for name in alphabet]
    check_symmetric(p, alphabet)

    m = len(alphabet)
    others = [v for v in ring.variables if v not in alphabet]
    other_positions = [ring.index(v) for v in others]
    symbols = [f"{prefix}{i}" for i in range(1, m + 1)]
    out = BaseRing.poly(ring.coefficients, others + symbols)

    sigmas = [elementary_symmetric(ring, alphabet, k).value for k in range(1, m + 1)]
    poly_ring = ring.poly_ring

    def alpha(monom):
        return tuple(monom[i] for i in positions)

    remainder = p.value
    result = {}
    steps = 0
    while remainder:
        lead = max({alpha(monom) for monom in remainder}, key=lambda e: (sum(e), e))
        exps = [lead[i] - lead[i + 1] for i in range(m - 1)] + [lead[-1]]

        coeff = {}
        for monom, c in remainder.items():
            if alpha(monom) != lead:
                continue
            stripped = list(monom)
            for i in positions:
                stripped[i] = 0
            coeff[tuple(stripped)] = c
            out_monom = tuple(monom[i] for i in other_positions) + tuple(exps)
            result[out_monom] = c

        product = poly_ring.from_dict(coeff)
        for sigma, e in zip(sigmas, exps):
            if e:
                product = product * sigma**e
        remainder = remainder - product
        steps += 1

    expr = out.element(out.poly_ring.from_dict(result))
    decomposition = SymPolyExpr((m,), expr)
    logger.debug("decomposed %d terms in %d reduction steps", len(p.value), steps)

    if verify:
        images = {name: ring.gen(name) for name in others}
        for i, name in enumerate(symbols):
            images[name] = ring.element(sigmas[i])
        if substitute(expr, ring, images) != p:
            raise SymKernelError("elementary decomposition failed its round trip")
    return decomposition


def _product_polynomial(m: int, n: int) -> Polynomial:

    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{j}" for j in range(1, n + 1)]
    ring = ZZ.extend(*a, *b, "t")
    t = ring.gen("t")
    product = ring.one
    for x in a:
        for y in b:
            product = product * (t + ring.gen(x) * ring.gen(y))
    return product


def compute_wk(m: int, n: int, max_mn: int = DEFAULT_MAX_MN) -> List[SymPolyExpr]:
    """
    The polynomials w_0..w_mn in ZZ[u_1..u_m, v_1..v_n] with
    prod_{i,j} (t + a_i b_j) = sum_k w_k(sigma(a), sigma(b)) t^(mn - k).
    """
    if m < 1 or n < 1:
        raise ShapeError("m and n must be positive", m=m, n=n)
    if m * n > max_mn:
        raise ResourceCapError(
            f"mn = {m * n} exceeds the cap {max_mn}", m=m, n=n, cap=max_mn
        )

    product = _product_polynomial(m, n)
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{j}" for j in range(1, n + 1)]
    target = ZZ.extend(*[f"u{i}" for i in range(1, m + 1)], *[f"v{j}" for j in range(1, n + 1)])

    table = [SymPolyExpr((m, n), target.one)]
    for k in range(1, m * n + 1):
        coefficient = poly_coeff(product, m * n - k)
        first = elementary_decompose(coefficient, a, "u").expr
        second = elementary_decompose(first, b, "v").expr
        table.append(SymPolyExpr((m, n), second))
        logger.debug("w_%d for (%d, %d) has %d terms", k, m, n, len(second.value))
    return table


def verify_wk_on_matrices(
    m: int,
    n: int,
    X: mx.Matrix,
    Y: mx.Matrix,
    ring: BaseRing,
    wk: Optional[List[SymPolyExpr]] = None,
) -> CheckResult:
    """
    Check det(t + X (x) Y) = sum_k w_k(chi(X), chi(Y)) t^(mn - k) exactly,
    chi being the coefficients of det(t + X) and det(t + Y).
    """
    if mx.shape(X) != (m, m) or mx.shape(Y) != (n, n):
        raise ShapeError(
            "matrix dimensions do not match (m, n)", m=m, n=n,
            x=list(mx.shape(X)), y=list(mx.shape(Y)),
        )
    wk = wk or compute_wk(m, n, max_mn=max(DEFAULT_MAX_MN, m * n))

    lhs = mx.char_coefficients(mx.kron(X, Y), ring)
    chi_x = mx.char_coefficients(X, ring)
    chi_y = mx.char_coefficients(Y, ring)
    images = {f"u{i}": chi_x[i] for i in range(1, m + 1)}
    images.update({f"v{j}": chi_y[j] for j in range(1, n + 1)})

    for k, w in enumerate(wk):
        rhs = substitute(w.expr, ring, images)
        if lhs[k] != rhs:
            return CheckResult.failed(
                "wk_matrices",
                {"k": k, "lhs": str(lhs[k]), "rhs": str(rhs), "m": m, "n": n},
            )
    return CheckResult.passed("wk_matrices", 1)


def monomial_symmetric(ring: BaseRing, alphabet: Sequence[str], exponents: Sequence[int]) -> Scalar:
    """Sum of the distinct monomials obtained by permuting `exponents`."""

    padded = tuple(exponents) + (0,) * (len(alphabet) - len(exponents))
    positions = [ring.index(name) for name in alphabet]
    terms = {}
    for perm in set(permutations(padded)):
        monom = [0] * len(ring.variables)
        for position, e in zip(positions, perm):
            monom[position] = e
        terms[tuple(monom)] = ring.coefficients.one
    return ring.from_terms(terms)


def partitions(total: int, parts: int, largest: Optional[int] = None):

    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def check_fundamental_theorem(n: int, max_degree: int, ring: BaseRing = ZZ) -> CheckResult:
    """
    Every symmetric polynomial in x_1..x_n of degree at most max_degree
    rewrites uniquely in sigma_1..sigma_n, checked on the monomial symmetric
    basis: each decomposition round-trips and repeated runs agree.
    """
    alphabet = [f"x{i}" for i in range(1, n + 1)]
    poly_ring = ring.extend(*alphabet)
    checked = 0
    for degree in range(max_degree + 1):
        for shape in partitions(degree, n):
            p = monomial_symmetric(poly_ring, alphabet, shape)
            first = elementary_decompose(p, alphabet)
            second = elementary_decompose(p, alphabet)
            if first.expr != second.expr:
                return CheckResult.failed(
                    "fundamental_theorem", {"n": n, "partition": list(shape)}, checked
                )
            checked += 1
    return CheckResult.passed("fundamental_theorem", checked)
