"""
Exact checks of the functorial identities satisfied by theta: base change,
multiplicativity on short exact sequences, towers, tensor products of
algebras and the factorization over a local algebra.

Every check returns a CheckResult; a failure carries the first offending
input rendered as strings.
"""

import logging
import random
from functools import lru_cache
from typing import Iterable

from sympy.utilities.iterables import multiset_permutations

from ..algebra import (
    AlgebraMap,
    GoodTriple,
    MultTableAlgebra,
    Tower,
    base_change_triple,
    conjugate_triple,
    monogenic,
    random_element,
    random_monogenic,
    regular_triple,
    tensor_algebra,
)
from ..errors import MembershipError, ShapeError
from ..rings import GF, QQ, ZZ, RingHom, random_scalar
from ..rings import matrix as mx
from ..symfun import compute_wk, substitute
from ..tensor import (
    SymTensor,
    elem_sym,
    random_invariant,
    sigma_map,
    tau_map,
    tensor_power_map,
)
from ..witness import CheckResult
from .charpoly import char_coeffs, norm
from .flags import ModuleFlag
from .theta import Symmetrization, theta, theta_charpoly

logger = logging.getLogger(__name__)


def _samples(triple: GoodTriple, rng: random.Random, samples: int) -> Iterable[SymTensor]:
    """Random invariants followed by every rho_k of every basis vector."""

    algebra, n = triple.algebra, triple.module_rank
    for _ in range(samples):
        yield random_invariant(algebra, n, rng)
    for b in algebra.basis_elements():
        for k in range(n + 1):
            yield elem_sym(b, k, n)


def _orbit_value(theta: Symmetrization, key: tuple):

    algebra = theta.triple.algebra
    return theta(SymTensor(algebra, len(key), {key: algebra.base(1)}))


def check_char_coefficients(triple: GoodTriple, rng: random.Random, samples: int = 30) -> CheckResult:
    """theta(rho_k(b)) = chi_k(b|M) and theta((x + b)^(x)n) = det(x + b|M)."""

    name = "theta_char_coefficients"
    theta = Symmetrization(triple)
    n = triple.module_rank
    elements = triple.algebra.basis_elements()
    elements += [random_element(triple.algebra, rng) for _ in range(samples)]
    checked = 0
    for b in elements:
        chi = char_coeffs(b, triple)
        for k in range(n + 1):
            value = theta(elem_sym(b, k, n))
            if value != chi[k]:
                return CheckResult.failed(
                    name, {"b": str(b), "k": k, "theta": str(value), "chi": str(chi[k])}, checked
                )
        if list(theta_charpoly(b, triple)) != list(chi.coefficients):
            return CheckResult.failed(name, {"b": str(b), "route": "charpoly"}, checked)
        checked += 1
    return CheckResult.passed(name, checked)


def check_theta_homomorphism(triple: GoodTriple, rng: random.Random, samples: int = 30) -> CheckResult:

    name = "theta_homomorphism"
    theta = Symmetrization(triple)
    algebra, n = triple.algebra, triple.module_rank
    for i in range(samples):
        s = random_invariant(algebra, n, rng, terms=2)
        t = random_invariant(algebra, n, rng, terms=2)
        if theta(s + t) != theta(s) + theta(t) or theta(s * t) != theta(s) * theta(t):
            return CheckResult.failed(name, {"s": str(s), "t": str(t)}, i)
    if theta(SymTensor.one(algebra, n)) != triple.base(1):
        return CheckResult.failed(name, {"s": "1"}, samples)
    return CheckResult.passed(name, samples + 1)


def check_base_change(
    triple: GoodTriple, hom: RingHom, rng: random.Random, samples: int = 30
) -> CheckResult:
    """hom(theta(t)) = theta(t after base change) in the base-changed triple."""

    name = "theta_base_change"
    if triple.base != hom.source:
        raise MembershipError("homomorphism does not start at the base of the triple")
    changed = base_change_triple(triple, hom)
    source, target = Symmetrization(triple), Symmetrization(changed)
    checked = 0
    for t in _samples(triple, rng, samples):
        moved = SymTensor(changed.algebra, t.n, {k: hom(c) for k, c in t.coeffs.items()})
        lhs, rhs = hom(source(t)), target(moved)
        if lhs != rhs:
            return CheckResult.failed(
                name, {"t": str(t), "lhs": str(lhs), "rhs": str(rhs), "target": str(hom.target)},
                checked,
            )
        checked += 1
    return CheckResult.passed(name, checked)


def check_ses_multiplicativity(
    flag: ModuleFlag, rng: random.Random, samples: int = 30
) -> CheckResult:
    """
    theta_M = (theta_L (x) theta_N) o sigma_(l, n) for the first step L of the
    flag and N = M / L.
    """
    name = "theta_ses"
    if flag.length > 2:
        raise ShapeError("a short exact sequence needs a flag with one proper step")
    sub, quotient = flag.submodule_triple(0), flag.quotient_triple(0)
    l, rest = sub.module_rank, quotient.module_rank
    whole = Symmetrization(flag.triple)
    theta_sub, theta_quotient = Symmetrization(sub), Symmetrization(quotient)

    checked = 0
    for t in _samples(flag.triple, rng, samples):
        split = sigma_map(t, (l, rest))
        rhs = flag.triple.base(0)
        for (r1, r2), c in split.coeffs.items():
            rhs = rhs + _orbit_value(theta_sub, r1) * _orbit_value(theta_quotient, r2) * c
        lhs = whole(t)
        if lhs != rhs:
            return CheckResult.failed(
                name, {"t": str(t), "lhs": str(lhs), "rhs": str(rhs), "l": l}, checked
            )
        checked += 1
    return CheckResult.passed(name, checked)


def check_det_transitivity(
    B: MultTableAlgebra, C: MultTableAlgebra, rng: random.Random, samples: int = 30
) -> CheckResult:
    """det_(C|A) of the flattened block matrix = det_(B|A)(det_(C|B)) on sampled c."""

    name = "det_transitivity"
    tower = Tower(B, C)
    total_triple, lower_triple, upper_triple = (
        regular_triple(tower.total), regular_triple(B), regular_triple(C)
    )
    for checked in range(samples):
        c = random_element(C, rng)
        lhs = norm(tower.flatten(c), total_triple)
        rhs = norm(norm(c, upper_triple), lower_triple)
        if lhs != rhs:
            return CheckResult.failed(
                name,
                {"c": str(c), "lhs": str(lhs), "rhs": str(rhs), "m": B.rank, "n": C.rank},
                checked,
            )
    return CheckResult.passed(name, samples)


def check_tower(
    B: MultTableAlgebra, C: MultTableAlgebra, rng: random.Random, samples: int = 30
) -> CheckResult:
    """
    For C|B|A: det_(C|A) = det_(B|A) o det_(C|B) on sampled elements and
    theta_(C|A) = theta_(B|A) o S_m(theta_(C|B|A)) o tau_(m, n) on sampled invariants.
    """
    name = "theta_tower"
    tower = Tower(B, C)
    m, n = B.rank, C.rank
    total_triple, lower_triple, upper_triple = (
        regular_triple(tower.total), regular_triple(B), regular_triple(C)
    )

    det_route = check_det_transitivity(B, C, rng, samples)
    if not det_route:
        return CheckResult.failed(
            name, dict(det_route.counterexample, route="det"), det_route.checked
        )
    checked = det_route.checked

    theta_total = Symmetrization(total_triple)
    theta_lower = Symmetrization(lower_triple)
    theta_upper = Symmetrization(upper_triple)
    lifts = [tower.lift(e) for e in tower.total.basis_elements()]

    @lru_cache(maxsize=None)
    def inner(block: tuple):

        value = B.zero
        for u in multiset_permutations(list(block)):
            value = value + theta_upper.pure([lifts[i] for i in u])
        return value

    for _ in range(samples):
        t = random_invariant(tower.total, m * n, rng, terms=2)
        nested = tau_map(t, m, n)
        rhs = B.base(0)
        for key, c in nested.coeffs.items():
            for arrangement in multiset_permutations(list(key)):
                rhs = rhs + theta_lower.pure([inner(block) for block in arrangement]) * c
        lhs = theta_total(t)
        if lhs != rhs:
            return CheckResult.failed(
                name, {"t": str(t), "lhs": str(lhs), "rhs": str(rhs), "route": "theta"}, checked
            )
        checked += 1
    return CheckResult.passed(name, checked)


def diagonal_split(t: SymTensor, B: MultTableAlgebra, Bt: MultTableAlgebra):
    """
    (theta_B (x) theta_B~)(rho_(n, n~)(t)) for t in S_(n n~)(B (x) B~): slot
    x + n * y of a tuple contributes its B-part to the x-th factor of B and
    its B~-part to the y-th factor of B~.
    """
    n, nt = B.rank, Bt.rank
    T = t.algebra
    left = RingHom.inclusion(B.base, T.base)
    right = RingHom.inclusion(Bt.base, T.base)
    theta_B = Symmetrization(regular_triple(B))
    theta_Bt = Symmetrization(regular_triple(Bt))
    basis_B, basis_Bt = B.basis_elements(), Bt.basis_elements()

    total = T.base(0)
    for u, c in t.to_tensor().terms.items():
        factors = []
        for x in range(n):
            b = B.one
            for y in range(nt):
                b = b * basis_B[u[x + n * y] % n]
            factors.append(b)
        cofactors = []
        for y in range(nt):
            bt = Bt.one
            for x in range(n):
                bt = bt * basis_Bt[u[x + n * y] // n]
            cofactors.append(bt)
        total = total + left(theta_B.pure(factors)) * right(theta_Bt.pure(cofactors)) * c
    return total


def check_tensor(
    B: MultTableAlgebra, Bt: MultTableAlgebra, rng: random.Random, samples: int = 30,
    wk=None,
) -> CheckResult:
    """
    theta_(B (x) B~) = (theta_B (x) theta_B~) o rho_(n, n~) on sampled
    invariants, and det(x + b (x) b~) = sum_k w_k(chi(b), chi(b~)) x^(n n~ - k).
    """
    name = "theta_tensor"
    T = tensor_algebra(B, Bt)
    n, nt = B.rank, Bt.rank
    triple = regular_triple(T)
    theta_T = Symmetrization(triple)
    left = RingHom.inclusion(B.base, T.base)
    right = RingHom.inclusion(Bt.base, T.base)

    checked = 0
    for _ in range(samples):
        t = random_invariant(T, n * nt, rng, terms=2)
        lhs, rhs = theta_T(t), diagonal_split(t, B, Bt)
        if lhs != rhs:
            return CheckResult.failed(
                name, {"t": str(t), "lhs": str(lhs), "rhs": str(rhs), "route": "theta"}, checked
            )
        checked += 1

    wk = wk or compute_wk(n, nt, max_mn=max(12, n * nt))
    B_triple, Bt_triple = regular_triple(B), regular_triple(Bt)
    for _ in range(samples):
        b, bt = random_element(B, rng), random_element(Bt, rng)
        chi_b, chi_bt = char_coeffs(b, B_triple), char_coeffs(bt, Bt_triple)
        images = {f"u{i}": left(chi_b[i]) for i in range(1, n + 1)}
        images.update({f"v{j}": right(chi_bt[j]) for j in range(1, nt + 1)})
        product = T.element(
            [left(x) * right(y) for y in bt.coords for x in b.coords]
        )
        chi = char_coeffs(product, triple)
        for k, w in enumerate(wk):
            expected = substitute(w.expr, T.base, images)
            if chi[k] != expected:
                return CheckResult.failed(
                    name,
                    {"b": str(b), "bt": str(bt), "k": k, "lhs": str(chi[k]),
                     "rhs": str(expected), "route": "wk"},
                    checked,
                )
        checked += 1
    return CheckResult.passed(name, checked)


def check_local_factorization(
    flag: ModuleFlag,
    residue: MultTableAlgebra,
    pi: AlgebraMap,
    rng: random.Random,
    samples: int = 30,
) -> CheckResult:
    """
    For a local algebra A over a field k with residue field K of degree n and
    a flag of A with quotients K: d = mn and
    theta_(A|k) = theta_(K|k)^(x)m o S_n(pi)^(x)m o sigma_(n, ..., n).
    """
    name = "theta_local"
    local = flag.triple.algebra
    if pi.source != local or pi.target != residue:
        raise MembershipError("the residue map must go from the algebra to the residue field")
    if flag.triple.module_rank != local.rank:
        raise ShapeError("the flag must be a flag of the algebra itself")
    d, n, m = local.rank, residue.rank, flag.length
    if flag.dims != tuple(n * (j + 1) for j in range(m)):
        raise ShapeError(
            "flag quotients are not one-dimensional over the residue field",
            dims=list(flag.dims), residue_rank=n,
        )
    if d != m * n:
        return CheckResult.failed(name, {"d": d, "m": m, "n": n, "route": "length"}, 0)

    base = local.base
    images = [pi(e).coords for e in local.basis_elements()]
    projection = [[images[i][r] for i in range(d)] for r in range(n)]
    for z in mx.nullspace(projection, base):
        for j, step in enumerate(flag.quotient_steps()):
            acting = local.element(z)
            if any(not a.is_zero() for row in step.mult_matrix(acting) for a in row):
                raise MembershipError(
                    f"quotient {j + 1} of the flag is not a module over the residue field",
                    step=j + 1,
                )

    whole = Symmetrization(flag.triple)
    theta_K = Symmetrization(regular_triple(residue))

    @lru_cache(maxsize=None)
    def factor(key: tuple):

        orbit = SymTensor(local, n, {key: base(1)}).to_tensor()
        return theta_K(tensor_power_map(pi, orbit))

    checked = 0
    for t in _samples(flag.triple, rng, samples):
        split = sigma_map(t, (n,) * m)
        rhs = base(0)
        for key, c in split.coeffs.items():
            value = c
            for r in key:
                value = value * factor(r)
            rhs = rhs + value
        lhs = whole(t)
        if lhs != rhs:
            return CheckResult.failed(
                name, {"t": str(t), "lhs": str(lhs), "rhs": str(rhs)}, checked
            )
        checked += 1
    return CheckResult.passed(name, checked, d=d, m=m, n=n)



def unimodular(base, n: int, rng: random.Random, bound: int = 2, steps: int = 3) -> list:
    """Product of `steps` random elementary matrices over `base`."""

    Q = mx.identity(base, n)
    if n < 2:
        return Q
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-bound, bound)
        Q = [[Q[r][s] + (Q[j][s] * c if r == i else 0) for s in range(n)] for r in range(n)]
    return Q


def _poly_mul(f: list, g: list, zero) -> list:

    product = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            product[i + j] = product[i + j] + a * b
    return product


FLAG_BASES = (ZZ, QQ, GF(2), GF(3), GF(5))


def flagged_triple(rng: random.Random, max_rank: int = 4, bound: int = 2) -> ModuleFlag:
    """
    The regular triple of A[x]/(g h) for random monic g and h, in a random
    unimodular basis, with the ideal (g) as its first step. The rank is drawn
    from 2..max_rank.
    """
    base = rng.choice(FLAG_BASES)
    rank = rng.randint(2, max_rank)
    dg = rng.randint(1, rank - 1)
    dh = rank - dg
    g = [random_scalar(base, rng, bound) for _ in range(dg)] + [base(1)]
    h = [random_scalar(base, rng, bound) for _ in range(dh)] + [base(1)]
    f = _poly_mul(g, h, base(0))
    algebra = monogenic(base, f[:-1])

    # columns x^i g for i < deg h, then 1, x, ..., x^(deg g - 1)
    columns = [[base(0)] * i + g + [base(0)] * (dh - 1 - i) for i in range(dh)]
    columns += [[base(1) if r == k else base(0) for r in range(rank)] for k in range(dg)]
    P = [list(row) for row in zip(*columns)]

    Q = unimodular(base, rank, rng, bound)
    triple = conjugate_triple(regular_triple(algebra), Q)
    return ModuleFlag(triple, mx.matmul(mx.inverse(Q, base), P, base), (dh, rank))


TRIPLE_BASES = (ZZ, GF(2), GF(3), GF(5), GF(7), ZZ.extend("t"))


def check_sampled_char_coefficients(
    rng: random.Random, cases: int = 200, max_rank: int = 4
) -> CheckResult:
    """
    theta(rho_k(b)) = chi_k(b|M) on `cases` random (triple, b, k): each triple
    is the regular triple of a random monogenic algebra of rank <= max_rank
    over ZZ, a prime field or ZZ[t], in a random unimodular basis.
    """
    name = "theta_char_coefficients_sampled"
    for checked in range(cases):
        base = rng.choice(TRIPLE_BASES)
        algebra = random_monogenic(base, rng.randint(1, max_rank), rng)
        triple = conjugate_triple(regular_triple(algebra), unimodular(base, algebra.rank, rng))
        b = random_element(algebra, rng)
        k = rng.randint(0, algebra.rank)
        value, chi = theta(elem_sym(b, k, algebra.rank), triple), char_coeffs(b, triple)[k]
        if value != chi:
            table = [[[str(c) for c in entry] for entry in row] for row in algebra.table]
            return CheckResult.failed(
                name,
                {"base": str(base), "table": table, "b": str(b), "k": k,
                 "theta": str(value), "chi": str(chi)},
                checked,
            )
    return CheckResult.passed(name, cases)


def random_tower(rng: random.Random, max_mn: int = 6, bound: int = 2):
    """
    Random monogenic B over ZZ or QQ and random monogenic C over B with
    rank(B) rank(C) <= max_mn.
    """

    base = rng.choice((ZZ, QQ))
    m = rng.randint(1, min(3, max_mn))
    n = rng.randint(1, max_mn // m)
    B = random_monogenic(base, m, rng, bound)
    return B, random_monogenic(B, n, rng, bound, name="y")


def check_random_towers(
    rng: random.Random, towers: int = 30, samples: int = 3, max_mn: int = 6
) -> CheckResult:

    name = "det_transitivity_random"
    checked = 0
    for _ in range(towers):
        B, C = random_tower(rng, max_mn)
        result = check_det_transitivity(B, C, rng, samples)
        checked += result.checked
        if not result:
            return CheckResult.failed(name, result.counterexample, checked)
    return CheckResult.passed(name, checked, towers=towers)
