"""
Batch driver: the identity suites, their deterministic report and the golden
tables.

Every suite draws its randomness from its own generator seeded with
"<seed>:<suite>", so suites can run on a thread pool and still produce the
same report byte for byte.
"""

import hashlib
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from math import ceil, comb
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import __version__
from .algebra import (
    AlgebraMap,
    MultTableAlgebra,
    base_ring_algebra,
    dual_numbers,
    f4,
    free_rank,
    gaussian_integers,
    quadratic,
    random_element,
    regular_triple,
    truncated,
)
from .boilerplate.report import CHECK_LINE, COUNTEREXAMPLE, REPORT_HEADER, SUITE_HEADER, TIMING
from .cech import (
    check_equivalence,
    check_euler,
    check_full_exactness,
    check_homotopies,
    check_reorderings,
    check_total_complexes,
    check_transitive_kernels,
    Cover,
    enumerate_covers,
    euler_char,
    full_cech,
    is_finitistic,
    random_cover,
    reduced_cech,
    unifibrant_witnesses,
)
from .codec import canonical, encode_algebra, encode_ring, encode_scalar, encode_sympoly, encode_tensor
from .db.goldens import GoldenStore
from .divided import (
    LawKind,
    check_comparison,
    check_relations,
    check_theta_div,
    law_check,
    standard_homs,
)
from .errors import ConfigError, NotInvertibleError, SymKernelError
from .multivalued import (
    LawMode,
    check_correspondence,
    check_degrees,
    check_linear_extension,
    check_transfer,
    verify_category_laws,
)
from .norm import (
    ModuleFlag,
    check_base_change,
    check_char_coefficients,
    check_local_factorization,
    check_random_towers,
    check_sampled_char_coefficients,
    check_ses_multiplicativity,
    check_tensor,
    check_theta_homomorphism,
    check_tower,
    flagged_triple,
)
from .rings import GF, QQ, ZZ
from .rings import matrix as mx
from .symfun import check_fundamental_theorem, compute_wk, verify_wk_on_matrices
from .tensor import (
    EmbeddingKind,
    GroupEmbedding,
    elem_sym,
    evaluate_elementary,
    express_in_elementary,
    generated_subalgebra,
    invariant_basis,
    typed_sym,
)
from .witness import CheckResult, combine

logger = logging.getLogger(__name__)

SUITES = ("symfun", "tensor", "norm", "divided", "multi", "cech")
SCHEMA_VERSION = 1
SEED_BITS = 64

WK_SHAPES = ((1, 2), (2, 1), (2, 2), (2, 3), (3, 2))
BASIS_COUNT_BOUNDS = (3, 4)
ELEMENTARY_BOUNDS = (3, 3)

USAGE = "suites: " + ", ".join(SUITES)


@dataclass(frozen=True)
class SuiteConfig:
    """
    Attributes
    ----------
    suites: tuple<str>
        Selection from SUITES; empty selects all of them.

    seed: int
        Unsigned 64-bit seed recorded in the report.

    samples: int
        Random instances per randomized check.

    timings: bool = False
        Record wall-clock seconds per suite; off keeps reports byte-stable.
    """

    suites: Tuple[str, ...] = SUITES
    seed: int = 42
    samples: int = 30
    max_mn: int = 12
    multi_max_size: int = 2
    multi_max_degree: int = 2
    multi_random: int = 500
    multi_instance_cap: int = 250000
    cech_max_base: int = 3
    cech_max_pieces: int = 3
    cech_max_piece_size: int = 4
    cech_depth: int = 4
    cech_random: int = 50
    jobs: int = 1
    timings: bool = False

    @classmethod
    def from_config(cls, config: Mapping, **overrides) -> "SuiteConfig":
        """Settings of a loaded flask.Config, then explicit keyword overrides."""

        values = {
            "seed": config["SEED"],
            "samples": config["SAMPLES"],
            "max_mn": config["MAX_MN"],
            "multi_max_size": config["MULTI_MAX_SIZE"],
            "multi_max_degree": config["MULTI_MAX_DEGREE"],
            "multi_random": config["MULTI_RANDOM"],
            "multi_instance_cap": config["MULTI_INSTANCE_CAP"],
            "cech_max_base": config["CECH_MAX_BASE"],
            "cech_max_pieces": config["CECH_MAX_PIECES"],
            "cech_max_piece_size": config["CECH_MAX_PIECE_SIZE"],
            "cech_depth": config["CECH_DEPTH"],
            "cech_random": config["CECH_RANDOM"],
            "jobs": config["JOBS"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        if "suites" in values:
            values["suites"] = tuple(values["suites"]) or SUITES
        suite_config = cls(**values)
        suite_config.validate()
        return suite_config

    def validate(self) -> None:

        unknown = sorted(set(self.suites) - set(SUITES))
        if unknown:
            raise ConfigError(f"unknown suite {', '.join(unknown)}; {USAGE}", suites=unknown)
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**SEED_BITS:
            raise ConfigError(f"seed must be an unsigned {SEED_BITS}-bit integer", seed=self.seed)
        for key, value in asdict(self).items():
            if key in ("suites", "seed", "timings"):
                continue
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"{key} must be a non-negative integer", key=key)

    @property
    def selected(self) -> Tuple[str, ...]:

        return tuple(sorted(set(self.suites)))

    @property
    def input_hash(self) -> str:
        """sha256 of everything that determines the checks run."""

        data = asdict(self)
        data.pop("timings")
        data.pop("jobs")
        data["suites"] = list(self.selected)
        return hashlib.sha256(canonical(data).encode()).hexdigest()


@dataclass
class Report:
    """
    Attributes
    ----------
    suites: dict<str, list<CheckResult>>
        Results per suite, sorted by check name.

    timings: dict<str, float> = None
        Seconds per suite, only when requested.
    """

    seed: int
    input_hash: str
    suites: Dict[str, List[CheckResult]] = field(default_factory=dict)
    timings: Optional[Dict[str, float]] = None
    version: str = __version__

    @property
    def ok(self) -> bool:

        return all(r.ok for results in self.suites.values() for r in results)

    @property
    def exit_code(self) -> int:

        return 0 if self.ok else 1

    def failures(self) -> List[Tuple[str, CheckResult]]:

        return [(s, r) for s, results in self.suites.items() for r in results if not r.ok]

    def to_dict(self) -> dict:

        data = {
            "schema_version": SCHEMA_VERSION,
            "version": self.version,
            "seed": self.seed,
            "input_hash": self.input_hash,
            "ok": self.ok,
            "suites": {
                name: [r.to_dict() for r in self.suites[name]] for name in sorted(self.suites)
            },
        }
        if self.timings is not None:
            data["timings"] = {name: round(self.timings[name], 6) for name in sorted(self.timings)}
        return data

    def to_json(self) -> str:

        return canonical(self.to_dict())

    def to_text(self) -> str:

        lines = [
            REPORT_HEADER.format(
                version=self.version,
                schema_version=SCHEMA_VERSION,
                seed=self.seed,
                input_hash=self.input_hash,
                status="pass" if self.ok else "FAIL",
            )
        ]
        for name in sorted(self.suites):
            lines.append(SUITE_HEADER.format(suite=name))
            for result in self.suites[name]:
                lines.append(render_check(result))
            if self.timings is not None and name in self.timings:
                lines.append(TIMING.format(seconds=self.timings[name]))
        return "\n".join(lines) + "\n"


def render_check(result: CheckResult) -> str:

    line = CHECK_LINE.format(
        mark="ok  " if result.ok else "FAIL", name=result.name, checked=result.checked
    )
    if result.counterexample is not None:
        line += "\n" + COUNTEREXAMPLE.format(payload=canonical(result.counterexample).strip())
    return line


def _renamed(results: Iterable[CheckResult], suffix: str) -> List[CheckResult]:

    return [replace(r, name=f"{r.name}_{suffix}") for r in results]


# symfun


def wk_oracle_2_2() -> list:
    """w_0..w_4 for (2, 2), written out by hand."""

    ring = ZZ.extend("u1", "u2", "v1", "v2")
    u1, u2, v1, v2 = ring.gens()
    return [
        ring.one,
        u1 * v1,
        u1**2 * v2 + u2 * v1**2 - u2 * v2 * 2,
        u1 * u2 * v1 * v2,
        u2**2 * v2**2,
    ]


def random_int_matrix(rng: random.Random, n: int, bound: int = 3) -> mx.Matrix:

    return [[ZZ(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]


def symfun_suite(config: SuiteConfig, rng: random.Random) -> List[CheckResult]:

    results = []
    table = compute_wk(2, 2, config.max_mn)
    oracle = wk_oracle_2_2()
    mismatch = [k for k, (w, o) in enumerate(zip(table, oracle)) if w.expr != o]
    if mismatch or len(table) != len(oracle):
        k = mismatch[0] if mismatch else len(oracle)
        results.append(CheckResult.failed("wk_oracle_2_2", {"k": k, "m": 2, "n": 2}))
    else:
        results.append(CheckResult.passed("wk_oracle_2_2", len(oracle)))

    for m, n in WK_SHAPES:
        name = f"wk_matrices_{m}_{n}"
        wk = compute_wk(m, n, config.max_mn)
        result = CheckResult.passed(name, config.samples)
        for i in range(config.samples):
            X, Y = random_int_matrix(rng, m), random_int_matrix(rng, n)
            found = verify_wk_on_matrices(m, n, X, Y, ZZ, wk)
            if not found.ok:
                payload = dict(found.counterexample,
                               X=[[str(a) for a in row] for row in X],
                               Y=[[str(a) for a in row] for row in Y])
                result = CheckResult.failed(name, payload, i + 1)
                break
        results.append(result)

    for n in range(1, 5):
        results.extend(_renamed([check_fundamental_theorem(n, 6)], f"n{n}"))
    return results


# tensor


def example_identities(rng: random.Random, samples: int) -> CheckResult:
    """
    rho_1(x) rho_1(y) = rho_1(xy) + rho_(1,1)(x, y) and
    rho_1(x) rho_2(y) = rho_(1,2)(x, y) + rho_(1,1)(xy, y) at n = 3.
    """
    name = "example_identities"
    n = 3
    for algebra in (truncated(ZZ, 3), gaussian_integers()):
        for i in range(samples):
            x, y = random_element(algebra, rng), random_element(algebra, rng)
            first = elem_sym(x, 1, n) * elem_sym(y, 1, n)
            if first != elem_sym(x * y, 1, n) + typed_sym((1, 1), [x, y], n):
                return CheckResult.failed(name, {"identity": 1, "x": str(x), "y": str(y)}, i)
            second = elem_sym(x, 1, n) * elem_sym(y, 2, n)
            expected = typed_sym((1, 2), [x, y], n) + typed_sym((1, 1), [x * y, y], n)
            if second != expected:
                return CheckResult.failed(name, {"identity": 2, "x": str(x), "y": str(y)}, i)
    return CheckResult.passed(name, 2 * samples)


def f4_generation() -> List[CheckResult]:
    """Over F_2 with B = F_4 and n = 3, no single family rho_k(b) generates S_3(B)."""

    algebra, n = f4(), 3
    results = []
    basis = invariant_basis(algebra, n)
    if len(basis) == 4:
        results.append(CheckResult.passed("f4_invariant_rank"))
    else:
        results.append(CheckResult.failed("f4_invariant_rank", {"rank": len(basis)}))

    elements = [algebra.element([a, b]) for a in range(2) for b in range(2)]
    for k in range(1, n + 1):
        name = f"f4_rho{k}_proper"
        sub = generated_subalgebra([elem_sym(b, k, n) for b in elements])
        if sub.is_proper:
            results.append(CheckResult.passed(name, dimension=sub.dimension))
        else:
            results.append(CheckResult.failed(name, {"k": k, "dimension": sub.dimension}))

    try:
        express_in_elementary(elem_sym(algebra.basis(1), 2, n), rho1_only=True)
    except NotInvertibleError:
        results.append(CheckResult.passed("f4_rho1_only_refused"))
    else:
        results.append(CheckResult.failed("f4_rho1_only_refused", {"n": n}))
    return results


def expression_round_trips(max_rank: int = 3, max_n: int = 4) -> CheckResult:

    name = "express_round_trip"
    algebras = {1: base_ring_algebra(ZZ), 2: gaussian_integers(), 3: truncated(ZZ, 3)}
    checked = 0
    for r in range(1, max_rank + 1):
        for n in range(1, max_n + 1):
            for t in invariant_basis(algebras[r], n):
                if evaluate_elementary(express_in_elementary(t)) != t:
                    return CheckResult.failed(
                        name, {"rank": r, "n": n, "t": encode_tensor(t)}, checked
                    )
                checked += 1
    return CheckResult.passed(name, checked)


def tensor_suite(config: SuiteConfig, rng: random.Random) -> List[CheckResult]:

    results = [example_identities(rng, config.samples), expression_round_trips()]
    results.extend(f4_generation())
    for kind, sizes in ((EmbeddingKind.PRODUCT, (2, 3)), (EmbeddingKind.GRID, (2, 3)),
                        (EmbeddingKind.WREATH, (2, 2))):
        results.append(GroupEmbedding(kind, sizes).verify())
    return results


# norm


# fixed instance counts, independent of SAMPLES
NORM_CASES = 200
FLAGGED_TRIPLES = 30
RANDOM_TOWERS = 30


def norm_triples():

    Zt = ZZ.extend("t")
    return [
        regular_triple(gaussian_integers()),
        regular_triple(truncated(GF(5), 3)),
        regular_triple(free_rank(GF(3), 4)),
        regular_triple(quadratic(Zt, Zt.gen("t"))),
    ]


def base_change_identity(samples: int, rng: random.Random) -> List[CheckResult]:

    triple = regular_triple(gaussian_integers())
    return [
        replace(check_base_change(triple, hom, rng, samples), name=f"theta_base_change_{hom.target}")
        for hom in standard_homs(triple.base)
    ]


def ses_identity(samples: int, rng: random.Random) -> List[CheckResult]:

    checks = (
        check_ses_multiplicativity(flagged_triple(rng), rng, samples)
        for _ in range(FLAGGED_TRIPLES)
    )
    return [replace(combine("theta_ses", checks), details={"triples": FLAGGED_TRIPLES})]


def tower_identity(samples: int, rng: random.Random) -> List[CheckResult]:

    lower = quadratic(QQ, 2)
    return [
        replace(check_tower(lower, quadratic(lower, 3, "t"), rng, samples), name="theta_tower_qq"),
        replace(
            check_tower(gaussian_integers(), free_rank(gaussian_integers(), 2), rng, samples),
            name="theta_tower_zi",
        ),
        check_random_towers(rng, RANDOM_TOWERS, samples=min(samples, 5)),
    ]


def tensor_identity(samples: int, rng: random.Random) -> List[CheckResult]:

    return [check_tensor(gaussian_integers(), gaussian_integers(), rng, samples)]


def local_identity(samples: int, rng: random.Random) -> List[CheckResult]:

    dual = dual_numbers(QQ)
    residue = base_ring_algebra(QQ)
    pi = AlgebraMap(dual, residue, [residue.one, residue.zero])
    flag = ModuleFlag(regular_triple(dual), [[0, 1], [1, 0]], (1, 2))
    field_ext = f4()
    field_flag = ModuleFlag(regular_triple(field_ext), mx.identity(GF(2), 2), (2,))
    return [
        replace(check_local_factorization(flag, residue, pi, rng, samples), name="theta_local_dual"),
        replace(
            check_local_factorization(
                field_flag, field_ext, AlgebraMap.identity(field_ext), rng, samples
            ),
            name="theta_local_f4",
        ),
    ]


NORM_IDENTITIES: Dict[str, Callable[[int, random.Random], List[CheckResult]]] = {
    "basechange": base_change_identity,
    "ses": ses_identity,
    "tower": tower_identity,
    "tensor": tensor_identity,
    "local": local_identity,
}


def norm_suite(config: SuiteConfig, rng: random.Random) -> List[CheckResult]:

    results = []
    for i, triple in enumerate(norm_triples()):
        results.extend(_renamed(
            [check_char_coefficients(triple, rng, config.samples),
             check_theta_homomorphism(triple, rng, config.samples)],
            str(i),
        ))
    results.append(check_sampled_char_coefficients(rng, NORM_CASES))
    for name in sorted(NORM_IDENTITIES):
        results.extend(NORM_IDENTITIES[name](config.samples, rng))
    return results


# divided powers


DIVIDED_ALGEBRAS = {
    "zz": lambda: base_ring_algebra(ZZ),
    "gaussian": gaussian_integers,
    "truncated": lambda: truncated(ZZ, 3),
    "f4": f4,
}


def divided_checks(
    algebra: MultTableAlgebra, max_n: int, samples: int, rng: random.Random,
    relation_inputs: Optional[int] = None,
) -> List[CheckResult]:
    """
    Relations, comparison up to max_n, theta_div and both polynomial laws for
    one algebra. The relations run on `relation_inputs` elements, `samples`
    by default.
    """
    relation_inputs = samples if relation_inputs is None else relation_inputs
    results = [check_relations(algebra, rng, relation_inputs)]
    for n in range(1, max_n + 1):
        results.extend(_renamed([check_comparison(algebra, n, rng, samples)], f"n{n}"))
    triple = regular_triple(algebra)
    results.append(check_theta_div(triple, rng, samples))
    for kind in LawKind:
        results.append(law_check(triple, kind, rng, samples=samples))
    return results


DIVIDED_SUITE_ALGEBRAS = ("gaussian", "truncated", "zz")
DIVIDED_RELATION_INPUTS = 100


def divided_suite(config: SuiteConfig, rng: random.Random) -> List[CheckResult]:

    per_algebra = ceil(DIVIDED_RELATION_INPUTS / len(DIVIDED_SUITE_ALGEBRAS))
    results = []
    for name in DIVIDED_SUITE_ALGEBRAS:
        algebra = DIVIDED_ALGEBRAS[name]()
        results.extend(_renamed(
            divided_checks(algebra, 4, config.samples, rng, relation_inputs=per_algebra), name
        ))
    return results


# multivalued


def multi_suite(config: SuiteConfig, rng: random.Random) -> List[CheckResult]:

    size, degree = config.multi_max_size, config.multi_max_degree
    exhaustive = verify_category_laws(
        size, degree, LawMode.EXHAUSTIVE, instance_cap=config.multi_instance_cap
    )
    sampled = verify_category_laws(
        size + 1, degree, LawMode.RANDOM, seed=rng.getrandbits(SEED_BITS),
        samples=config.multi_random,
    )
    results = _renamed(exhaustive.results, "exhaustive") + _renamed(sampled.results, "random")
    results.append(check_degrees(size, degree))
    results.append(check_correspondence(size, degree))
    results.append(check_transfer(size, degree))
    results.append(check_linear_extension(rng, samples=config.samples))
    return results


# cech


def cech_suite(config: SuiteConfig, rng: random.Random) -> List[CheckResult]:

    covers = list(enumerate_covers(
        config.cech_max_base, config.cech_max_pieces, config.cech_max_piece_size
    ))
    logger.info("cech grid: %d covers", len(covers))
    # single points per piece keep the fibres small enough for full depth
    random_covers = [
        random_cover(rng, config.cech_max_base, config.cech_max_pieces, 1)
        for _ in range(config.cech_random)
    ]
    three = [c for c in covers if len(c.pieces) == 3][:10]
    return [
        check_equivalence(covers),
        check_homotopies(covers),
        check_euler(covers),
        check_full_exactness(random_covers, config.cech_depth),
        check_reorderings(three),
        check_transitive_kernels(),
        check_total_complexes(rng, 100),
    ]


SUITE_RUNNERS: Dict[str, Callable[[SuiteConfig, random.Random], List[CheckResult]]] = {
    "symfun": symfun_suite,
    "tensor": tensor_suite,
    "norm": norm_suite,
    "divided": divided_suite,
    "multi": multi_suite,
    "cech": cech_suite,
}


def _run_one(config: SuiteConfig, name: str) -> Tuple[List[CheckResult], float]:

    rng = random.Random(f"{config.seed}:{name}")
    logger.info("suite %s started", name)
    start = time.perf_counter() if config.timings else 0.0
    results = SUITE_RUNNERS[name](config, rng)
    elapsed = time.perf_counter() - start if config.timings else 0.0
    failed = sum(not r.ok for r in results)
    logger.info("suite %s: %d checks, %d failed", name, len(results), failed)
    return sorted(results, key=lambda r: r.name), elapsed


def run_suite(config: SuiteConfig) -> Report:
    """
    Run the selected suites and merge their results.

    Params
    ------
    config: SuiteConfig

    Returns
    -------
    Report
        Sorted by suite, then check name; identical for identical configs
        regardless of `jobs`.
    """
    config.validate()
    names = config.selected
    report = Report(config.seed, config.input_hash)
    if config.timings:
        report.timings = {}

    with ThreadPoolExecutor(max_workers=max(1, config.jobs)) as pool:
        futures = {name: pool.submit(_run_one, config, name) for name in names}
        for name in names:
            results, elapsed = futures[name].result()
            report.suites[name] = results
            if config.timings:
                report.timings[name] = elapsed
    return report


# goldens


GOLDEN_KINDS = ("wk", "elementary", "basis_counts")


def wk_table(m: int, n: int, max_mn: int = 12) -> dict:

    return {"m": m, "n": n, "wk": [encode_sympoly(w) for w in compute_wk(m, n, max_mn)]}


def elementary_table(r: int, n: int) -> dict:
    """express_in_elementary on the orbit basis of the n-th power of a rank r algebra."""

    algebra = {1: base_ring_algebra(ZZ), 2: gaussian_integers(), 3: truncated(ZZ, 3)}[r]
    rows = []
    for t in invariant_basis(algebra, n):
        expr = express_in_elementary(t)
        rows.append({
            "tensor": encode_tensor(t, with_algebra=False),
            "ring": encode_ring(expr.expr.ring),
            "expr": encode_scalar(expr.expr),
            "symbols": [list(s) for s in expr.symbols],
        })
    return {"algebra": encode_algebra(algebra), "n": n, "rows": rows}


def basis_counts() -> dict:

    max_r, max_n = BASIS_COUNT_BOUNDS
    counts = []
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            found = len(invariant_basis(free_rank(ZZ, r), n))
            if found != comb(n + r - 1, r - 1):
                raise SymKernelError("orbit count disagrees with the binomial count", r=r, n=n)
            counts.append({"r": r, "n": n, "count": found})
    return {"counts": counts}


def emit_goldens(
    store: GoldenStore, which: Sequence[str] = GOLDEN_KINDS, max_mn: int = 12
) -> Dict[str, Path]:
    """
    Write the requested golden tables through `store`.

    Returns
    -------
    dict<str, Path>
        Latest revision of every written name; unchanged tables keep their
        previous revision.
    """
    unknown = sorted(set(which) - set(GOLDEN_KINDS))
    if unknown:
        raise ConfigError(f"unknown golden table {', '.join(unknown)}", tables=unknown)

    written = {}
    if "wk" in which:
        for m, n in WK_SHAPES:
            written[f"wk_{m}_{n}"] = store.save(f"wk_{m}_{n}", wk_table(m, n, max_mn))
    if "elementary" in which:
        max_r, max_n = ELEMENTARY_BOUNDS
        for r in range(1, max_r + 1):
            for n in range(1, max_n + 1):
                name = f"elementary_{r}_{n}"
                written[name] = store.save(name, elementary_table(r, n))
    if "basis_counts" in which:
        written["basis_counts"] = store.save("basis_counts", basis_counts())
    logger.info("emitted %d golden tables", len(written))
    return written


# single checks shared by the command line and the HTTP surface


COVER_CHECKS = ("finitistic", "unifibrant", "homology")


def cover_check(cover: Cover, check: str, depth: Optional[int] = None) -> dict:
    """
    finitistic and unifibrant report the decision together with the
    per-point evidence. homology reports the reduced augmented complex in
    full and the full augmented complex truncated at -depth; `ok` is the
    exactness of the reduced one.
    """
    if check not in COVER_CHECKS:
        raise ConfigError(f"unknown cover check {check}; checks: {', '.join(COVER_CHECKS)}")
    if check == "unifibrant":
        witnesses = unifibrant_witnesses(cover)
        return {
            "check": check,
            "ok": all(w is not None for w in witnesses.values()),
            "witnesses": [{"x": x, "piece": w} for x, w in witnesses.items()],
        }
    if check == "finitistic":
        return {
            "check": check,
            "ok": is_finitistic(cover),
            "euler": [{"x": x, "chi": euler_char(cover, x)} for x in cover.base],
        }
    depth = max(len(cover) - 1, 0) if depth is None else depth
    reduced, full = reduced_cech(cover), full_cech(cover, depth)
    reduced_h, full_h = reduced.homology(), full.homology()
    # the bottom degree of the full complex is cut off by the truncation
    full_exact = all(h.is_zero() for k, h in full_h.items() if k > -depth)
    return {
        "check": check,
        "depth": depth,
        "ok": all(h.is_zero() for h in reduced_h.values()),
        "full_exact": full_exact,
        "reduced": {str(k): h.to_dict() for k, h in sorted(reduced_h.items())},
        "full": {str(k): h.to_dict() for k, h in sorted(full_h.items())},
    }
