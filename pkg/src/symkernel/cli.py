"""
Command line driver.

Every command prints canonical JSON by default or text with --format text,
to stdout or to --out. Exit codes: 0 when every check passes, 1 when an
identity fails, 2 on invalid input (the error payload goes to stderr).
"""

import logging
import random
import tempfile
from pathlib import Path
from typing import Callable, Iterable, List, Optional

import click

from . import __version__
from .algebra import MultTableAlgebra
from .boilerplate.report import CHECK_RESULT, LAW_LINE
from .codec import (
    canonical,
    decode_algebra,
    decode_cover,
    decode_element,
    decode_sympoly,
    decode_tensor,
    encode_ring,
    encode_scalar,
    encode_tensor,
    load_json,
)
from .config import load_config
from .db.goldens import GoldenStore
from .errors import ConfigError, SymKernelError
from .multivalued import LawMode, verify_category_laws
from .suite import (
    COVER_CHECKS,
    DIVIDED_ALGEBRAS,
    GOLDEN_KINDS,
    NORM_IDENTITIES,
    SUITES,
    SuiteConfig,
    cover_check,
    divided_checks,
    emit_goldens,
    render_check,
    run_suite,
    wk_table,
)
from .tensor import SymTensor, express_in_elementary, typed_sym
from .witness import CheckResult

logger = logging.getLogger(__name__)

FORMATS = ("json", "text")


class KernelGroup(click.Group):
    """Maps kernel errors to exit code 2 with the JSON payload on stderr."""

    def invoke(self, ctx: click.Context):

        try:
            return super().invoke(ctx)
        except SymKernelError as err:
            logger.debug("aborting on %s", err.code)
            click.echo(canonical(err.to_dict()), err=True, nl=False)
            ctx.exit(2)


def output_options(func: Callable) -> Callable:
    """--seed, --samples, --out and --format, shared by every command."""

    func = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json",
                        show_default=True)(func)
    func = click.option("--out", type=click.Path(dir_okay=False, path_type=Path),
                        help="Write the result here instead of stdout.")(func)
    func = click.option("--samples", type=int, help="Random instances per check.")(func)
    func = click.option("--seed", type=int, help="Seed of every random choice.")(func)
    return func


def settings(ctx: click.Context, seed: Optional[int] = None, samples: Optional[int] = None):

    return load_config({
        "MAX_MN": ctx.obj["max_mn"],
        "SEED": seed,
        "SAMPLES": samples,
    })


def emit(data, text: str, fmt: str, out: Optional[Path]) -> None:

    rendered = canonical(data) if fmt == "json" else text
    if out is None:
        click.echo(rendered, nl=False)
    else:
        out.write_text(rendered)
        logger.info("wrote %s", out)


def emit_results(results: List[CheckResult], fmt: str, out: Optional[Path]) -> None:

    text = "\n".join(render_check(r) for r in results) + "\n"
    emit([r.to_dict() for r in results], text, fmt, out)
    click.get_current_context().exit(0 if all(results) else 1)


def resolve_algebra(spec: str) -> MultTableAlgebra:
    """A catalog name or the path of an algebra JSON file."""

    if spec in DIVIDED_ALGEBRAS:
        return DIVIDED_ALGEBRAS[spec]()
    if not Path(spec).is_file():
        raise ConfigError(
            f"{spec} is neither a file nor one of {', '.join(sorted(DIVIDED_ALGEBRAS))}",
            algebra=spec,
        )
    return decode_algebra(load_json(spec))


def parse_list(values: Optional[str]) -> List[str]:

    return [v.strip() for v in values.split(",") if v.strip()] if values else []


@click.group(cls=KernelGroup)
@click.version_option(__version__, prog_name="symkernel")
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level.")
@click.option("--max-mn", type=int, help="Cap on mn for the w_k tables.")
@click.pass_context
def main(ctx: click.Context, verbose: bool, max_mn: Optional[int]) -> None:
    """Exact identity checks on symmetric tensors, norms and Cech complexes."""

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.ensure_object(dict)
    ctx.obj["max_mn"] = max_mn


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@output_options
@click.pass_context
def wk(ctx, m, n, seed, samples, out, fmt) -> None:
    """The polynomials w_0..w_mn with det(t + X (x) Y) = sum w_k(chi(X), chi(Y)) t^(mn-k)."""

    config = settings(ctx, seed, samples)
    table = wk_table(m, n, config["MAX_MN"])
    text = "".join(
        f"w_{k} = {decode_sympoly(w).expr}\n" for k, w in enumerate(table["wk"])
    )
    emit(table, text, fmt, out)


@main.command()
@click.option("--algebra", "algebra_spec", required=True,
              help="Catalog name or algebra JSON file.")
@click.option("--n", "n", type=int, required=True, help="Tensor power.")
@click.option("--type", "type_", required=True, help="Comma separated n-type, e.g. 1,2.")
@click.option("--element", "elements", multiple=True, required=True,
              help="Comma separated coordinates, one option per entry.")
@output_options
def rho(algebra_spec, n, type_, elements, seed, samples, out, fmt) -> None:
    """The orbit sum rho_a(b_1, ..., b_r) in the n-th tensor power."""

    algebra = resolve_algebra(algebra_spec)
    a = [int(v) for v in parse_list(type_)]
    bs = [decode_element(parse_list(e), algebra) for e in elements]
    t = typed_sym(a, bs, n, algebra)
    text = "".join(f"{list(key)}: {c}\n" for key, c in sorted(t.coeffs.items()))
    emit(encode_tensor(t), text, fmt, out)


@main.command()
@click.argument("tensor", type=click.Path(exists=True, dir_okay=False))
@click.option("--rho1-only", is_flag=True, help="Use the symbols rho_1(e) alone.")
@output_options
def express(tensor, rho1_only, seed, samples, out, fmt) -> None:
    """Rewrite an invariant tensor as a polynomial in the rho_k(e)."""

    t = decode_tensor(load_json(tensor))
    if not isinstance(t, SymTensor):
        t = SymTensor.from_tensor(t)
    expr = express_in_elementary(t, rho1_only=rho1_only)
    data = {
        "ring": encode_ring(expr.expr.ring),
        "expr": encode_scalar(expr.expr),
        "symbols": [list(s) for s in expr.symbols],
    }
    emit(data, f"{expr}\n", fmt, out)


@main.group()
def norm() -> None:
    """Identities of the symmetrization map."""


@norm.command("check")
@click.option("--identity", "identities", multiple=True,
              type=click.Choice(sorted(NORM_IDENTITIES)),
              help="Identity to check; repeat for several, default all.")
@output_options
@click.pass_context
def norm_check(ctx, identities, seed, samples, out, fmt) -> None:
    """Base change, short exact sequences, towers, tensor products and local factorization."""

    config = settings(ctx, seed, samples)
    rng = random.Random(f"{config['SEED']}:norm")
    results = []
    for name in sorted(identities or NORM_IDENTITIES):
        results.extend(NORM_IDENTITIES[name](config["SAMPLES"], rng))
    emit_results(results, fmt, out)


@main.command()
@click.option("--algebra", "algebra_spec", default="gaussian", show_default=True,
              help="Catalog name or algebra JSON file.")
@click.option("--max-n", type=int, default=3, show_default=True)
@output_options
@click.pass_context
def divided(ctx, algebra_spec, max_n, seed, samples, out, fmt) -> None:
    """Divided power relations, the comparison with invariants and both polynomial laws."""

    config = settings(ctx, seed, samples)
    algebra = resolve_algebra(algebra_spec)
    rng = random.Random(f"{config['SEED']}:divided")
    emit_results(divided_checks(algebra, max_n, config["SAMPLES"], rng), fmt, out)


@main.group()
def multi() -> None:
    """Multiset-valued morphisms."""


@multi.command("laws")
@click.option("--max-size", type=int, help="Largest finite set.")
@click.option("--max-degree", type=int, help="Largest multiset size.")
@click.option("--mode", type=click.Choice([m.value for m in LawMode]),
              default=LawMode.EXHAUSTIVE.value, show_default=True)
@output_options
@click.pass_context
def multi_laws(ctx, max_size, max_degree, mode, seed, samples, out, fmt) -> None:
    """Structure laws of the category of multiset-valued maps."""

    config = settings(ctx, seed)
    report = verify_category_laws(
        max_size or config["MULTI_MAX_SIZE"],
        max_degree or config["MULTI_MAX_DEGREE"],
        LawMode(mode),
        seed=config["SEED"],
        samples=samples or config["MULTI_RANDOM"],
        instance_cap=config["MULTI_INSTANCE_CAP"],
    )
    lines = [
        LAW_LINE.format(mark="ok  " if r.ok else "FAIL", name=r.name, checked=r.checked,
                        mode=r.details.get("mode", report.mode.value))
        for r in report.results
    ]
    emit(report.to_dict(), "\n".join(lines) + "\n", fmt, out)
    ctx.exit(0 if report.ok else 1)


@main.command()
@click.argument("cover", type=click.Path(exists=True, dir_okay=False))
@click.option("--check", type=click.Choice(COVER_CHECKS), default="finitistic",
              show_default=True)
@click.option("--depth", type=int, help="Depth of the homology computation.")
@output_options
def cech(cover, check, depth, seed, samples, out, fmt) -> None:
    """Decide finitistic or unifibrant, or compute the homology of a cover."""

    result = cover_check(decode_cover(load_json(cover)), check, depth)
    text = CHECK_RESULT.format(mark="ok  " if result["ok"] else "FAIL", name=check, checked=1)
    emit(result, text + "\n", fmt, out)
    click.get_current_context().exit(0 if result["ok"] else 1)


@main.command()
@click.option("--suites", help=f"Comma separated selection from {', '.join(SUITES)}.")
@click.option("--timings", is_flag=True, help="Record seconds per suite.")
@click.option("--jobs", type=int, help="Suites run in parallel.")
@output_options
@click.pass_context
def suite(ctx, suites, timings, jobs, seed, samples, out, fmt) -> None:
    """Run the identity suites and write the report."""

    config = SuiteConfig.from_config(
        settings(ctx, seed, samples), suites=parse_list(suites), timings=timings, jobs=jobs
    )
    report = run_suite(config)
    for name, result in report.failures():
        logger.warning("%s/%s failed", name, result.name)
    emit(report.to_dict(), report.to_text(), fmt, out)
    ctx.exit(report.exit_code)


@main.command()
@click.option("--dir", "directory", type=click.Path(file_okay=False, path_type=Path),
              help="Golden directory, GOLDEN_DIR by default.")
@click.option("--table", "tables", multiple=True, type=click.Choice(GOLDEN_KINDS),
              help="Table kind; repeat for several, default all.")
@click.option("--verify", is_flag=True, help="Compare with the stored goldens instead of writing.")
@output_options
@click.pass_context
def goldens(ctx, directory, tables, verify, seed, samples, out, fmt) -> None:
    """Write or verify the canonical golden tables."""

    config = settings(ctx, seed, samples)
    store = GoldenStore(directory or config["GOLDEN_DIR"])
    which = tables or GOLDEN_KINDS
    if verify:
        emit_results(verify_goldens(store, which, config["MAX_MN"]), fmt, out)
        return
    written = emit_goldens(store, which, config["MAX_MN"])
    data = {name: path.name for name, path in sorted(written.items())}
    text = "".join(f"{name}: {path}\n" for name, path in sorted(written.items()))
    emit(data, text, fmt, out)


def verify_goldens(store: GoldenStore, which: Iterable[str], max_mn: int) -> List[CheckResult]:
    """Re-emit into a scratch store and compare bytes with the stored files."""

    results = []
    with tempfile.TemporaryDirectory() as scratch:
        fresh = GoldenStore(scratch)
        for name, path in sorted(emit_goldens(fresh, which, max_mn).items()):
            stored = store.path(name)
            if stored is not None and stored.read_text() == path.read_text():
                results.append(CheckResult.passed(f"golden_{name}"))
            else:
                results.append(CheckResult.failed(
                    f"golden_{name}", {"name": name, "stored": stored is not None}
                ))
    return results


@main.group()
def algebra() -> None:
    """Algebras given by multiplication tables."""


@algebra.command("validate")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@output_options
def algebra_validate(path, seed, samples, out, fmt) -> None:
    """Check associativity, commutativity and the unit of an algebra file."""

    algebra_ = decode_algebra(load_json(path))
    data = {"valid": True, "rank": algebra_.rank, "labels": list(algebra_.labels)}
    emit(data, f"valid algebra of rank {algebra_.rank}\n", fmt, out)
