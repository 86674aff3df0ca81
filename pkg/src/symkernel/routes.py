from flask import Blueprint, Response, current_app, jsonify, request

from . import __version__
from .codec import decode_algebra, decode_cover
from .errors import CodecError, SymKernelError
from .multivalued import LawMode, verify_category_laws
from .suite import SuiteConfig, cover_check, run_suite, wk_table

bp = Blueprint("bp", __name__)


def payload() -> dict:

    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise CodecError("request body must be a JSON object")
    return data


@bp.errorhandler(SymKernelError)
def kernel_error(err: SymKernelError) -> Response:

    current_app.logger.info("rejected request: %s", err.message)
    return jsonify(err.to_dict()), 400


@bp.route("/health")
def health() -> Response:

    return jsonify(status="ok", version=__version__)


@bp.route("/wk", methods=["POST"])
def wk() -> Response:

    data = payload()
    try:
        m, n = int(data["m"]), int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise CodecError("m and n must be integers")
    return jsonify(wk_table(m, n, current_app.config["MAX_MN"]))


@bp.route("/algebra/validate", methods=["POST"])
def validate_algebra() -> Response:

    algebra = decode_algebra(payload())
    return jsonify(valid=True, rank=algebra.rank)


@bp.route("/cech", methods=["POST"])
def cech() -> Response:

    data = payload()
    cover = decode_cover(data.get("cover"))
    depth = data.get("depth")
    return jsonify(cover_check(cover, data.get("check", "finitistic"),
                               None if depth is None else int(depth)))


@bp.route("/multi/laws", methods=["POST"])
def multi_laws() -> Response:

    data = payload()
    config = current_app.config
    try:
        report = verify_category_laws(
            int(data.get("max_size", config["MULTI_MAX_SIZE"])),
            int(data.get("max_degree", config["MULTI_MAX_DEGREE"])),
            LawMode(data.get("mode", LawMode.EXHAUSTIVE.value)),
            seed=int(data.get("seed", config["SEED"])),
            samples=config["MULTI_RANDOM"],
            instance_cap=config["MULTI_INSTANCE_CAP"],
        )
    except (TypeError, ValueError) as err:
        raise CodecError(f"malformed law request: {err}")
    return jsonify(report.to_dict())


@bp.route("/suite", methods=["POST"])
def suite() -> Response:

    data = payload()
    config = SuiteConfig.from_config(
        current_app.config, suites=data.get("suites"), seed=data.get("seed")
    )
    return jsonify(run_suite(config).to_dict())
