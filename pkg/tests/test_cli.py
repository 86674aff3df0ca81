import json
from pathlib import Path

from click.testing import CliRunner

from symkernel import __version__
from symkernel.cli import main

# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"


def invoke(*args: str):

    return CliRunner().invoke(main, [str(a) for a in args])


def test_version():

    result = invoke("--version")

    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_wk_table():

    result = invoke("wk", 1, 2)
    data = json.loads(result.stdout)

    assert result.exit_code == 0
    assert (data["m"], data["n"]) == (1, 2)
    assert len(data["wk"]) == 3


def test_wk_text():

    result = invoke("wk", 1, 1, "--format", "text")

    assert result.exit_code == 0
    assert result.stdout.startswith("w_0 = 1\n")


def test_wk_cap_is_invalid_input():

    result = invoke("--max-mn", 4, "wk", 3, 3)
    error = json.loads(result.stderr)

    assert result.exit_code == 2
    assert error["error"] == "resource_cap"
    assert error["details"]["cap"] == 4


def test_algebra_validate():

    result = invoke("algebra", "validate", RESOURCES / "sample_algebra.json")

    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"labels": ["1", "i"], "rank": 2, "valid": True}


def test_algebra_validate_rejects():

    result = invoke("algebra", "validate", RESOURCES / "noncommutative_algebra.json")

    assert result.exit_code == 2
    assert json.loads(result.stderr)["error"] == "algebra_axiom"


def test_rho():

    result = invoke("rho", "--algebra", "gaussian", "--n", 2, "--type", "1", "--element", "0,1")
    data = json.loads(result.stdout)

    assert result.exit_code == 0
    assert data["basis"] == "orbit_sums"
    assert data["terms"] == [{"tuple": [0, 1], "coeff": "1"}]


def test_express():

    result = invoke("express", RESOURCES / "sample_tensor.json")

    assert result.exit_code == 0
    assert "symbols" in json.loads(result.stdout)


def test_cech_checks():

    unifibrant = invoke("cech", RESOURCES / "sample_cover.json", "--check", "unifibrant")
    finitistic = invoke("cech", RESOURCES / "double_cover.json")

    assert unifibrant.exit_code == 0
    assert json.loads(unifibrant.stdout)["ok"]
    assert finitistic.exit_code == 1
    assert json.loads(finitistic.stdout)["euler"] == [{"x": "a", "chi": -1}]


def test_cech_homology_text():

    result = invoke(
        "cech", RESOURCES / "sample_cover.json", "--check", "homology", "--format", "text"
    )

    assert result.exit_code == 0
    assert result.stdout.startswith("ok   homology")


def test_cech_unknown_check():

    assert invoke("cech", RESOURCES / "sample_cover.json", "--check", "bogus").exit_code == 2


def test_divided():

    result = invoke("divided", "--algebra", "zz", "--max-n", 2, "--samples", 2)

    assert result.exit_code == 0
    assert all(r["ok"] for r in json.loads(result.stdout))


def test_divided_unknown_algebra():

    result = invoke("divided", "--algebra", "octonions")

    assert result.exit_code == 2
    assert json.loads(result.stderr)["error"] == "config"


def test_norm_check():

    result = invoke("norm", "check", "--identity", "tensor", "--samples", 2)

    assert result.exit_code == 0
    assert [r["name"] for r in json.loads(result.stdout)] == ["theta_tensor"]


def test_multi_laws():

    result = invoke("multi", "laws", "--max-size", 1, "--max-degree", 1)
    data = json.loads(result.stdout)

    assert result.exit_code == 0
    assert data["ok"]
    assert data["mode"] == "exhaustive"


def test_suite_is_reproducible(tmp_path):

    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for out in (first, second):
        result = invoke("suite", "--suites", "symfun", "--samples", 2, "--out", out)
        assert result.exit_code == 0

    assert first.read_bytes() == second.read_bytes()
    assert json.loads(first.read_text())["ok"]


def test_suite_unknown():

    result = invoke("suite", "--suites", "symfun,bogus")

    assert result.exit_code == 2
    assert json.loads(result.stderr)["details"]["suites"] == ["bogus"]


def test_goldens_emit_and_verify(tmp_path):

    emitted = invoke("goldens", "--dir", tmp_path, "--table", "basis_counts")
    verified = invoke("goldens", "--dir", tmp_path, "--table", "basis_counts", "--verify")
    missing = invoke("goldens", "--dir", tmp_path / "empty", "--table", "basis_counts", "--verify")

    assert emitted.exit_code == 0
    assert json.loads(emitted.stdout) == {"basis_counts": "basis_counts-0.json"}
    assert verified.exit_code == 0
    assert missing.exit_code == 1
