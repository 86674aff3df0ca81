import json
import random
from dataclasses import replace

import pytest

from symkernel.config import load_config
from symkernel.errors import ConfigError
from symkernel.suite import (
    SCHEMA_VERSION,
    SUITES,
    Report,
    SuiteConfig,
    example_identities,
    expression_round_trips,
    f4_generation,
    run_suite,
    wk_oracle_2_2,
)
from symkernel.symfun import compute_wk
from symkernel.witness import CheckResult, combine

SMALL = SuiteConfig(suites=("symfun",), samples=2)


def test_from_config_defaults():

    config = SuiteConfig.from_config(load_config(), suites=[])

    assert config.suites == SUITES
    assert config.seed == 42
    assert config.jobs == 4


def test_from_config_overrides():

    config = SuiteConfig.from_config(load_config(), suites=["cech", "norm"], seed=7, samples=None)

    assert config.selected == ("cech", "norm")
    assert config.seed == 7
    assert config.samples == 30


def test_unknown_suite():

    with pytest.raises(ConfigError) as err:
        SuiteConfig.from_config(load_config(), suites=["symfun", "bogus"])
    assert err.value.details["suites"] == ["bogus"]
    assert "symfun" in err.value.message


@pytest.mark.parametrize("seed", [-1, 2**64])
def test_seed_range(seed):

    with pytest.raises(ConfigError):
        SuiteConfig(seed=seed).validate()


def test_negative_sample_count():

    with pytest.raises(ConfigError):
        SuiteConfig(samples=-1).validate()


def test_input_hash():

    base = SuiteConfig(suites=("norm", "cech"))

    assert base.input_hash == SuiteConfig(suites=("cech", "norm"), jobs=3, timings=True).input_hash
    assert base.input_hash != replace(base, seed=43).input_hash
    assert base.input_hash != replace(base, samples=31).input_hash


def test_wk_oracle_matches_table():

    assert [w.expr for w in compute_wk(2, 2)] == wk_oracle_2_2()


def test_tensor_examples():

    assert example_identities(random.Random(1), 3).ok
    assert all(r.ok for r in f4_generation())
    assert expression_round_trips(2, 3).ok


def test_symfun_report_is_deterministic():

    first = run_suite(SMALL)
    second = run_suite(replace(SMALL, jobs=3))

    assert first.ok
    assert first.to_json() == second.to_json()
    names = [r["name"] for r in first.to_dict()["suites"]["symfun"]]
    assert names == sorted(names)
    assert "wk_oracle_2_2" in names


def test_report_layout():

    data = json.loads(run_suite(SMALL).to_json())

    assert data["schema_version"] == SCHEMA_VERSION
    assert data["seed"] == 42
    assert data["input_hash"] == SMALL.input_hash
    assert list(data["suites"]) == ["symfun"]
    assert "timings" not in data


def test_timings_on_request():

    report = run_suite(replace(SMALL, timings=True))

    assert set(report.timings) == {"symfun"}
    assert "timings" in report.to_dict()


def test_failed_report():

    failing = CheckResult.failed("broken", {"x": "1"}, 3)
    report = Report(1, "abc", {"demo": [CheckResult.passed("fine"), failing]})

    assert not report.ok
    assert report.exit_code == 1
    assert report.failures() == [("demo", failing)]
    text = report.to_text()
    assert "result: FAIL" in text
    assert 'counterexample: {"x":"1"}' in text


def test_combine_reports_first_failure():

    results = [
        CheckResult.passed("a", 2),
        CheckResult.failed("b", {"k": 1}, 1),
        CheckResult.failed("c", {"k": 2}, 1),
    ]
    combined = combine("all", results)

    assert not combined.ok
    assert combined.checked == 3
    assert combined.counterexample == {"k": 1, "check": "b"}
