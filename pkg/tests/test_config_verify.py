import json

import jsonschema
import pytest

from plancherel.config import RunConfig, parse_tolerance
from plancherel.errors import ResolutionError
from plancherel.verify import (
    DEFAULT_TOLERANCES,
    SUITES,
    check_tolerance_names,
    dumps_report,
    run_verification,
    validate_report,
)


def test_default_config_is_self_dual():
    c = RunConfig()
    assert c.grid.is_self_dual
    assert c.grid.n_points == 1024
    assert c.log_grid.n_points == 4096


def test_explicit_half_width():
    g = RunConfig(half_width=12.0).grid
    assert g.half_width == 12.0 and not g.is_self_dual


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_points": 7},
        {"n_points": 2},
        {"basis_size": 0},
        {"mellin_points": 63},
        {"half_width": -1.0},
        {"n_points": 10.5},
        {"tolerances": {"fourier.eigen": -1}},
    ],
)
def test_invalid_config(kwargs):
    with pytest.raises(ResolutionError):
        RunConfig(**kwargs)


def test_replace_ignores_none_and_merges_tolerances():
    c = RunConfig(tolerances={"fourier.eigen": 1e-3})
    d = c.replace(n_points=None, basis_size=32, tolerances={"mellin.parseval": 1e-5})
    assert d.n_points == 1024 and d.basis_size == 32
    assert d.tolerances == {"fourier.eigen": 1e-3, "mellin.parseval": 1e-5}
    assert c.tolerances == {"fourier.eigen": 1e-3}


def test_from_file(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"n_points": 512, "tolerances": {"hardy.eigen": 1e-4}}))
    c = RunConfig.from_file(p)
    assert c.n_points == 512 and c.tol("hardy.eigen", 1.0) == 1e-4
    assert RunConfig.from_file(p).to_dict() == c.to_dict()


def test_from_file_rejects_unknown_keys(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"points": 512}))
    with pytest.raises(ResolutionError):
        RunConfig.from_file(p)


def test_parse_tolerance():
    assert parse_tolerance("fourier.eigen=1e-3") == ("fourier.eigen", 1e-3)
    with pytest.raises(ValueError):
        parse_tolerance("fourier.eigen")
    with pytest.raises(ValueError):
        parse_tolerance("=1")


def test_tolerance_names():
    check_tolerance_names({"fourier.eigen": 1, "hardy.eigen.1": 1})
    with pytest.raises(ResolutionError):
        check_tolerance_names({"fourier.nonsense": 1})


def test_gamma_report():
    report = run_verification("gamma")
    validate_report(report)
    assert report["passed"]
    names = {c["name"] for c in report["checks"]}
    assert {"gamma.recurrence", "gamma.reflection", "gamma.duplication",
            "gamma.cosine", "gamma.sine"} <= names
    for c in report["checks"]:
        assert c["residual"] < c["tolerance"]


def test_tolerance_override_is_recorded():
    config = RunConfig(tolerances={"gamma.cosine": 1e-3})
    report = run_verification("gamma", config)
    assert report["config"]["tolerances"] == {"gamma.cosine": 1e-3}
    check = next(c for c in report["checks"] if c["name"] == "gamma.cosine")
    assert check["tolerance"] == 1e-3


def test_tight_tolerance_fails():
    report = run_verification("gamma", RunConfig(tolerances={"gamma.recurrence": 1e-30}))
    assert not report["passed"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_verification("nope")


def test_unresolved_grid():
    with pytest.raises(ResolutionError):
        run_verification("ladder", RunConfig(n_points=8))


def test_default_tolerances_cover_every_suite():
    families = {k.split(".")[0] for k in DEFAULT_TOLERANCES}
    # the ladder suite also reports the hermite.* checks
    assert families == set(SUITES) | {"hermite"}


def test_schema_rejects_malformed_report():
    report = run_verification("gamma")
    del report["checks"][0]["residual"]
    with pytest.raises(jsonschema.ValidationError):
        validate_report(report)


def test_dumps_report_is_stable():
    a = dumps_report(run_verification("gamma"))
    b = dumps_report(run_verification("gamma"))
    assert a == b
    assert json.loads(a)["suite"] == "gamma"
