import dataclasses
import math

import pytest

from rverify import registry as R
from rverify.outcome import CheckOutcome, SkipCheck

MANDATED = """q783-special-values q783-functional berndt-evans-reduction q295-reciprocity ramphi-special-values
ramphi-sine-functional ramphi-gauss-sum letter-cf-1 letter-cf-2 thetakernel-modular-1 thetakernel-modular-2
mustafy-cos mustafy-sin gamma-quad-product bessel-product riemann-eq12 riemann-eq13 f-ns-s0 master-theorem
beta-from-master q-beta frullani frullani-generalized elliptic-addition entry-arccos entry-double-integral
entry-page172 quartic-inversion lemniscate-inversion lemniscate-doubling lemma-dlambda entry5-elliptic
entry5-constant-c entry14 entry35""".split()


def _values(o: CheckOutcome):
    return dataclasses.replace(o, wall_time_ms=0.0)


def test_catalog_contains_mandated_families():
    ids = [s.id for s in R.catalog()]
    assert len(MANDATED) == 35
    assert len(ids) >= 35
    assert set(MANDATED) <= set(ids)


def test_catalog_ids_unique_and_anchored():
    specs = R.catalog()
    assert len({s.id for s in specs}) == len(specs)
    for s in specs:
        assert s.plumbing or s.anchor.strip()
        assert s.grid, s.id
        assert s.tier in R.TIERS and s.group in R.GROUPS


def test_catalog_is_stable():
    assert [s.id for s in R.catalog()] == [s.id for s in R.catalog()]


def test_tier_tolerances():
    for tier, rel in (("strict", 1e-8), ("standard", 1e-6), ("loose", 1e-4)):
        tol = R.TIER_TOLERANCE[tier]
        assert tol.rel_tol == rel and tol.abs_tol == 1e-12


def test_checkspec_validation():
    with pytest.raises(ValueError):
        R.CheckSpec("x", "problems", "a", "bogus", ({},), lambda: (0, 0))
    with pytest.raises(ValueError):
        R.CheckSpec("x", "problems", "", "strict", ({},), lambda: (0, 0))
    R.CheckSpec("x", "problems", "", "strict", ({},), lambda: (0, 0), plumbing=True)


def test_q783_run_passes():
    report = R.run("q783-*")
    assert {o.check_id for o in report.outcomes} == {"q783-special-values", "q783-functional"}
    assert all(o.status == "pass" for o in report.outcomes)
    assert report.exit_code == 0


def test_strict_tier_has_no_failures():
    report = R.run("*", ["strict"])
    assert report.summary["fail"] == 0
    assert report.summary["pass"] == len(report.outcomes)


def test_experimental_does_not_affect_exit_code():
    report = R.run("f-ns-*", ["experimental"])
    assert report.outcomes and all(o.status == "experimental" for o in report.outcomes)
    assert report.exit_code == 0


def test_outcomes_ordered_by_id_and_index():
    report = R.run("entry*")
    keys = [(o.check_id, R.get_check(o.check_id).grid.index(o.params)) for o in report.outcomes]
    assert keys == sorted(keys)


def test_serial_and_parallel_agree():
    serial = R.run("ramphi-*")
    parallel = R.run("ramphi-*", jobs=3)
    assert [_values(o) for o in serial.outcomes] == [_values(o) for o in parallel.outcomes]


def _patched(monkeypatch, spec):
    real = R.get_check
    monkeypatch.setattr(R, "get_check", lambda cid: spec if cid == spec.id else real(cid))


def test_evaluator_exception_becomes_failure(monkeypatch):
    def boom(x):
        raise ZeroDivisionError("division by zero in evaluator")

    spec = R.CheckSpec("plumbing-raises", "problems", "", "strict", ({"x": 1.0},), boom, plumbing=True)
    _patched(monkeypatch, spec)
    o = R.evaluate_point(spec.id, 0)
    assert o.status == "fail" and "ZeroDivisionError" in o.message
    assert math.isnan(o.abs_residual)


def test_experimental_exception_stays_experimental(monkeypatch):
    def boom():
        raise RuntimeError("nope")

    spec = R.CheckSpec("plumbing-exp", "problems", "", "experimental", ({},), boom, plumbing=True)
    _patched(monkeypatch, spec)
    assert R.evaluate_point(spec.id, 0).status == "experimental"


def test_skip_check(monkeypatch):
    def skip():
        raise SkipCheck("outside hypotheses")

    spec = R.CheckSpec("plumbing-skip", "problems", "", "strict", ({},), skip, plumbing=True)
    _patched(monkeypatch, spec)
    o = R.evaluate_point(spec.id, 0)
    assert o.status == "skipped" and o.message == "outside hypotheses"


def test_tol_scale_loosens(monkeypatch):
    spec = R.CheckSpec("plumbing-near", "problems", "", "strict", ({},), lambda: (1.0 + 3e-8, 1.0), plumbing=True)
    _patched(monkeypatch, spec)
    assert R.evaluate_point(spec.id, 0).status == "fail"
    assert R.evaluate_point(spec.id, 0, tol_scale=10).status == "pass"


def test_report_exit_code_and_summary():
    ok = CheckOutcome("a", {}, 1.0, 1.0, 0.0, 0.0, "pass")
    bad = CheckOutcome("b", {}, 1.0, 2.0, 1.0, 0.5, "fail")
    exp = CheckOutcome("c", {}, 1.0, 2.0, 1.0, 0.5, "experimental")
    assert R.Report([ok, exp]).exit_code == 0
    assert R.Report([ok, bad, exp]).exit_code == 1
    assert R.Report([ok, bad, exp]).summary == {"pass": 1, "fail": 1, "skipped": 0, "experimental": 1}


@pytest.mark.parametrize(
    "kwargs",
    [
        {"tol_scale": 0.5},
        {"tol_scale": math.nan},
        {"jobs": 0},
        {"tiers": ["bogus"]},
        {"filter": "no-such-check*"},
    ],
)
def test_config_errors(kwargs):
    with pytest.raises(R.ConfigError):
        R.run(**kwargs)


def test_select_by_group():
    specs = R.select("*", group="elliptic")
    assert specs and all(s.group == "elliptic" and s.section == 5 for s in specs)
    with pytest.raises(R.ConfigError):
        R.select("*", group="nowhere")


def test_addition_variant_is_named_in_outcomes():
    report = R.run("elliptic-addition*")
    passing = {o.params["radical"] for o in report.outcomes if o.status == "pass"}
    assert passing == {"x^2"}
