"""The named verification suites must be green at the default scale."""

import pytest

from fockbench.verify import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_is_green(name):
    report = run_suite(name)
    failing = [c for c in report.checks if not c.passed]
    assert not failing, failing
    assert report.passed
    assert report.wall_time_s >= 0.0


def test_scale_zero_forces_a_failure():
    report = run_suite("coherent", tol_scale=0.0)
    assert not report.passed
    assert all(c.bound == 0.0 for c in report.checks)


def test_scale_relaxes_bounds():
    strict = run_suite("coherent")
    loose = run_suite("coherent", tol_scale=10.0)
    for a, b in zip(strict.checks, loose.checks):
        assert b.bound == pytest.approx(10.0 * a.bound)
        assert a.measured == b.measured


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_config_overrides_dimension():
    report = run_suite("coherent", {"dim": 48})
    assert report.passed
