import json
from fractions import Fraction

import pytest

import qmoments.moments
import qmoments.recurrence
from qmoments import QPoint, InvalidInputError, SuiteConfig, run_suite
from qmoments.suites import DEFAULT_NMAX, SUITE_IDS

F = Fraction


def _strip_durations(report):
    data = json.loads(report.to_json())
    data.pop("durations")
    return json.dumps(data)


def test_single_suite_passes():
    config = SuiteConfig(suite="conjecture", n_max=6, trials=5, seed=7)
    report = run_suite(config)
    assert report.passed()
    record = report.identities[0]
    assert record.id == "conjecture"
    assert record.range == "n=0..6"
    assert record.points == 5
    assert record.counterexample is None


def test_all_suites_report_seven_groups():
    config = SuiteConfig(suite="all", n_max=8, trials=3, seed=11)
    report = run_suite(config)
    assert report.passed()
    assert sorted(r.id for r in report.identities) == sorted(SUITE_IDS)
    assert set(report.durations) == set(SUITE_IDS)
    assert len(report.identities) == 7


def test_default_ranges_echoed():
    assert DEFAULT_NMAX["conjecture"] == 24
    config = SuiteConfig(suite="hankel", trials=2, seed=3, n_max=3)
    report = run_suite(config)
    assert report.identities[0].range == "n=0..3"


def test_theorem_suite_at_spec_scale():
    report = run_suite(SuiteConfig(suite="theorem", n_max=8, trials=25, seed=7))
    assert report.passed()
    assert report.identities[0].points == 25


def test_explicit_points_take_precedence():
    degenerate = QPoint(F(3, 7), F(-3, 7))  # a = -q zeroes lambda_1
    config = SuiteConfig(
        suite="hankel", n_max=4, explicit_points=(degenerate,), trials=9
    )
    report = run_suite(config)
    assert report.passed()
    assert report.identities[0].points == 1
    assert "points" in report.config
    assert report.config["points"] == [{"q": "3/7", "a": "-3/7"}]


def test_unknown_suite_rejected():
    with pytest.raises(InvalidInputError):
        run_suite(SuiteConfig(suite="everything"))


def test_grid_with_explicit_points_rejected():
    with pytest.raises(InvalidInputError):
        run_suite(
            SuiteConfig(
                suite="conjecture",
                mode="grid",
                n_max=1,
                explicit_points=(QPoint(F(1, 2), F(2)),),
            )
        )


def test_reports_deterministic_given_seed():
    config = SuiteConfig(suite="lemmas", n_max=6, trials=4, seed=99)
    first = _strip_durations(run_suite(config))
    second = _strip_durations(run_suite(config))
    assert first == second


def test_grid_mode_conjecture_small():
    report = run_suite(SuiteConfig(suite="conjecture", mode="grid", n_max=1))
    assert report.passed()
    record = report.identities[0]
    assert record.points > 0


def test_grid_mode_hermite_small():
    report = run_suite(SuiteConfig(suite="hermite", mode="grid", n_max=2))
    assert report.passed()


def test_mutated_b_detected_in_random_mode(monkeypatch):
    real = qmoments.recurrence.coeff_b

    def corrupted(n, point):
        value = real(n, point)
        return -value if n == 0 else value

    monkeypatch.setattr(qmoments.recurrence, "coeff_b", corrupted)
    report = run_suite(SuiteConfig(suite="conjecture", n_max=4, trials=2, seed=5))
    assert not report.passed()
    ce = report.identities[0].counterexample
    assert ce is not None
    assert "/" in ce.lhs or ce.lhs.lstrip("-").isdigit()


def test_mutated_lambda_detected_in_grid_mode(monkeypatch):
    real = qmoments.recurrence.coeff_lambda

    def corrupted(n, point):
        value = real(n, point)
        return -value if n % 2 else value

    monkeypatch.setattr(qmoments.recurrence, "coeff_lambda", corrupted)
    report = run_suite(SuiteConfig(suite="conjecture", mode="grid", n_max=2))
    assert not report.passed()


def test_mutated_closed_form_detected(monkeypatch):
    real = qmoments.moments.moment_closed_form

    def corrupted(n, point):
        value = real(n, point)
        return value + 1 if n == 3 else value

    monkeypatch.setattr(qmoments.moments, "moment_closed_form", corrupted)
    report = run_suite(SuiteConfig(suite="theorem", n_max=2, trials=2, seed=5))
    assert not report.passed()


def test_hermite_suite_handles_zero_a():
    # t falls back to q when the sampled a is zero.
    config = SuiteConfig(
        suite="hermite", n_max=4, explicit_points=(QPoint(F(1, 2), F(0)),)
    )
    report = run_suite(config)
    assert report.passed()
