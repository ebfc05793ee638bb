import json

import pytest

from src.config import RunConfig
from src.exceptions import UnknownSuiteError
from src.verification import SUITE_ORDER, cmd_example, run_suite

SMALL = dict(kr_weight=4, closed_form_weight=4, sigma_bound=8, samples=2)


def names(report):
    return [check.name for check in report.checks]


def failures(report):
    return [(check.name, check.detail, check.counterexample) for check in report.checks if not check.passed]


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("galois", RunConfig())


def test_kr_suite_passes_and_is_deterministic():
    config = RunConfig(seed=7, **SMALL)
    first = run_suite("kr", config)
    assert failures(first) == []
    assert all(name.startswith("kr.") for name in names(first))
    assert first.to_json() == run_suite("kr", config).to_json()
    data = json.loads(first.to_json())
    assert data["schema"] == 1
    assert data["seed"] == 7
    assert data["passed"] is True


def test_subrings_suite():
    report = run_suite("subrings", RunConfig(**SMALL))
    assert failures(report) == []
    assert "subrings.power_closure" in names(report)


def test_subrings_grids_are_complete():
    report = run_suite("subrings", RunConfig(**SMALL))
    details = {check.name: check.detail for check in report.checks}
    # 4 (p, j) pairs × 11 partitions of weight <= 4
    assert details["subrings.power"] == "44 cells"
    # 4 (p, j) pairs × (1 + 4 + 9 + 25) (λ', μ') pairs
    assert details["subrings.congruence"] == "156 cells"


def test_fields_suite():
    report = run_suite("fields", RunConfig(**SMALL))
    assert failures(report) == []


def test_insep_suite():
    report = run_suite("insep", RunConfig(**SMALL))
    assert failures(report) == []
    assert "insep.tame_criterion" in names(report)


def test_suite_order():
    assert SUITE_ORDER == ("kr", "subrings", "fields", "insep")


def test_example_report():
    report = cmd_example(RunConfig())
    assert failures(report) == []
    assert names(report) == ["example.profile", "example.d_values", "example.congruence",
                             "example.containment", "example.residue_contrast", "example.small_residue_field"]
    table = report.to_table()
    assert "6/6 checks passed" in table


def test_example_over_f4():
    report = cmd_example(RunConfig(base="laurent:p=2,d=2"))
    assert failures(report) == []
    containment = next(check for check in report.checks if check.name == "example.containment")
    assert "g_4(1) = 1" in containment.detail


def test_tampered_example_fails():
    report = cmd_example(RunConfig(), "X^8 + t*X^2 + t")
    assert not report.passed
    failed = {check.name for check in report.checks if not check.passed}
    assert "example.profile" in failed
