from fractions import Fraction

import pytest

from surfcalc.classify import CheckResult, ConstructionReport, ExampleReport
from surfcalc.classify.reports import show
from surfcalc.errors import NotContractible


@pytest.mark.unit
@pytest.mark.parametrize(
    "value, text",
    [
        (True, "true"),
        (Fraction(-3, 6), "-1/2"),
        (4, "4"),
        ((1, Fraction(1, 3)), "(1, 1/3)"),
        ({"E1": Fraction(2, 7)}, "{E1: 2/7}"),
        ("Z + Z/2", "Z + Z/2"),
    ],
)
def test_show_exact_text(value: object, text: str) -> None:
    assert show(value) == text


@pytest.mark.unit
def test_check_result_compare() -> None:
    ok = CheckResult.compare("K_X^2", Fraction(1, 3), Fraction(2, 6))
    bad = CheckResult.compare("rho", 12, 13)

    assert ok.passed
    assert ok.computed == "1/3"
    assert not bad.passed
    assert (bad.computed, bad.expected) == ("12", "13")


@pytest.mark.unit
def test_check_result_holds_and_failed() -> None:
    plain = CheckResult.holds("integral", False)
    detailed = CheckResult.holds("-K_Y relation", True, detail="-K_Y - Σ = [0]")
    failed = CheckResult.failed("class group", NotContractible("not negative definite"))

    assert (plain.computed, plain.expected) == ("false", "true")
    assert detailed.expected == "holds"
    assert not failed.passed
    assert failed.computed.startswith("NotContractible: ")


@pytest.mark.unit
def test_report_passes_only_when_every_check_does() -> None:
    checks = [CheckResult.compare("a", 1, 1), CheckResult.compare("b", 1, 2)]
    report = ExampleReport(label="mixed", checks=checks)

    assert not report.passed
    assert [check.name for check in report.failures()] == ["b"]
    assert ExampleReport(label="empty").passed


@pytest.mark.unit
def test_construction_report_serializes_rationals_as_strings() -> None:
    report = ConstructionReport(label="node m=1", k_squared=Fraction(1, 3), r=3, rho=10)

    dumped = report.model_dump(mode="json")

    assert dumped["k_squared"] == "1/3"
    assert ConstructionReport.model_validate(dumped).k_squared == Fraction(1, 3)
