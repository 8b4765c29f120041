import json
from fractions import Fraction

import pytest

from surfcalc.dualgraph import (
    Attachment,
    GraphReport,
    WeightedDualGraph,
    analyze,
    chain_graph,
    du_val_graph,
    lct_report,
    recognition_report,
)
from surfcalc.errors import NotContractible, PreconditionViolated
from tests.conftest import rejected_fork


@pytest.mark.unit
def test_analyze_e8(e8: WeightedDualGraph) -> None:
    report = analyze(e8)

    assert report.determinant == 1
    assert report.class_group == []
    assert report.class_group_order == 1
    assert report.index == 1
    assert report.fundamental_cycle_min == 2
    assert report.rational is True
    assert report.klt is True
    assert report.type == "E8"
    assert report.note is None


@pytest.mark.unit
def test_analyze_rejected_fork_round_trips_through_json() -> None:
    report = analyze(rejected_fork())

    payload = json.loads(report.model_dump_json())

    assert payload["canonical_pairing"] == "5/9"
    assert payload["discrepancies"]["b2_1"] == "5/9"
    assert GraphReport.model_validate_json(report.model_dump_json()) == report
    assert report.canonical_pairing == Fraction(5, 9)


@pytest.mark.unit
def test_analyze_reports_why_type_is_missing() -> None:
    report = analyze(WeightedDualGraph.build([("e", -1, 1)]))

    assert report.rational is False
    assert report.klt is None
    assert report.type is None
    assert "rational" in (report.note or "")


@pytest.mark.unit
def test_analyze_rejects_non_contractible_graph() -> None:
    with pytest.raises(NotContractible):
        analyze(WeightedDualGraph.build([("a", 0)]))


@pytest.mark.unit
def test_recognition_report_for_cyclic_point() -> None:
    report = recognition_report(chain_graph([4, 2]))

    assert report.kind == "cyclic"
    assert report.cyclic == (7, 2)
    assert report.other_convention == (7, 5)
    assert report.admissible_cyclic is True


@pytest.mark.unit
def test_recognition_report_propagates_preconditions() -> None:
    with pytest.raises(PreconditionViolated):
        recognition_report(WeightedDualGraph.build([("a", -1)]))


@pytest.mark.unit
def test_lct_report_lists_met_vertices() -> None:
    report = lct_report(du_val_graph("A", 8), Attachment({"a3": 1, "a5": 0}))

    assert report.attachment == {"a3": 1}
    assert report.threshold == Fraction(1, 2)
