from fractions import Fraction

import pytest

from surfcalc.classify import (
    attachment_enumeration,
    fork_from_branches,
    noether_screen,
    screen_forks,
)
from surfcalc.dualgraph import chain_graph, du_val_graph
from surfcalc.errors import PreconditionViolated
from tests.conftest import rejected_fork, survivor_fork


@pytest.mark.unit
def test_fork_from_branches_expands_each_branch() -> None:
    assert fork_from_branches(2, [(2, 1), (3, 1), (3, 2)]) == rejected_fork()


@pytest.mark.unit
def test_rejected_fork_has_fractional_rho() -> None:
    report = noether_screen([rejected_fork()])

    assert report.kg == Fraction(5, 9)
    assert report.r == 9
    assert report.rho == Fraction(94, 9)
    assert not report.integral


@pytest.mark.unit
def test_survivor_fork_forces_rho_thirteen() -> None:
    report = noether_screen([survivor_fork()])

    assert report.kg == Fraction(88, 29)
    assert report.r == 29
    assert report.rho == 13
    assert report.integral
    assert report.candidates == ["<2;2,1;3,1;5,1>"]


@pytest.mark.unit
def test_du_val_points_leave_rho_alone() -> None:
    alone = noether_screen([survivor_fork()])
    with_a2 = noether_screen([survivor_fork(), du_val_graph("A", 2)], label="pair")

    assert with_a2.rho == alone.rho
    assert with_a2.label == "pair"


@pytest.mark.unit
def test_screen_rejects_non_klt_points() -> None:
    with pytest.raises(PreconditionViolated, match="klt"):
        noether_screen([fork_from_branches(2, [(2, 1), (3, 1), (7, 1)])])


@pytest.mark.unit
def test_screen_forks_has_a_unique_survivor() -> None:
    reports = screen_forks()

    survivors = [report.label for report in reports if report.integral]

    assert len(reports) == 8
    assert survivors == ["<2;2,1;3,1;5,1>"]


@pytest.mark.unit
def test_attachment_enumeration_passes_only_at_the_center() -> None:
    reports = attachment_enumeration(survivor_fork())

    passing = [report.vertex for report in reports if report.passes]

    assert passing == ["center"]
    assert [report.vertex for report in reports] == list(survivor_fork().ids)


@pytest.mark.unit
def test_attachment_on_one_third_point_is_fractional() -> None:
    (report,) = attachment_enumeration(chain_graph([3]))

    assert report.coefficients == {"c1": Fraction(2, 3)}
    assert not report.integral


@pytest.mark.unit
def test_screen_forks_skips_the_e8_candidate() -> None:
    e8_shaped = fork_from_branches(2, [(2, 1), (3, 2), (5, 4)])

    labels = [report.label for report in screen_forks()]

    assert all(weight == -2 for weight in e8_shaped.weights)
    assert "E8" not in labels
    assert all(label.startswith("<") for label in labels)
