from fractions import Fraction

import pytest

from surfcalc.classify import (
    EXAMPLES,
    nodal_blowup_example,
    no_p1_example,
    rational_example,
    tiger_example,
    tiger_lemma_check,
)
from surfcalc.classify.examples import a8_different_checks, rational_fork, same_shape
from surfcalc.dualgraph import fork_graph, is_klt, is_rational
from surfcalc.errors import InvalidParams


def failures(report) -> list[str]:
    return [f"{c.name}: {c.computed} != {c.expected}" for c in report.failures()]


@pytest.mark.unit
def test_nodal_blowup_example() -> None:
    report = nodal_blowup_example()

    assert report.passed, failures(report)
    assert report.values["K_X^2"] == "1/3"


@pytest.mark.unit
def test_tiger_example_threshold_at_a8() -> None:
    report = tiger_example()

    assert report.passed, failures(report)
    assert report.values["lct at A8"] == "1/2"


@pytest.mark.unit
@pytest.mark.parametrize("variant", ["A8", "smooth"])
def test_no_p1_example(variant: str) -> None:
    report = no_p1_example(variant)

    assert report.passed, failures(report)


@pytest.mark.unit
def test_no_p1_a8_class_group_has_two_torsion() -> None:
    report = no_p1_example("A8")

    assert report.values["class group"] == "Z + Z/2"


@pytest.mark.unit
def test_no_p1_a8_different_stays_below_the_self_intersection_bound() -> None:
    checks = {check.name: check for check in a8_different_checks()}

    assert all(check.passed for check in checks.values())
    assert checks["largest different"].computed == "20/9"
    assert "deg(K_C + Diff) < 1/2" in {c.name for c in no_p1_example("A8").checks}


@pytest.mark.unit
def test_no_p1_unknown_variant() -> None:
    with pytest.raises(InvalidParams, match="unknown variant"):
        no_p1_example("D4")


@pytest.mark.unit
def test_tiger_lemma() -> None:
    report = tiger_lemma_check()

    assert report.passed, failures(report)
    assert report.values["beta"] == "1"


@pytest.mark.unit
@pytest.mark.parametrize("m", [5, 6, 8])
def test_rational_example(m: int) -> None:
    example = rational_example(m)

    assert example.report.passed, failures(example.report)
    assert example.report.values["class group"] == "Z"
    assert is_rational(example.graph)
    assert not is_klt(example.graph)


@pytest.mark.unit
def test_rational_example_needs_m_at_least_five() -> None:
    with pytest.raises(InvalidParams, match="m >= 5"):
        rational_example(4)


@pytest.mark.unit
def test_rational_fork_shape() -> None:
    assert rational_fork(5).weights == (-2, -2, -3, -2, -6)
    assert same_shape(rational_fork(6), fork_graph(2, [[3], [2], [2, 2, 7]]))
    assert not same_shape(rational_fork(6), rational_fork(7))


@pytest.mark.unit
def test_named_examples_registry() -> None:
    assert set(EXAMPLES) == {"nodal", "tiger", "tiger-lemma"}
