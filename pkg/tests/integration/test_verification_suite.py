import pytest

from surfcalc.classify import paper_suite, verification_suite
from surfcalc.classify.suite import check_fe, check_recognition, property_checks


@pytest.mark.integration
def test_suite_passes_with_small_samples() -> None:
    report = verification_suite(seed=0, samples=10)

    assert report.passed, [f"{c.name}: {c.computed}" for c in report.failures()]
    assert (report.seed, report.samples) == (0, 10)
    assert any(check.name.startswith("constructions") for check in report.checks)


@pytest.mark.integration
def test_suite_reads_seed_from_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    from surfcalc.config import get_settings

    monkeypatch.setenv("SURFCALC_PROPERTY_SEED", "7")
    monkeypatch.setenv("SURFCALC_PROPERTY_SAMPLES", "3")
    get_settings.cache_clear()

    report = verification_suite()

    assert (report.seed, report.samples) == (7, 3)


@pytest.mark.integration
@pytest.mark.parametrize("seed", [1, 2])
def test_property_checks_hold_for_other_seeds(seed: int) -> None:
    results = property_checks(seed, 5)()

    assert all(result.passed for result in results)


@pytest.mark.integration
def test_recognition_and_fe_groups() -> None:
    assert all(result.passed for result in check_recognition(max_n=20))
    assert all(result.passed for result in check_fe())


@pytest.mark.integration
def test_paper_suite_runs_the_verification_suite() -> None:
    report = paper_suite(seed=0, samples=5)

    assert report == verification_suite(seed=0, samples=5)
    assert any(check.name == "survivor screen: screened forks" for check in report.checks)
