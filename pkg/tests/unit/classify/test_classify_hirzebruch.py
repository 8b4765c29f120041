import pytest

from surfcalc.classify import fe_check
from surfcalc.classify.hirzebruch import passes_irreducibility
from surfcalc.errors import InvalidParams


@pytest.mark.unit
def test_irreducibility_constraint() -> None:
    assert passes_irreducibility(1, 0, 3)
    assert passes_irreducibility(1, 3, 3)
    assert not passes_irreducibility(1, 2, 3)
    assert not passes_irreducibility(0, 0, 2)


@pytest.mark.unit
def test_no_generating_split_for_e_two() -> None:
    verdict = fe_check(2)

    splits = {(c.m1, c.m2) for c in verdict.candidates}
    balanced = [(c.m1, c.m2) for c in verdict.candidates if c.balanced]

    assert verdict.no_generating_decomposition
    assert ((1, 0), (1, 4)) in splits
    assert balanced == [((1, 2), (1, 2))]


@pytest.mark.unit
def test_every_e_from_two_to_ten_has_no_generating_split() -> None:
    for e in range(2, 11):
        assert fe_check(e).no_generating_decomposition


@pytest.mark.unit
def test_e_zero_has_no_generating_split() -> None:
    verdict = fe_check(0)

    assert verdict.no_generating_decomposition
    assert all(not c.generates for c in verdict.candidates)


@pytest.mark.unit
def test_fe_check_rejects_e_one_and_negative() -> None:
    with pytest.raises(InvalidParams):
        fe_check(1)
    with pytest.raises(InvalidParams):
        fe_check(-2)
