import logging
from fractions import Fraction

import pytest

from surfcalc.errors import DuplicateId, InconsistentModel, UnknownBase, UnknownCurve
from surfcalc.surface import (
    BaseRegistry,
    DivisorClass,
    SurfaceModel,
    TrackedCurve,
    base_P2,
    base_dP1_A8,
    default_registry,
)


@pytest.mark.unit
def test_divisor_class_arithmetic() -> None:
    a = DivisorClass.of(1, -2)
    b = DivisorClass.basis_vector(1, 2)

    assert a + b == DivisorClass.of(1, -1)
    assert (a - b) * 2 == DivisorClass.of(2, -6)
    assert -a == DivisorClass.of(-1, 2)
    assert (a * Fraction(1, 2)).as_strings() == ["1/2", "-1"]
    assert a.extended(4) == DivisorClass.of(1, -2, 0, 0)
    assert DivisorClass.zero(3).is_zero()


@pytest.mark.unit
def test_divisor_classes_of_different_length_do_not_mix() -> None:
    with pytest.raises(ValueError, match="different lattices"):
        DivisorClass.of(1) + DivisorClass.of(1, 0)


@pytest.mark.unit
def test_non_integral_class_has_no_int_form() -> None:
    with pytest.raises(ValueError, match="not integral"):
        DivisorClass.of(Fraction(1, 3)).as_ints()


@pytest.mark.unit
def test_model_checks_adjunction() -> None:
    with pytest.raises(InconsistentModel, match="adjunction"):
        SurfaceModel(
            basis=("H",),
            gram=((1,),),
            K=DivisorClass.of(-3),
            curves=(TrackedCurve(id="L", cls=DivisorClass.of(1), pa=1),),
        )


@pytest.mark.unit
def test_model_checks_gram() -> None:
    with pytest.raises(InconsistentModel, match="degenerate"):
        SurfaceModel(basis=("H",), gram=((0,),), K=DivisorClass.of(-3))
    with pytest.raises(InconsistentModel, match="symmetric"):
        SurfaceModel(basis=("a", "b"), gram=((1, 1), (0, -1)), K=DivisorClass.of(0, 0))


@pytest.mark.unit
def test_model_rejects_duplicate_curves() -> None:
    line = TrackedCurve(id="L", cls=DivisorClass.of(1), pa=0)

    with pytest.raises(DuplicateId):
        SurfaceModel(basis=("H",), gram=((1,),), K=DivisorClass.of(-3), curves=(line, line))


@pytest.mark.unit
def test_carried_correction_on_a8_base() -> None:
    model = base_dP1_A8()
    line = model.curve("L")

    assert model.carried_correction(line, line) == 2
    assert model.resolution_product(line, line) == -1
    assert model.adjunction_defect(line) == 0


@pytest.mark.unit
def test_class_of_sums_tracked_curves() -> None:
    model = base_P2()

    assert model.class_of({"L": 2, "C1": 1}) == DivisorClass.of(5)
    assert model.is_unimodular()
    with pytest.raises(UnknownCurve):
        model.curve("Q")


@pytest.mark.unit
def test_registry_lists_and_builds_bases() -> None:
    assert default_registry.list_names() == ["P2", "S_E8", "dP1_A8"]
    assert default_registry.get("S_E8").curve("Gamma").pa == 1

    with pytest.raises(UnknownBase, match="S_E8"):
        default_registry.get("F1")


@pytest.mark.unit
def test_registry_warns_on_replacement(caplog: pytest.LogCaptureFixture) -> None:
    registry = BaseRegistry()

    with caplog.at_level(logging.WARNING):
        registry.register("P2", base_P2)
    registry.register("P2 again", base_P2)

    assert "Replacing base surface 'P2'" in caplog.text
    assert registry.has("P2 again")
