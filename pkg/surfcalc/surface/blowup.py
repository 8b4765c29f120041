import logging
from collections.abc import Iterable
from fractions import Fraction

from surfcalc.errors import DuplicateId, NegativeGenus, ParseError, UnknownCurve
from surfcalc.surface.model import BlowupStep, DivisorClass, SurfaceModel, TrackedCurve


logger = logging.getLogger(__name__)


def blowup(model: SurfaceModel, step: BlowupStep) -> SurfaceModel:
    """Blow up one point of the model.

    The basis gains an exceptional class e with e² = -1 orthogonal to the old
    basis, K becomes K + e, a tracked curve of multiplicity μ at the point
    becomes cls - μe with genus pa - μ(μ-1)/2, and e itself is tracked under
    ``step.new_id``.

    Raises:
        UnknownCurve: If a multiplicity names a curve the model does not track.
        NegativeGenus: If a multiplicity exceeds what the curve's genus allows.
    """
    for curve_id, mult in step.center_mults.items():
        if not model.has_curve(curve_id):
            raise UnknownCurve(curve_id)
        if mult < 0:
            raise ParseError(
                f"multiplicity of '{curve_id}' is {mult}; must be >= 0", field="mults"
            )
    if model.has_curve(step.new_id):
        raise DuplicateId(step.new_id, field="new_id")
    if step.new_id in model.basis:
        raise DuplicateId(step.new_id, field="basis")

    size = model.rank + 1
    e = DivisorClass.basis_vector(model.rank, size)
    gram = tuple(row + (Fraction(0),) for row in model.gram) + (
        (Fraction(0),) * model.rank + (Fraction(-1),),
    )

    curves: list[TrackedCurve] = []
    for curve in model.curves:
        mult = step.center_mults.get(curve.id, 0)
        genus = curve.pa - mult * (mult - 1) // 2
        if genus < 0:
            raise NegativeGenus(curve.id, genus)
        curves.append(
            TrackedCurve(
                id=curve.id,
                cls=curve.cls.extended(size) - e * mult,
                pa=genus,
                carried=curve.carried,
            )
        )
    curves.append(TrackedCurve(id=step.new_id, cls=e, pa=0))

    logger.debug(
        f"blew up {dict(step.center_mults)} as '{step.new_id}', rank now {size}"
    )
    return SurfaceModel(
        basis=model.basis + (step.new_id,),
        gram=gram,
        K=model.K.extended(size) + e,
        curves=tuple(curves),
        carried=model.carried,
    )


def blowup_all(model: SurfaceModel, steps: Iterable[BlowupStep]) -> SurfaceModel:
    for step in steps:
        model = blowup(model, step)
    return model
