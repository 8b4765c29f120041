"""Tests on single curves: adjoint systems, smooth rational images, tigers."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from surfcalc.dualgraph import Attachment, is_rational_tree, lct_local
from surfcalc.errors import CurveContracted, DegenerateCurve, DuplicateId, RankNotOne
from surfcalc.exact import format_rat, to_int
from surfcalc.surface.contraction import SingularPoint, SingularSurfaceModel, configuration_graph
from surfcalc.surface.model import SurfaceModel, TrackedCurve
from surfcalc.surface.pairing import class_group, pair


logger = logging.getLogger(__name__)


def adjoint_empty(model: SurfaceModel, ids: Iterable[str]) -> bool:
    """|K_Y + D| = ∅ for D the reduced sum of the given curves.

    On a smooth rational surface this holds exactly when every connected
    component of D is a rational tree.
    """
    ids = list(ids)
    if len(set(ids)) != len(ids):
        duplicate = next(i for i in ids if ids.count(i) > 1)
        raise DuplicateId(duplicate, field="ids")
    if not ids:
        return True
    return is_rational_tree(configuration_graph(model, ids))


def _attachment(x: SingularSurfaceModel, point: SingularPoint, curve: TrackedCurve) -> Attachment:
    ambient = x.ambient
    return Attachment(
        {
            cid: to_int(ambient.resolution_product(curve, ambient.curve(cid)))
            for cid in point.curve_ids
        }
    )


def point_attachments(
    x: SingularSurfaceModel, curve: TrackedCurve
) -> list[tuple[SingularPoint, Attachment]]:
    """Every singular point the curve passes through, with its intersection numbers."""
    met: list[tuple[SingularPoint, Attachment]] = []
    for point in x.points:
        attach = _attachment(x, point, curve)
        if not attach.is_zero():
            met.append((point, attach))
    for point in x.carried_points():
        attach = curve.carried.get(point.label)
        if attach is not None and not attach.is_zero():
            met.append((point, attach))
    return met


def _require_not_contracted(x: SingularSurfaceModel, curve: TrackedCurve) -> None:
    if x.is_contracted(curve.id):
        raise CurveContracted(curve.id)


@dataclass(frozen=True, slots=True)
class SmoothRationalVerdict:
    """Whether the image of a tracked curve on X is a smooth rational curve.

    ``rational`` is the genus test. ``transversal`` is false when the curve
    meets some singular point with total intersection above one, where the
    tracked genus need not be the genus of the image. ``adjoint_coordinate``
    is the multiple of the generator representing K_X + C when Cl(X) is
    generated by -K_X; the adjoint system is empty exactly when it is negative.
    """

    curve_id: str
    rational: bool
    transversal: bool
    adjoint_coordinate: int | None

    @property
    def adjoint_empty(self) -> bool | None:
        if self.adjoint_coordinate is None:
            return None
        return self.adjoint_coordinate < 0

    @property
    def value(self) -> bool:
        return self.rational


def is_smooth_rational(x: SingularSurfaceModel, curve: TrackedCurve) -> SmoothRationalVerdict:
    """Genus test for the image of a tracked curve, with the adjoint-system check.

    Raises:
        CurveContracted: If the curve is contracted on X.
    """
    _require_not_contracted(x, curve)
    transversal = all(attach.total() <= 1 for _, attach in point_attachments(x, curve))
    if not transversal:
        logger.warning(f"'{curve.id}' meets a singular point non-transversally")

    coordinate: int | None = None
    ambient = x.ambient
    adjoint = ambient.K + curve.cls
    if ambient.is_unimodular() and adjoint.is_integral():
        presentation = class_group(x)
        if presentation.anticanonical_generated:
            # The generator is -K_X, so K_X + C is its multiple by this coordinate.
            coordinate = presentation.free_coordinate(adjoint)
    return SmoothRationalVerdict(
        curve_id=curve.id,
        rational=curve.pa == 0,
        transversal=transversal,
        adjoint_coordinate=coordinate,
    )


@dataclass(frozen=True, slots=True)
class TigerVerdict:
    """α with α·C ≡ -K_X, the global threshold β, and whether C supports a tiger."""

    curve_id: str
    alpha: Fraction
    beta: Fraction
    thresholds: dict[str, Fraction] = field(default_factory=dict)
    log_pairing: Fraction = Fraction(0)

    @property
    def supports_tiger(self) -> bool:
        """(X, αC) fails to be klt, i.e. α >= β."""
        return self.alpha >= self.beta

    def as_strings(self) -> dict[str, str]:
        return {
            "alpha": format_rat(self.alpha),
            "beta": format_rat(self.beta),
            "log_pairing": format_rat(self.log_pairing),
        }


def tiger_test(x: SingularSurfaceModel, curve: TrackedCurve) -> TigerVerdict:
    """Decide whether a curve on a Picard-rank-one X supports a tiger.

    β is the minimum of 1 and the log canonical thresholds of C at every
    singular point it passes through, carried points included.

    Raises:
        CurveContracted: If the curve is contracted.
        RankNotOne: If Cl(X) does not have free rank one.
        DegenerateCurve: If C² = 0 on X.
    """
    _require_not_contracted(x, curve)
    presentation = class_group(x)
    if presentation.free_rank != 1:
        raise RankNotOne(f"class group {presentation.label()} does not have free rank one")

    K = x.ambient.K
    c_squared = pair(x, curve.cls, curve.cls)
    if c_squared == 0:
        raise DegenerateCurve(f"'{curve.id}' has self-intersection 0 on X")
    alpha = -pair(x, K, curve.cls) / c_squared

    thresholds: dict[str, Fraction] = {}
    for point, attach in point_attachments(x, curve):
        if not point.rational_curves:
            logger.warning(f"skipping {point.label}: resolution has an irrational curve")
            continue
        thresholds[point.label] = lct_local(point.graph, attach)
    beta = min([Fraction(1), *thresholds.values()])

    verdict = TigerVerdict(
        curve_id=curve.id,
        alpha=alpha,
        beta=beta,
        thresholds=thresholds,
        log_pairing=pair(x, K + curve.cls * beta, curve.cls),
    )
    logger.debug(f"tiger test on '{curve.id}': {verdict.as_strings()}")
    return verdict
