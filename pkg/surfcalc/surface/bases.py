"""Named base surfaces that blowup scripts start from."""

import logging
from collections.abc import Callable

from surfcalc.dualgraph import Attachment, du_val_graph, e8_graph
from surfcalc.errors import UnknownBase
from surfcalc.surface.model import CarriedPoint, DivisorClass, SurfaceModel, TrackedCurve


logger = logging.getLogger(__name__)

BaseBuilder = Callable[[], SurfaceModel]


def base_S_E8() -> SurfaceModel:
    """Degree-1 Gorenstein log del Pezzo with one E8 point.

    Rank-one lattice on A with A² = 1 and K = -A; Γ is a nodal member of
    |-K| (pa 1) lying in the smooth locus.
    """
    return SurfaceModel(
        basis=("A",),
        gram=((1,),),
        K=DivisorClass.of(-1),
        curves=(TrackedCurve(id="Gamma", cls=DivisorClass.of(1), pa=1),),
        carried=(CarriedPoint(label="E8", graph=e8_graph()),),
    )


def base_P2() -> SurfaceModel:
    """The projective plane with a line and two nodal cubics."""
    return SurfaceModel(
        basis=("H",),
        gram=((1,),),
        K=DivisorClass.of(-3),
        curves=(
            TrackedCurve(id="L", cls=DivisorClass.of(1), pa=0),
            TrackedCurve(id="C1", cls=DivisorClass.of(3), pa=1),
            TrackedCurve(id="C2", cls=DivisorClass.of(3), pa=1),
        ),
    )


def base_dP1_A8() -> SurfaceModel:
    """Degree-1 Gorenstein log del Pezzo with one A8 point.

    D, C1 and C2 are nodal anticanonical curves in the smooth locus. L has
    class A and meets the A8 chain once, at its third curve; the Mumford
    correction there is 2, so its strict transform is a (-1)-curve.
    """
    return SurfaceModel(
        basis=("A",),
        gram=((1,),),
        K=DivisorClass.of(-1),
        curves=(
            TrackedCurve(id="D", cls=DivisorClass.of(1), pa=1),
            TrackedCurve(id="C1", cls=DivisorClass.of(1), pa=1),
            TrackedCurve(id="C2", cls=DivisorClass.of(1), pa=1),
            TrackedCurve(
                id="L",
                cls=DivisorClass.of(1),
                pa=0,
                carried={"A8": Attachment.unit("a3")},
            ),
        ),
        carried=(CarriedPoint(label="A8", graph=du_val_graph("A", 8)),),
    )


class BaseRegistry:
    """Registry of base surface builders, keyed by name."""

    def __init__(self) -> None:
        self._builders: dict[str, BaseBuilder] = {
            "S_E8": base_S_E8,
            "P2": base_P2,
            "dP1_A8": base_dP1_A8,
        }

    def register(self, name: str, builder: BaseBuilder) -> None:
        if name in self._builders:
            logger.warning(f"Replacing base surface '{name}'")
        self._builders[name] = builder

    def get(self, name: str) -> SurfaceModel:
        """Build a fresh model of the named base.

        Raises:
            UnknownBase: If no builder is registered under ``name``.
        """
        builder = self._builders.get(name)
        if builder is None:
            raise UnknownBase(name, self.list_names())
        return builder()

    def has(self, name: str) -> bool:
        return name in self._builders

    def list_names(self) -> list[str]:
        return sorted(self._builders)


default_registry = BaseRegistry()
