import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from surfcalc.dualgraph import (
    SingularityType,
    WeightedDualGraph,
    canonical_pairing,
    local_index,
    recognize,
)
from surfcalc.errors import (
    Disconnected,
    NotNegativeDefinite,
    OverlappingGroups,
    UnknownCurve,
)
from surfcalc.exact import is_negative_definite, to_int
from surfcalc.surface.model import SurfaceModel


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SingularPoint:
    """One point of a singular model together with its resolution graph.

    Contracted points come from groups of tracked curves; carried points come
    from the base surface and have no tracked curves.
    """

    label: str
    graph: WeightedDualGraph
    curve_ids: tuple[str, ...] = ()
    carried: bool = False

    @property
    def minimal(self) -> bool:
        return self.graph.is_minimal()

    @property
    def rational_curves(self) -> bool:
        return all(v.genus == 0 for v in self.graph.vertices)

    @property
    def recognizable(self) -> bool:
        return self.minimal and self.rational_curves

    def singularity_type(self) -> SingularityType | None:
        """Recognized type, or None when the point is non-minimal or has irrational curves."""
        if not self.recognizable:
            return None
        return recognize(self.graph)

    def index(self) -> int | None:
        if not self.rational_curves:
            return None
        return local_index(self.graph)

    def canonical_pairing(self) -> Fraction | None:
        if not self.rational_curves:
            return None
        return canonical_pairing(self.graph)


@dataclass(frozen=True, slots=True)
class SingularSurfaceModel:
    """A smooth model together with the groups of curves contracted on it."""

    ambient: SurfaceModel
    points: tuple[SingularPoint, ...]

    @property
    def contracted_ids(self) -> frozenset[str]:
        return frozenset(cid for point in self.points for cid in point.curve_ids)

    def is_contracted(self, curve_id: str) -> bool:
        return curve_id in self.contracted_ids

    def carried_points(self) -> tuple[SingularPoint, ...]:
        return tuple(
            SingularPoint(label=point.label, graph=point.graph, carried=True)
            for point in self.ambient.carried
        )

    def all_points(self) -> tuple[SingularPoint, ...]:
        """Contracted points followed by the base surface's carried points."""
        return self.points + self.carried_points()

    def point(self, label: str) -> SingularPoint:
        for candidate in self.all_points():
            if candidate.label == label:
                return candidate
        raise KeyError(label)


def configuration_graph(model: SurfaceModel, ids: Iterable[str]) -> WeightedDualGraph:
    """Dual graph of tracked curves: self-intersections, genera and pairwise products."""
    curves = model.curves_named(ids)
    vertices = [
        (c.id, to_int(model.resolution_product(c, c)), c.pa) for c in curves
    ]
    edges: list[tuple[str, str, int]] = []
    for a, b in combinations(curves, 2):
        product = to_int(model.resolution_product(a, b))
        if product < 0:
            raise NotNegativeDefinite(
                f"curves '{a.id}' and '{b.id}' have negative intersection {product}"
            )
        if product > 0:
            edges.append((a.id, b.id, product))
    return WeightedDualGraph.build(vertices, edges)


def contract(
    model: SurfaceModel, groups: Sequence[Iterable[str]]
) -> SingularSurfaceModel:
    """Contract each group of tracked curves to one point.

    Raises:
        UnknownCurve: If a group names an untracked curve.
        OverlappingGroups: If a curve is listed twice or two groups meet.
        Disconnected: If a group is empty or not connected.
        NotNegativeDefinite: If a group's intersection matrix is not negative definite.
    """
    seen: set[str] = set()
    id_groups: list[list[str]] = []
    for group in groups:
        ids = list(group)
        for curve_id in ids:
            if not model.has_curve(curve_id):
                raise UnknownCurve(curve_id)
            if curve_id in seen:
                raise OverlappingGroups(f"curve '{curve_id}' is contracted twice")
            if any(not a.is_zero() for a in model.curve(curve_id).carried.values()):
                raise OverlappingGroups(
                    f"curve '{curve_id}' passes through a carried singular point"
                )
            seen.add(curve_id)
        id_groups.append(ids)

    points: list[SingularPoint] = []
    for position, ids in enumerate(id_groups, start=1):
        if not ids:
            raise Disconnected(f"group {position} is empty")
        graph = configuration_graph(model, ids)
        if not graph.is_connected():
            raise Disconnected(f"group {position} {ids} is not connected")
        if not is_negative_definite(graph.intersection_matrix()):
            raise NotNegativeDefinite(
                f"group {position} {ids} does not have a negative definite intersection matrix"
            )
        point = SingularPoint(label=f"p{position}", graph=graph, curve_ids=tuple(ids))
        if not point.minimal:
            logger.warning(f"contracted point {point.label} is not minimal")
        points.append(point)

    for first, second in combinations(points, 2):
        for a in model.curves_named(first.curve_ids):
            for b in model.curves_named(second.curve_ids):
                if model.dot(a.cls, b.cls) != 0:
                    raise OverlappingGroups(
                        f"'{a.id}' in {first.label} meets '{b.id}' in {second.label}"
                    )

    logger.debug(f"contracted {len(points)} point(s) on a rank-{model.rank} model")
    return SingularSurfaceModel(ambient=model, points=tuple(points))
