"""Mumford pullback, the intersection pairing on the singular model, and Cl(X)."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from surfcalc.errors import NonIntegralClasses
from surfcalc.exact import Cokernel, IntMatrix, cokernel, format_rat, solve
from surfcalc.surface.contraction import SingularPoint, SingularSurfaceModel
from surfcalc.surface.model import DivisorClass


logger = logging.getLogger(__name__)


def local_correction(
    x: SingularSurfaceModel, point: SingularPoint, d: DivisorClass
) -> DivisorClass:
    """Σ c_i E_i over one contracted point with (d + Σ c_i E_i)·E_j = 0 for every E_j."""
    ambient = x.ambient
    curves = ambient.curves_named(point.curve_ids)
    matrix = point.graph.intersection_matrix()
    c = solve(matrix, [-ambient.dot(d, curve.cls) for curve in curves])
    correction = DivisorClass.zero(ambient.rank)
    for coefficient, curve in zip(c, curves):
        correction = correction + curve.cls * coefficient
    return correction


def pullback(x: SingularSurfaceModel, d: DivisorClass) -> DivisorClass:
    """π*D: D plus the rational exceptional correction orthogonal to every contracted curve."""
    result = d
    for point in x.points:
        result = result + local_correction(x, point, d)
    return result


def pair(x: SingularSurfaceModel, a: DivisorClass, b: DivisorClass) -> Fraction:
    """(π*A·π*B), computed as π*A·B since π*A kills every contracted curve."""
    return x.ambient.dot(pullback(x, a), b)


def canonical_pullback(x: SingularSurfaceModel) -> DivisorClass:
    return pullback(x, x.ambient.K)


@dataclass(frozen=True, slots=True)
class ClassGroupPresentation:
    """Cl(X) as the ambient lattice modulo the classes of contracted curves.

    The free generator (when there is exactly one) is oriented so that the
    image of -K has a nonnegative coordinate.
    """

    cokernel: Cokernel
    orientation: int
    anticanonical: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def free_rank(self) -> int:
        return self.cokernel.free_rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.cokernel.torsion

    @property
    def anticanonical_generated(self) -> bool:
        """Cl(X) ≅ Z with the image of -K a generator."""
        torsion, free = self.anticanonical
        return self.free_rank == 1 and not self.torsion and free == (1,)

    def image(self, d: DivisorClass) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(torsion residues, free coordinates) of an integral class."""
        if not d.is_integral():
            raise NonIntegralClasses(f"class {d.as_strings()} is not integral")
        torsion, free = self.cokernel.coordinates(d.as_ints())
        if free:
            free = (free[0] * self.orientation,) + free[1:]
        return torsion, free

    def free_coordinate(self, d: DivisorClass) -> int:
        """Multiple of the generator representing d in a rank-one class group."""
        _, free = self.image(d)
        if len(free) != 1:
            raise ValueError("class group does not have free rank one")
        return free[0]

    def free_generators(self) -> list[DivisorClass]:
        lifts = [DivisorClass(lift) for lift in self.cokernel.free_generator_lifts()]
        if lifts:
            lifts[0] = lifts[0] * self.orientation
        return lifts

    def label(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def class_group(x: SingularSurfaceModel) -> ClassGroupPresentation:
    """Smith presentation of Cl(X) from the contracted classes.

    Raises:
        NonIntegralClasses: If the ambient gram is not integral unimodular or a
            contracted class or K has non-integer coordinates.
    """
    ambient = x.ambient
    if not ambient.is_unimodular():
        raise NonIntegralClasses("class group needs an integral unimodular ambient lattice")
    columns = [ambient.curve(cid).cls for point in x.points for cid in point.curve_ids]
    for column in columns + [ambient.K]:
        if not column.is_integral():
            raise NonIntegralClasses(f"class {column.as_strings()} is not integral")

    relations = IntMatrix.from_rows(
        [[column.as_ints()[i] for column in columns] for i in range(ambient.rank)],
        cols=len(columns),
    )
    presentation = cokernel(relations)
    torsion, free = presentation.coordinates((-ambient.K).as_ints())
    orientation = -1 if free and free[0] < 0 else 1
    if free:
        free = (free[0] * orientation,) + free[1:]
    result = ClassGroupPresentation(
        cokernel=presentation,
        orientation=orientation,
        anticanonical=(torsion, free),
    )
    logger.debug(f"class group {result.label()}, -K at {result.anticanonical}")
    return result


@dataclass(frozen=True, slots=True)
class GlobalInvariants:
    """Picard number of the minimal resolution and the index data of X."""

    rho: int
    r: int
    local_indices: dict[str, int]
    kg: Fraction
    resolution_k_squared: Fraction
    k_squared: Fraction

    @property
    def noether_consistent(self) -> bool:
        """K_Y² = 10 - ρ and K_X² = K_Y² + Σ(K_Y·G)."""
        return (
            self.resolution_k_squared == 10 - self.rho
            and self.k_squared == self.resolution_k_squared + self.kg
        )

    def as_strings(self) -> dict[str, str]:
        return {
            "rho": str(self.rho),
            "r": str(self.r),
            "KG": format_rat(self.kg),
            "K_Y^2": format_rat(self.resolution_k_squared),
            "K_X^2": format_rat(self.k_squared),
        }


def global_invariants(x: SingularSurfaceModel) -> GlobalInvariants:
    """ρ of the minimal resolution, r = lcm of local indices, and Σ(K_Y·G).

    Points whose resolution has an irrational curve have no discrepancy
    cycle; they are left out of the index and of Σ(K_Y·G).
    """
    ambient = x.ambient
    indices: dict[str, int] = {}
    kg = Fraction(0)
    for point in x.all_points():
        index = point.index()
        if index is None:
            logger.warning(f"point {point.label} has an irrational curve; skipped")
            continue
        indices[point.label] = index
        kg += point.canonical_pairing() or 0
    rho = ambient.rank + sum(len(point.graph) for point in ambient.carried)
    return GlobalInvariants(
        rho=rho,
        r=math.lcm(1, *indices.values()),
        local_indices=indices,
        kg=kg,
        resolution_k_squared=ambient.dot(ambient.K, ambient.K),
        k_squared=pair(x, ambient.K, ambient.K),
    )
