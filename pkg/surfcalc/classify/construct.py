"""The family of surfaces obtained from a degree-1 E8 del Pezzo by blowing up Γ's double point.

Γ is a rational member of |-K| on the base. Its double point q1 is blown up,
followed by points q2..qm each infinitely near the previous one; Γ̃ and
E1..E_{m-1} are then contracted. A node leaves two choices at every step
after the second, a cusp allows m ∈ {1, 2, 4} with fixed positions.
"""

import itertools
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, spec: str) -> str:
            return str.__format__(str(self.value), spec)
from fractions import Fraction

from surfcalc.classify.reports import (
    CheckResult,
    ConstructionReport,
    CurveReport,
    PointReport,
    SurfaceReport,
)
from surfcalc.dualgraph import (
    Cyclic,
    DuVal,
    discrepancy_cycle,
    is_admissible_cyclic,
)
from surfcalc.errors import InvalidParams, NonIntegralClasses, SurfcalcError
from surfcalc.surface import (
    BlowupScript,
    BlowupStep,
    SingularPoint,
    SingularSurfaceModel,
    class_group,
    global_invariants,
    pair,
    run_script,
)


logger = logging.getLogger(__name__)

GAMMA = "Gamma"


def exceptional(i: int) -> str:
    return f"E{i}"


class ConstructionKind(StrEnum):
    NODE = "node"
    CUSP = "cusp"


class NodeChoice(StrEnum):
    """Where q_i sits on E_{i-1}: on the older curve through q_{i-1}, or on E_{i-2}."""

    ON_GAMMA = "on-gamma"
    ON_PREVIOUS_E = "on-previous-e"


CUSP_LENGTHS = (1, 2, 4)


@dataclass(frozen=True, slots=True)
class ConstructionParams:
    kind: ConstructionKind
    m: int
    choices: tuple[NodeChoice, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        try:
            kind = ConstructionKind(self.kind)
            choices = tuple(NodeChoice(choice) for choice in self.choices)
        except ValueError as e:
            raise InvalidParams(str(e)) from e
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "choices", choices)
        if self.m < 1:
            raise InvalidParams(f"m must be >= 1, got {self.m}")
        if kind is ConstructionKind.CUSP:
            if self.m not in CUSP_LENGTHS:
                raise InvalidParams(f"cusp constructions need m in {CUSP_LENGTHS}, got {self.m}")
            if choices:
                raise InvalidParams("cusp constructions take no choices")
        elif len(choices) != self.m - 1:
            raise InvalidParams(
                f"node construction with m={self.m} needs {self.m - 1} choices, got {len(choices)}"
            )

    @classmethod
    def node(cls, *choices: NodeChoice | str) -> "ConstructionParams":
        return cls(kind=ConstructionKind.NODE, m=len(choices) + 1, choices=tuple(choices))

    @classmethod
    def cusp(cls, m: int) -> "ConstructionParams":
        return cls(kind=ConstructionKind.CUSP, m=m)

    @property
    def label(self) -> str:
        if self.kind is ConstructionKind.CUSP or not self.choices:
            return f"{self.kind} m={self.m}"
        return f"{self.kind} m={self.m} ({', '.join(self.choices)})"


def node_choice_patterns(m: int) -> list[ConstructionParams]:
    """Every node construction of length m."""
    return [
        ConstructionParams(kind=ConstructionKind.NODE, m=m, choices=pattern)
        for pattern in itertools.product(list(NodeChoice), repeat=m - 1)
    ]


def _node_steps(params: ConstructionParams) -> list[BlowupStep]:
    steps = [BlowupStep(exceptional(1), {GAMMA: 2})]
    if params.m == 1:
        return steps
    # q2 is one of the two points of Γ̃ ∩ E1; both give the same lattice.
    older, newer = GAMMA, exceptional(1)
    steps.append(BlowupStep(exceptional(2), {older: 1, newer: 1}))
    newer_curve = exceptional(2)
    for i, choice in enumerate(params.choices[1:], start=3):
        anchor = older if choice is NodeChoice.ON_GAMMA else newer
        steps.append(BlowupStep(exceptional(i), {anchor: 1, newer_curve: 1}))
        older, newer = anchor, newer_curve
        newer_curve = exceptional(i)
    return steps


def _cusp_steps(m: int) -> list[BlowupStep]:
    steps = [
        BlowupStep(exceptional(1), {GAMMA: 2}),
        BlowupStep(exceptional(2), {GAMMA: 1, exceptional(1): 1}),
        BlowupStep(exceptional(3), {GAMMA: 1, exceptional(1): 1, exceptional(2): 1}),
        BlowupStep(exceptional(4), {exceptional(3): 1}),
    ]
    return steps[:m]


def construction_script(params: ConstructionParams) -> BlowupScript:
    if params.kind is ConstructionKind.NODE:
        steps = _node_steps(params)
    else:
        steps = _cusp_steps(params.m)
    group = [GAMMA] + [exceptional(i) for i in range(1, params.m)]
    return BlowupScript(base="S_E8", steps=tuple(steps), contract=(tuple(group),))


def construct_X(params: ConstructionParams) -> SingularSurfaceModel:
    x = run_script(construction_script(params))
    logger.info(f"constructed {params.label}")
    return x


def expected_anticanonical(params: ConstructionParams) -> dict[str, int]:
    """Coefficients of -K_Y as a combination of Γ̃ and E1..Em."""
    coefficients = {GAMMA: 1} | {exceptional(i): 1 for i in range(1, params.m + 1)}
    if params.kind is ConstructionKind.CUSP and params.m == 4:
        coefficients[exceptional(3)] = 2
    return coefficients


def point_report(point: SingularPoint) -> PointReport:
    kind = point.singularity_type()
    discrepancies = (
        dict(discrepancy_cycle(point.graph).coefficients) if point.rational_curves else {}
    )
    return PointReport(
        label=point.label,
        curves=list(point.curve_ids),
        carried=point.carried,
        type=None if kind is None else kind.label,
        du_val=isinstance(kind, DuVal),
        cyclic=isinstance(kind, Cyclic),
        admissible_cyclic=kind is not None and is_admissible_cyclic(kind),
        index=point.index(),
        discrepancies=discrepancies,
    )


def anticanonical_check(
    x: SingularSurfaceModel, relation: Mapping[str, int], name: str = "-K_Y relation"
) -> CheckResult:
    ambient = x.ambient
    difference = -ambient.K - ambient.class_of(relation)
    return CheckResult.holds(
        name,
        difference.is_zero(),
        detail=f"-K_Y - Σ = {difference.as_strings()}",
    )


def verify_construction(
    x: SingularSurfaceModel,
    expected_relation: Mapping[str, int] | None = None,
    label: str = "construction",
) -> ConstructionReport:
    """Check the defining properties of a member of the family.

    Cl(X) must be generated by -K_X, exactly one point may be non Du Val,
    cyclic points must be admissible, and K_X² must equal 1/r.
    """
    checks: list[CheckResult] = []
    points = [point_report(point) for point in x.all_points()]

    try:
        presentation = class_group(x)
    except SurfcalcError as e:
        checks.append(CheckResult.failed("anticanonical generation", e))
        presentation = None
    if presentation is not None:
        checks.append(
            CheckResult.holds(
                "anticanonical generation",
                presentation.anticanonical_generated,
                detail=f"Cl(X) = {presentation.label()}, -K at {presentation.anticanonical}",
            )
        )

    non_du_val = [p for p in points if not p.du_val]
    checks.append(CheckResult.compare("non Du Val points", len(non_du_val), 1))
    for p in points:
        if p.type is None:
            checks.append(CheckResult.holds(f"{p.label} recognized", False, detail="unrecognized"))
        elif p.cyclic:
            checks.append(CheckResult.holds(f"{p.label} admissible", p.admissible_cyclic, detail=p.type))

    invariants = global_invariants(x)
    checks.append(CheckResult.compare("K_X^2 = 1/r", invariants.k_squared, Fraction(1, invariants.r)))
    checks.append(
        CheckResult.compare(
            "K_X^2 = 10 - rho + KG",
            invariants.k_squared,
            10 - invariants.rho + invariants.kg,
        )
    )
    if expected_relation is not None:
        checks.append(anticanonical_check(x, expected_relation))

    report = ConstructionReport(
        label=label,
        checks=checks,
        points=points,
        class_group="" if presentation is None else presentation.label(),
        rho=invariants.rho,
        r=invariants.r,
        k_squared=invariants.k_squared,
    )
    if not report.passed:
        logger.warning(f"{label}: {len(report.failures())} check(s) failed")
    return report


def verify_params(params: ConstructionParams) -> ConstructionReport:
    """Construct and verify one member, including its -K_Y relation."""
    return verify_construction(
        construct_X(params),
        expected_relation=expected_anticanonical(params),
        label=params.label,
    )


def construction_family(max_node: int = 3) -> list[ConstructionParams]:
    """Node constructions up to ``max_node`` with every choice pattern, and every cusp one."""
    family: list[ConstructionParams] = []
    for m in range(1, max_node + 1):
        family.extend(node_choice_patterns(m))
    family.extend(ConstructionParams.cusp(m) for m in CUSP_LENGTHS)
    return family


def surface_report(x: SingularSurfaceModel, label: str = "surface") -> SurfaceReport:
    """Points, tracked curves, Cl(X) and the global invariants of any singular model."""
    ambient = x.ambient
    curves: list[CurveReport] = []
    for curve in ambient.curves:
        if x.is_contracted(curve.id):
            curves.append(CurveReport(id=curve.id, pa=curve.pa, contracted=True))
            continue
        curves.append(
            CurveReport(
                id=curve.id,
                pa=curve.pa,
                contracted=False,
                self_intersection=pair(x, curve.cls, curve.cls),
                canonical_degree=pair(x, ambient.K, curve.cls),
            )
        )
    try:
        presentation = class_group(x)
    except NonIntegralClasses as e:
        logger.warning(f"{label}: class group not computed ({e})")
        presentation = None
    invariants = global_invariants(x)
    return SurfaceReport(
        label=label,
        rank=ambient.rank,
        points=[point_report(point) for point in x.all_points()],
        curves=curves,
        class_group=None if presentation is None else presentation.label(),
        anticanonical_generated=(
            None if presentation is None else presentation.anticanonical_generated
        ),
        rho=invariants.rho,
        r=invariants.r,
        kg=invariants.kg,
        k_squared=invariants.k_squared,
        noether_consistent=invariants.noether_consistent,
    )
