"""Lattice models of rational surfaces: blowups, contractions and pairings."""

from surfcalc.surface.bases import (
    BaseRegistry,
    base_dP1_A8,
    base_P2,
    base_S_E8,
    default_registry,
)
from surfcalc.surface.blowup import blowup, blowup_all
from surfcalc.surface.contraction import (
    SingularPoint,
    SingularSurfaceModel,
    configuration_graph,
    contract,
)
from surfcalc.surface.curves import (
    SmoothRationalVerdict,
    TigerVerdict,
    adjoint_empty,
    is_smooth_rational,
    point_attachments,
    tiger_test,
)
from surfcalc.surface.model import (
    BlowupStep,
    CarriedPoint,
    DivisorClass,
    SurfaceModel,
    TrackedCurve,
)
from surfcalc.surface.pairing import (
    ClassGroupPresentation,
    GlobalInvariants,
    canonical_pullback,
    class_group,
    global_invariants,
    pair,
    pullback,
)
from surfcalc.surface.script import BlowupScript, build_smooth, run_script

__all__ = [
    "BaseRegistry",
    "BlowupScript",
    "BlowupStep",
    "CarriedPoint",
    "ClassGroupPresentation",
    "DivisorClass",
    "GlobalInvariants",
    "SingularPoint",
    "SingularSurfaceModel",
    "SmoothRationalVerdict",
    "SurfaceModel",
    "TigerVerdict",
    "TrackedCurve",
    "adjoint_empty",
    "base_P2",
    "base_S_E8",
    "base_dP1_A8",
    "blowup",
    "blowup_all",
    "build_smooth",
    "canonical_pullback",
    "class_group",
    "configuration_graph",
    "contract",
    "default_registry",
    "global_invariants",
    "is_smooth_rational",
    "pair",
    "point_attachments",
    "pullback",
    "run_script",
    "tiger_test",
]
