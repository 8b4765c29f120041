"""Classification computations: screens, constructions, worked examples and the suite."""

from surfcalc.classify.construct import (
    ConstructionKind,
    ConstructionParams,
    NodeChoice,
    construct_X,
    construction_family,
    construction_script,
    expected_anticanonical,
    node_choice_patterns,
    surface_report,
    verify_construction,
    verify_params,
)
from surfcalc.classify.examples import (
    EXAMPLES,
    RationalExample,
    nodal_blowup_example,
    no_p1_example,
    rational_example,
    tiger_example,
    tiger_lemma_check,
)
from surfcalc.classify.hirzebruch import fe_check
from surfcalc.classify.reports import (
    AttachmentReport,
    CheckResult,
    ConstructionReport,
    CurveReport,
    ExampleReport,
    FeCandidate,
    FeVerdict,
    PointReport,
    ScreenReport,
    SuiteReport,
    SurfaceReport,
)
from surfcalc.classify.screen import (
    attachment_enumeration,
    fork_from_branches,
    noether_screen,
    screen_forks,
)
from surfcalc.classify.suite import paper_suite, verification_suite

__all__ = [
    "EXAMPLES",
    "AttachmentReport",
    "CheckResult",
    "ConstructionKind",
    "ConstructionParams",
    "ConstructionReport",
    "CurveReport",
    "ExampleReport",
    "FeCandidate",
    "FeVerdict",
    "NodeChoice",
    "PointReport",
    "RationalExample",
    "ScreenReport",
    "SuiteReport",
    "SurfaceReport",
    "attachment_enumeration",
    "construct_X",
    "construction_family",
    "construction_script",
    "expected_anticanonical",
    "fe_check",
    "fork_from_branches",
    "nodal_blowup_example",
    "no_p1_example",
    "noether_screen",
    "node_choice_patterns",
    "paper_suite",
    "rational_example",
    "screen_forks",
    "surface_report",
    "tiger_example",
    "tiger_lemma_check",
    "verification_suite",
    "verify_construction",
    "verify_params",
]
