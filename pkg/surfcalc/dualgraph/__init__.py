"""Resolution dual graphs and their local invariants."""

from surfcalc.dualgraph.graph import (
    Attachment,
    Cycle,
    Edge,
    Vertex,
    WeightedDualGraph,
    chain_graph,
    du_val_graph,
    e8_graph,
    fork_graph,
)
from surfcalc.dualgraph.hj import hj_continued_fraction, hj_expand, hj_fraction
from surfcalc.dualgraph.invariants import (
    AttachmentSolution,
    LocalClassGroup,
    attachment_solve,
    canonical_pairing,
    cycle_genus,
    different_degree,
    discrepancy_cycle,
    fundamental_cycle,
    intersection_matrix,
    is_klt,
    is_rational,
    is_rational_tree,
    lct_local,
    local_class_group,
    local_index,
    mumford_correction,
)
from surfcalc.dualgraph.recognize import (
    Cyclic,
    DuVal,
    DuValFamily,
    Fork,
    NotQuotient,
    SingularityType,
    cyclic_parameters,
    has_cyclic_class_group_of_index,
    is_admissible_cyclic,
    is_quotient,
    recognize,
)
from surfcalc.dualgraph.report import (
    GraphReport,
    LctReport,
    RecognitionReport,
    analyze,
    lct_report,
    recognition_report,
)

__all__ = [
    "Attachment",
    "AttachmentSolution",
    "Cycle",
    "Cyclic",
    "DuVal",
    "DuValFamily",
    "Edge",
    "Fork",
    "GraphReport",
    "LctReport",
    "LocalClassGroup",
    "NotQuotient",
    "RecognitionReport",
    "SingularityType",
    "Vertex",
    "WeightedDualGraph",
    "analyze",
    "attachment_solve",
    "canonical_pairing",
    "chain_graph",
    "cycle_genus",
    "cyclic_parameters",
    "different_degree",
    "discrepancy_cycle",
    "du_val_graph",
    "e8_graph",
    "fork_graph",
    "fundamental_cycle",
    "has_cyclic_class_group_of_index",
    "hj_continued_fraction",
    "hj_expand",
    "hj_fraction",
    "intersection_matrix",
    "is_admissible_cyclic",
    "is_klt",
    "is_quotient",
    "is_rational",
    "is_rational_tree",
    "lct_local",
    "lct_report",
    "local_class_group",
    "local_index",
    "mumford_correction",
    "recognition_report",
    "recognize",
]
