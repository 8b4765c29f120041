"""One-shot summary of every local invariant of a resolution graph."""

import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from surfcalc.dualgraph.graph import Attachment, WeightedDualGraph
from surfcalc.dualgraph.invariants import (
    canonical_pairing,
    cycle_genus,
    discrepancy_cycle,
    fundamental_cycle,
    is_klt,
    lct_local,
    local_class_group,
    require_contractible,
)
from surfcalc.dualgraph.recognize import (
    Cyclic,
    DuVal,
    Fork,
    NotQuotient,
    has_cyclic_class_group_of_index,
    is_admissible_cyclic,
    is_quotient,
    recognize,
)
from surfcalc.errors import PreconditionViolated
from surfcalc.exact import RatField, determinant


logger = logging.getLogger(__name__)


class GraphReport(BaseModel):
    """Invariants of a contractible configuration, in vertex input order."""

    model_config = ConfigDict(frozen=True)

    vertices: list[str] = Field(description="Vertex ids in input order")
    determinant: int = Field(description="det of the intersection matrix")
    class_group: list[int] = Field(description="Elementary divisors > 1 of coker(M)")
    class_group_order: int = Field(description="|det M|")
    fundamental_cycle: dict[str, int] = Field(description="Artin's fundamental cycle")
    fundamental_cycle_min: int = Field(description="Smallest coefficient of Z")
    fundamental_genus: RatField = Field(description="p_a of the fundamental cycle")
    rational: bool
    klt: bool | None = Field(default=None, description="None when a vertex has genus > 0")
    index: int | None = Field(default=None, description="Local index r_p")
    cyclic_of_index: bool | None = None
    discrepancies: dict[str, RatField] = Field(default_factory=dict)
    canonical_pairing: RatField | None = Field(default=None, description="(K_Y.G)")
    type: str | None = Field(default=None, description="Recognized type")
    admissible_cyclic: bool = False
    note: str | None = Field(default=None, description="Why the type was not recognized")


def analyze(g: WeightedDualGraph) -> GraphReport:
    """Compute every invariant of ``g`` that its vertex data allows.

    Discrepancies, klt and index need rational curves; recognition also needs
    a minimal graph with transversal intersections. When those fail the report
    says why instead of raising.

    Raises:
        NotContractible: If ``g`` is empty, disconnected or not negative definite.
    """
    matrix = require_contractible(g)
    z = fundamental_cycle(g)
    genus = cycle_genus(g, z)
    group = local_class_group(g)
    fields: dict[str, object] = {}
    if all(v.genus == 0 for v in g.vertices):
        d = discrepancy_cycle(g)
        fields |= {
            "klt": is_klt(g),
            "index": group.index,
            "cyclic_of_index": group.cyclic_of_index,
            "discrepancies": dict(d.coefficients),
            "canonical_pairing": canonical_pairing(g),
        }
    try:
        t = recognize(g)
        fields |= {"type": t.label, "admissible_cyclic": is_admissible_cyclic(t)}
    except PreconditionViolated as error:
        logger.debug(f"not recognized: {error.reason}")
        fields["note"] = error.reason
    return GraphReport(
        vertices=list(g.ids),
        determinant=int(determinant(matrix)),
        class_group=list(group.divisors),
        class_group_order=group.order,
        fundamental_cycle={k: int(v) for k, v in z.coefficients.items()},
        fundamental_cycle_min=int(z.minimum()),
        fundamental_genus=Fraction(genus),
        rational=genus == 0,
        **fields,
    )


class RecognitionReport(BaseModel):
    """Recognized type with its parameters spelled out."""

    model_config = ConfigDict(frozen=True)

    type: str
    kind: str = Field(description="cyclic, fork, du_val or not_quotient")
    cyclic: tuple[int, int] | None = Field(default=None, description="(n, q), q the smaller")
    other_convention: tuple[int, int] | None = Field(
        default=None, description="The same cyclic germ as 1/n(1,n-q)"
    )
    fork: str | None = None
    reason: str | None = None
    quotient: bool
    admissible_cyclic: bool
    cyclic_class_group_of_index: bool


def recognition_report(g: WeightedDualGraph) -> RecognitionReport:
    """Raises PreconditionViolated like ``recognize``."""
    t = recognize(g)
    fields: dict[str, object] = {}
    match t:
        case Cyclic():
            fields = {
                "kind": "cyclic",
                "cyclic": (t.n, t.q),
                "other_convention": t.other_convention,
            }
        case DuVal():
            fields = {"kind": "du_val"}
        case Fork():
            fields = {"kind": "fork", "fork": t.label}
        case NotQuotient():
            fields = {"kind": "not_quotient", "reason": t.reason}
    return RecognitionReport(
        type=t.label,
        quotient=is_quotient(t),
        admissible_cyclic=is_admissible_cyclic(t),
        cyclic_class_group_of_index=has_cyclic_class_group_of_index(t),
        **fields,
    )


class LctReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    attachment: dict[str, int] = Field(description="C.E_i for every met vertex")
    threshold: RatField = Field(description="lct of the curve at the point, capped at 1")
    discrepancies: dict[str, RatField]


def lct_report(g: WeightedDualGraph, attach: Attachment) -> LctReport:
    d = discrepancy_cycle(g)
    return LctReport(
        attachment={vid: attach[vid] for vid in g.ids if attach[vid]},
        threshold=lct_local(g, attach, d),
        discrepancies=dict(d.coefficients),
    )
