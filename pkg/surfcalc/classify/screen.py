"""Noether screening of candidate singularities and attachment enumeration.

On a rational surface with quotient singularities and Cl(X) ≅ Z·(-K_X), the
minimal resolution satisfies K_Y² = 10 - ρ and K_X² = K_Y² + Σ(K_Y·G) = 1/r,
so ρ = 10 + Σ(K_Y·G) - 1/r must be an integer.
"""

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from surfcalc.classify.reports import AttachmentReport, ScreenReport
from surfcalc.dualgraph import (
    Attachment,
    DuVal,
    WeightedDualGraph,
    attachment_solve,
    canonical_pairing,
    fork_graph,
    hj_continued_fraction,
    is_klt,
    local_index,
    recognize,
)
from surfcalc.errors import PreconditionViolated


logger = logging.getLogger(__name__)


def noether_screen(
    candidate: Sequence[WeightedDualGraph], label: str | None = None
) -> ScreenReport:
    """ρ forced by Noether's formula for a configuration of klt points.

    Raises:
        PreconditionViolated: If a point is not klt.
    """
    kg = Fraction(0)
    indices: list[int] = []
    types: list[str] = []
    for graph in candidate:
        if not is_klt(graph):
            raise PreconditionViolated("noether screen needs klt points")
        kg += canonical_pairing(graph)
        indices.append(local_index(graph))
        types.append(recognize(graph).label)
    r = math.lcm(1, *indices)
    rho = 10 + kg - Fraction(1, r)
    report = ScreenReport(
        label=label or " + ".join(types),
        candidates=types,
        rho=rho,
        r=r,
        kg=kg,
        integral=rho.denominator == 1,
    )
    logger.debug(f"screened {report.label}: rho={rho}, r={r}")
    return report


def fork_from_branches(b: int, branches: Sequence[tuple[int, int]]) -> WeightedDualGraph:
    """Fork ⟨b; n1,q1; n2,q2; n3,q3⟩ with each branch expanded outward from the center."""
    return fork_graph(b, [hj_continued_fraction(n, q) for n, q in branches])


def screen_candidates() -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """⟨2;2,1;3,q2;5,q3⟩ for every admissible q2, q3, then ⟨2;2,1;3,1;3,2⟩."""
    forks = [
        (2, ((2, 1), (3, q2), (5, q3)))
        for q2 in (1, 2)
        for q3 in (1, 2, 3, 4)
    ]
    forks.append((2, ((2, 1), (3, 1), (3, 2))))
    return forks


def screen_forks() -> list[ScreenReport]:
    """Screen every candidate that is a genuine fork.

    ⟨2;2,1;3,2;5,4⟩ is all (-2) curves, i.e. E8, and is skipped.
    """
    reports: list[ScreenReport] = []
    for b, branches in screen_candidates():
        graph = fork_from_branches(b, branches)
        if isinstance(recognize(graph), DuVal):
            logger.debug(f"skipping Du Val candidate <{b};{branches}>")
            continue
        reports.append(noether_screen([graph]))
    survivors = [report.label for report in reports if report.integral]
    logger.info(f"screened {len(reports)} forks, integral: {survivors}")
    return reports


def attachment_enumeration(g: WeightedDualGraph) -> list[AttachmentReport]:
    """Unit attachment at every vertex: which give integral coefficients all >= 1."""
    reports: list[AttachmentReport] = []
    for vertex_id in g.ids:
        solution = attachment_solve(g, Attachment.unit(vertex_id))
        reports.append(
            AttachmentReport(
                vertex=vertex_id,
                coefficients=dict(solution.coefficients.coefficients),
                integral=solution.integral,
                passes=solution.passes,
            )
        )
    return reports
