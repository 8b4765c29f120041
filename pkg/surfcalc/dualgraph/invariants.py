"""Local invariants of a singularity read off its resolution dual graph."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from surfcalc.dualgraph.graph import Attachment, Cycle, WeightedDualGraph
from surfcalc.errors import (
    NonIntegralCycle,
    NonRationalVertex,
    NotContractible,
    PreconditionViolated,
)
from surfcalc.exact import (
    IntMatrix,
    cokernel,
    determinant,
    dot,
    is_negative_definite,
    lcm_of_denominators,
    mat_vec,
    solve,
)


logger = logging.getLogger(__name__)


def intersection_matrix(g: WeightedDualGraph) -> IntMatrix:
    return g.intersection_matrix()


def require_contractible(g: WeightedDualGraph) -> IntMatrix:
    """Intersection matrix of ``g`` after checking connectivity and definiteness.

    Raises:
        NotContractible: If ``g`` is empty, disconnected or not negative definite.
    """
    if not g.is_connected():
        raise NotContractible("graph must be nonempty and connected")
    matrix = g.intersection_matrix()
    if not is_negative_definite(matrix):
        raise NotContractible("intersection matrix is not negative definite")
    return matrix


def require_rational_vertices(g: WeightedDualGraph) -> None:
    for vertex in g.vertices:
        if vertex.genus > 0:
            raise NonRationalVertex(vertex.id, vertex.genus)


def fundamental_cycle(g: WeightedDualGraph) -> Cycle:
    """Artin's fundamental cycle by Laufer's iteration."""
    matrix = require_contractible(g)
    z = [1] * len(g)
    steps = 0
    while True:
        products = mat_vec(matrix, z)
        positive = next((i for i, value in enumerate(products) if value > 0), None)
        if positive is None:
            break
        z[positive] += 1
        steps += 1
    logger.debug(f"fundamental cycle found after {steps} Laufer steps")
    return Cycle.from_vector(g, z)


def cycle_genus(g: WeightedDualGraph, z: Cycle) -> Fraction:
    """p_a(Z) = 1 + (Z² + K·Z)/2 for an integral cycle Z."""
    if not z.is_integral():
        raise NonIntegralCycle("arithmetic genus needs integer coefficients")
    vector = z.vector(g)
    self_product = dot(vector, mat_vec(g.intersection_matrix(), vector))
    canonical = dot(vector, g.canonical_degrees())
    return 1 + Fraction(self_product + canonical, 2)


def is_rational(g: WeightedDualGraph) -> bool:
    """Artin's criterion: p_a of the fundamental cycle vanishes."""
    return cycle_genus(g, fundamental_cycle(g)) == 0


def discrepancy_cycle(g: WeightedDualGraph) -> Cycle:
    """G = Σ d_i E_i with K_Y + G numerically trivial on every E_i."""
    matrix = require_contractible(g)
    require_rational_vertices(g)
    k = g.canonical_degrees()
    return Cycle.from_vector(g, solve(matrix, [-value for value in k]))


def canonical_pairing(g: WeightedDualGraph) -> Fraction:
    """(K_Y·G) = Σ d_i k_i."""
    d = discrepancy_cycle(g).vector(g)
    return dot(d, g.canonical_degrees())


def local_index(g: WeightedDualGraph) -> int:
    return lcm_of_denominators(discrepancy_cycle(g).coefficients.values())


def is_klt(g: WeightedDualGraph) -> bool:
    return all(value < 1 for value in discrepancy_cycle(g).coefficients.values())


@dataclass(frozen=True, slots=True)
class LocalClassGroup:
    divisors: tuple[int, ...]
    order: int
    index: int | None

    @property
    def is_trivial(self) -> bool:
        return not self.divisors

    @property
    def is_cyclic(self) -> bool:
        return len(self.divisors) <= 1

    @property
    def cyclic_of_index(self) -> bool | None:
        """Cyclic of order equal to the local index; None if the index is undefined."""
        if self.index is None:
            return None
        return self.is_cyclic and self.order == self.index


def local_class_group(g: WeightedDualGraph) -> LocalClassGroup:
    """Cokernel of the intersection matrix, as elementary divisors > 1."""
    matrix = require_contractible(g)
    presentation = cokernel(matrix)
    order = abs(determinant(matrix))
    index = (
        local_index(g) if all(v.genus == 0 for v in g.vertices) else None
    )
    return LocalClassGroup(divisors=presentation.torsion, order=order, index=index)


def is_rational_tree(g: WeightedDualGraph, subset: Iterable[str] | None = None) -> bool:
    """Genus-0 curves whose multigraph (multiplicities counted) is a forest."""
    ids = list(g.ids if subset is None else subset)
    if any(g.vertex(vertex_id).genus > 0 for vertex_id in ids):
        return False
    if not ids:
        return True
    return nx.is_forest(g.to_networkx(ids))


@dataclass(frozen=True, slots=True)
class AttachmentSolution:
    """Coefficients a with K_Y + C̃ + Σ a_i E_i numerically trivial on each E_i."""

    coefficients: Cycle
    integral: bool
    all_at_least_one: bool
    attached_values: dict[str, Fraction]
    log_degree: Fraction | None
    pullback_self: Fraction | None

    @property
    def passes(self) -> bool:
        return self.integral and self.all_at_least_one


def attachment_solve(
    g: WeightedDualGraph,
    attach: Attachment,
    c_self: int | None = None,
    c_genus: int | None = None,
) -> AttachmentSolution:
    """Solve M·a = -(k + t) for an external curve meeting the configuration.

    Args:
        g: Resolution graph of the point.
        attach: Intersection numbers t_i of the curve with each E_i.
        c_self: Self-intersection of the curve on the resolution. Defaults to
            None; the coefficients never depend on it.
        c_genus: Arithmetic genus of the curve. Defaults to None; the
            coefficients never depend on it.

    Returns:
        The solution with integrality flags. ``log_degree`` is
        (K + C̃ + Σa_iE_i)·C̃ = 2g - 2 + Σ a_i t_i and is None without
        ``c_genus``. ``pullback_self`` is C̃² plus the local correction and is
        None without ``c_self``.

    Raises:
        NotContractible: If ``g`` is not negative definite.
        PreconditionViolated: If ``attach`` is zero.
    """
    matrix = require_contractible(g)
    if attach.is_zero():
        raise PreconditionViolated("attachment must meet the configuration")
    t = attach.vector(g)
    k = g.canonical_degrees()
    a = solve(matrix, [-(ki + ti) for ki, ti in zip(k, t)])
    cycle = Cycle.from_vector(g, a)
    log_degree = None if c_genus is None else 2 * c_genus - 2 + dot(a, t)
    pullback_self = (
        None if c_self is None else c_self + mumford_correction(g, attach, attach)
    )
    return AttachmentSolution(
        coefficients=cycle,
        integral=cycle.is_integral(),
        all_at_least_one=all(value >= 1 for value in a),
        attached_values={vid: cycle[vid] for vid in g.ids if attach[vid] > 0},
        log_degree=None if log_degree is None else Fraction(log_degree),
        pullback_self=pullback_self,
    )


def lct_local(
    g: WeightedDualGraph,
    attach: Attachment,
    discrepancy: Cycle | None = None,
) -> Fraction:
    """Log canonical threshold of a curve through the point, capped at 1.

    Coefficients of π*(K_X + tC) on E_i are d_i + t·c_i with c = M⁻¹(-t_attach),
    so each vertex with c_i > 0 bounds t by (1 - d_i)/c_i.
    """
    matrix = require_contractible(g)
    if attach.is_zero():
        raise PreconditionViolated("attachment must meet the configuration")
    d = (discrepancy or discrepancy_cycle(g)).vector(g)
    c = solve(matrix, [-value for value in attach.vector(g)])
    threshold = Fraction(1)
    for di, ci in zip(d, c):
        if ci > 0:
            threshold = min(threshold, (1 - di) / ci)
    return threshold


def mumford_correction(
    g: WeightedDualGraph, attach_a: Attachment, attach_b: Attachment
) -> Fraction:
    """-aᵀ M⁻¹ b: the local term added to C̃_a·C̃_b by the Mumford pullback."""
    matrix = require_contractible(g)
    x = solve(matrix, attach_b.vector(g))
    return -Fraction(dot(attach_a.vector(g), x))


def different_degree(g: WeightedDualGraph, attach: Attachment) -> Fraction:
    """Local degree of Diff_C(0) at the point, for C smooth there.

    With K_Y + C̃ + Σ a_i E_i = π*(K_X + C) this is Σ a_i (C̃·E_i), so that
    deg(K_C + Diff_C(0)) = 2p_a(C̃) - 2 + Σ over points. On a Du Val point the
    canonical degrees vanish and it equals ``mumford_correction(g, attach, attach)``.

    Raises:
        NotContractible: If ``g`` is not negative definite.
        PreconditionViolated: If ``attach`` is zero.
    """
    solution = attachment_solve(g, attach)
    return sum(
        (solution.coefficients[vid] * attach[vid] for vid in g.ids), Fraction(0)
    )
