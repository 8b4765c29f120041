"""Worked examples on explicit blowup scripts.

Each function builds its model, runs the relevant tests and returns a report
whose checks hold exactly when the computed lattice facts are as expected.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match

from surfcalc.classify.construct import GAMMA, anticanonical_check, exceptional
from surfcalc.classify.reports import CheckResult, ExampleReport, show
from surfcalc.dualgraph import (
    Attachment,
    NotQuotient,
    WeightedDualGraph,
    different_degree,
    du_val_graph,
    fork_graph,
    is_klt,
    is_rational,
)
from surfcalc.errors import InvalidParams
from surfcalc.exact import format_rat
from surfcalc.surface import (
    BlowupScript,
    BlowupStep,
    DivisorClass,
    SingularSurfaceModel,
    class_group,
    global_invariants,
    is_smooth_rational,
    pair,
    run_script,
    tiger_test,
)


logger = logging.getLogger(__name__)


def _weighted(g: WeightedDualGraph) -> nx.MultiGraph:
    graph = g.to_networkx()
    nx.set_node_attributes(graph, {v.id: v.self_intersection for v in g.vertices}, "weight")
    return graph


def same_shape(a: WeightedDualGraph, b: WeightedDualGraph) -> bool:
    """Isomorphic as weighted multigraphs."""
    return nx.is_isomorphic(
        _weighted(a), _weighted(b), node_match=categorical_node_match("weight", None)
    )


@dataclass(frozen=True, slots=True)
class RationalExample:
    graph: WeightedDualGraph
    model: SingularSurfaceModel
    report: ExampleReport


def rational_fork(m: int) -> WeightedDualGraph:
    """Central (-2) with arms (-2), (-3) and (-2)...(-2)-(-m-1) of m-3 curves."""
    return fork_graph(2, [[2], [3], [2] * (m - 4) + [m + 1]])


def rational_script(m: int) -> BlowupScript:
    """Cusp chain: q1..q_{m-1} on Γ̃, q_m on E_{m-1} only."""
    steps = [
        BlowupStep(exceptional(1), {GAMMA: 2}),
        BlowupStep(exceptional(2), {GAMMA: 1, exceptional(1): 1}),
        BlowupStep(exceptional(3), {GAMMA: 1, exceptional(1): 1, exceptional(2): 1}),
    ]
    for i in range(4, m):
        steps.append(BlowupStep(exceptional(i), {GAMMA: 1, exceptional(i - 1): 1}))
    steps.append(BlowupStep(exceptional(m), {exceptional(m - 1): 1}))
    group = (GAMMA,) + tuple(exceptional(i) for i in range(1, m))
    return BlowupScript(base="S_E8", steps=tuple(steps), contract=(group,))


def rational_example(m: int) -> RationalExample:
    """A rational, non-klt point on a surface whose class group is Z·(-K_X).

    Raises:
        InvalidParams: If m < 5.
    """
    if m < 5:
        raise InvalidParams(f"the rational example needs m >= 5, got {m}")
    expected = rational_fork(m)
    x = run_script(rational_script(m))
    point = x.points[0]
    relation = {GAMMA: 1, exceptional(1): 1, exceptional(2): 1, exceptional(m): 1}
    relation |= {exceptional(i): 2 for i in range(3, m)}

    presentation = class_group(x)
    last = x.ambient.curve(exceptional(m))
    checks = [
        CheckResult.holds("fork shape", same_shape(point.graph, expected)),
        CheckResult.compare("rational", is_rational(point.graph), True),
        CheckResult.compare("klt", is_klt(point.graph), False),
        CheckResult.holds(
            "not a quotient", isinstance(point.singularity_type(), NotQuotient)
        ),
        anticanonical_check(x, relation),
        CheckResult.compare(
            "Cl(X) generated by -K_X", presentation.anticanonical_generated, True
        ),
        CheckResult.compare(
            f"image of {last.id}", presentation.free_coordinate(last.cls), 1
        ),
    ]
    report = ExampleReport(
        label=f"rational m={m}",
        checks=checks,
        values={
            "weights": show(point.graph.weights),
            "class group": presentation.label(),
        },
    )
    return RationalExample(graph=expected, model=x, report=report)


def nodal_blowup_example() -> ExampleReport:
    """Blow up the node of D on the A8 base and contract D̃.

    E meets the new point twice, so its image is not smooth there even though
    it is rational; consistently K_X + E is trivial in Cl(X).
    """
    script = BlowupScript(
        base="dP1_A8",
        steps=(BlowupStep("E", {"D": 2}),),
        contract=(("D",),),
    )
    x = run_script(script)
    e_curve = x.ambient.curve("E")
    verdict = is_smooth_rational(x, e_curve)
    invariants = global_invariants(x)
    checks = [
        CheckResult.compare("point type", x.points[0].singularity_type().label, "1/3(1,1)"),
        CheckResult.compare("E meets the point transversally", verdict.transversal, False),
        CheckResult.compare("K_X + E in Cl(X)", verdict.adjoint_coordinate, 0),
        CheckResult.compare("K_X^2", invariants.k_squared, Fraction(1, 3)),
        CheckResult.holds("Noether consistency", invariants.noether_consistent),
    ]
    return ExampleReport(
        label="nodal blowup",
        checks=checks,
        values=invariants.as_strings(),
    )


def tiger_example() -> ExampleReport:
    """Two blowups at the node of D on the A8 base; L does not support a tiger.

    L meets the new 1/7(1,2) point and the A8 point, where its threshold is 1/2.
    """
    script = BlowupScript(
        base="dP1_A8",
        steps=(
            BlowupStep("E1", {"D": 2}),
            BlowupStep("E2", {"D": 1, "E1": 1}),
        ),
        contract=(("D", "E1"),),
    )
    x = run_script(script)
    curve = x.ambient.curve("L")
    verdict = tiger_test(x, curve)
    checks = [
        CheckResult.compare("point type", x.points[0].singularity_type().label, "1/7(1,2)"),
        CheckResult.compare("C^2", pair(x, curve.cls, curve.cls), Fraction(9, 7)),
        CheckResult.compare("alpha", verdict.alpha, Fraction(1, 3)),
        CheckResult.compare("beta", verdict.beta, Fraction(1, 2)),
        CheckResult.compare("(K_X + beta C).C", verdict.log_pairing, Fraction(3, 14)),
        CheckResult.compare("supports tiger", verdict.supports_tiger, False),
    ]
    values = verdict.as_strings() | {
        f"lct at {label}": format_rat(t) for label, t in verdict.thresholds.items()
    }
    return ExampleReport(label="tiger", checks=checks, values=values)


def no_p1_script(variant: str) -> BlowupScript:
    nodes = (BlowupStep("N1", {"C1": 2}), BlowupStep("N2", {"C2": 2}))
    if variant == "A8":
        return BlowupScript(base="dP1_A8", steps=nodes, contract=(("C1", "C2"),))
    if variant == "smooth":
        general = tuple(BlowupStep(f"F{i}", {"C1": 1, "C2": 1}) for i in range(1, 9))
        return BlowupScript(base="P2", steps=general + nodes, contract=(("C1", "C2"),))
    raise InvalidParams(f"unknown variant '{variant}'; expected 'smooth' or 'A8'")


def no_p1_example(variant: str = "A8") -> ExampleReport:
    """Contract two nodal anticanonical curves meeting once to a 1/8(1,3) point.

    K_X is numerically trivial and -2K_Y = C̃1 + C̃2, so every class meets the
    contracted pair evenly: no curve through the point has a smooth rational image.
    """
    x = run_script(no_p1_script(variant))
    ambient = x.ambient
    c1, c2 = ambient.curve("C1"), ambient.curve("C2")
    pair_sum = c1.cls + c2.cls
    odd = [
        label
        for index, label in enumerate(ambient.basis)
        if ambient.dot(DivisorClass.basis_vector(index, ambient.rank), pair_sum) % 2
    ]
    presentation = class_group(x)
    checks = [
        CheckResult.compare("C1^2", ambient.dot(c1.cls, c1.cls), -3),
        CheckResult.compare("C2^2", ambient.dot(c2.cls, c2.cls), -3),
        CheckResult.compare("C1.C2", ambient.dot(c1.cls, c2.cls), 1),
        CheckResult.holds("-2K_Y = C1 + C2", (ambient.K * -2 - pair_sum).is_zero()),
        CheckResult.compare("point type", x.points[0].singularity_type().label, "1/8(1,3)"),
        CheckResult.compare("K_X^2", pair(x, ambient.K, ambient.K), 0),
        CheckResult.compare("basis vectors with odd pairing", odd, []),
    ]
    values = {"class group": presentation.label()}
    if variant == "A8":
        generator = presentation.free_generators()[0]
        checks.append(CheckResult.compare("torsion", presentation.torsion, (2,)))
        checks.append(
            CheckResult.compare("E^2 of the free generator", pair(x, generator, generator), Fraction(1, 2))
        )
        values["generator"] = show(generator.as_strings())
        checks.extend(a8_different_checks())
    return ExampleReport(label=f"no P1 ({variant})", checks=checks, values=values)


def a8_different_checks() -> list[CheckResult]:
    """A smooth curve through the A8 point meeting a_k once.

    Its different is k(9-k)/9 = (1/k + 1/(9-k))^-1, at most 20/9, so
    deg(K_C + Diff) <= 2/9 stays below C^2 >= 1/2 and no such curve exists.
    """
    a8 = du_val_graph("A", 8)
    degrees = {k: different_degree(a8, Attachment.unit(f"a{k}")) for k in range(1, 9)}
    largest = max(degrees.values())
    return [
        CheckResult.compare(
            "different on A8",
            degrees,
            {k: Fraction(k * (9 - k), 9) for k in range(1, 9)},
        ),
        CheckResult.compare("largest different", largest, Fraction(20, 9)),
        CheckResult.holds("deg(K_C + Diff) < 1/2", -2 + largest < Fraction(1, 2)),
    ]


def tiger_lemma_check() -> ExampleReport:
    """A smooth rational curve in the smooth locus always supports a tiger."""
    x = run_script(BlowupScript(base="P2"))
    curve = x.ambient.curve("L")
    verdict = tiger_test(x, curve)
    checks = [
        CheckResult.compare("(K_X + C).C", pair(x, x.ambient.K + curve.cls, curve.cls), -2),
        CheckResult.compare("beta", verdict.beta, 1),
        CheckResult.compare("supports tiger", verdict.supports_tiger, True),
    ]
    return ExampleReport(label="tiger lemma", checks=checks, values=verdict.as_strings())


EXAMPLES = {
    "nodal": nodal_blowup_example,
    "tiger": tiger_example,
    "tiger-lemma": tiger_lemma_check,
}
