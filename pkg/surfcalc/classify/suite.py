"""End-to-end verification of every classification computation.

Each check group returns named comparisons; a group that raises is recorded
as a failed check rather than aborting the run. Random property checks draw
from ``random.Random(seed)`` so reports are reproducible.
"""

import logging
import math
import random
from collections.abc import Callable
from dataclasses import replace
from fractions import Fraction

from surfcalc.classify.construct import (
    ConstructionParams,
    construct_X,
    construction_family,
    verify_params,
)
from surfcalc.classify.examples import (
    nodal_blowup_example,
    no_p1_example,
    rational_example,
    tiger_example,
    tiger_lemma_check,
)
from surfcalc.classify.hirzebruch import fe_check
from surfcalc.classify.reports import CheckResult, SuiteReport
from surfcalc.classify.screen import (
    attachment_enumeration,
    fork_from_branches,
    noether_screen,
    screen_forks,
)
from surfcalc.config import get_settings
from surfcalc.dualgraph import (
    Attachment,
    Cyclic,
    DuVal,
    DuValFamily,
    WeightedDualGraph,
    chain_graph,
    discrepancy_cycle,
    e8_graph,
    fundamental_cycle,
    hj_expand,
    lct_local,
    local_class_group,
    local_index,
    recognize,
)
from surfcalc.exact import IntMatrix, determinant, smith_normal_form
from surfcalc.surface import (
    BlowupStep,
    DivisorClass,
    SurfaceModel,
    blowup,
    default_registry,
    pullback,
)


logger = logging.getLogger(__name__)

CheckGroup = Callable[[], list[CheckResult]]

REJECTED_FORK = (2, ((2, 1), (3, 1), (3, 2)))
SURVIVOR_FORK = (2, ((2, 1), (3, 1), (5, 1)))


def check_rejected_fork() -> list[CheckResult]:
    graph = fork_from_branches(*REJECTED_FORK)
    report = noether_screen([graph])
    return [
        CheckResult.compare("(-3) discrepancy", discrepancy_cycle(graph)["b2_1"], Fraction(5, 9)),
        CheckResult.compare("KG", report.kg, Fraction(5, 9)),
        CheckResult.compare("r", report.r, 9),
        CheckResult.compare("rho", report.rho, Fraction(94, 9)),
        CheckResult.compare("integral", report.integral, False),
    ]


def check_survivor_screen() -> list[CheckResult]:
    reports = screen_forks()
    survivors = [report for report in reports if report.integral]
    checks = [CheckResult.compare("integral forks", [r.label for r in survivors], ["<2;2,1;3,1;5,1>"])]
    checks.append(CheckResult.compare("screened forks", len(reports), 8))
    if len(survivors) == 1:
        graph = fork_from_branches(*SURVIVOR_FORK)
        checks += [
            CheckResult.compare("rho", survivors[0].rho, 13),
            CheckResult.compare("r", survivors[0].r, 29),
            CheckResult.compare("|det|", abs(determinant(graph.intersection_matrix())), 29),
        ]
    with_e8 = noether_screen([fork_from_branches(*SURVIVOR_FORK), e8_graph()])
    # Du Val points change neither KG nor r; their curves are part of rho.
    checks.append(CheckResult.compare("rho with an extra E8 point", with_e8.rho, 1 + 4 + 8))
    rejected = fork_from_branches(*REJECTED_FORK)
    tampered = WeightedDualGraph(
        vertices=tuple(
            replace(v, self_intersection=-2) if v.id == "b2_1" else v for v in rejected.vertices
        ),
        edges=rejected.edges,
    )
    checks.append(CheckResult.compare("tampered fork integral", noether_screen([tampered]).integral, True))
    return checks


def check_attachment_enumeration() -> list[CheckResult]:
    reports = attachment_enumeration(fork_from_branches(*SURVIVOR_FORK))
    passing = [report for report in reports if report.passes]
    checks = [CheckResult.compare("passing vertices", [r.vertex for r in passing], ["center"])]
    if passing:
        values = tuple(passing[0].coefficients.values())
        checks.append(CheckResult.compare("coefficients", values, (2, 1, 1, 1)))
    return checks


def check_e8() -> list[CheckResult]:
    graph = e8_graph()
    return [
        CheckResult.compare("det", determinant(graph.intersection_matrix()), 1),
        CheckResult.compare("class group", local_class_group(graph).divisors, ()),
        CheckResult.compare("index", local_index(graph), 1),
        CheckResult.compare("fundamental cycle minimum", fundamental_cycle(graph).minimum(), 2),
    ]


def check_recognition(max_n: int = 50) -> list[CheckResult]:
    chain = recognize(chain_graph([3, 3]))
    mismatches: list[tuple[int, int]] = []
    for n in range(2, max_n + 1):
        for q in range(1, n):
            if math.gcd(n, q) != 1:
                continue
            found = recognize(hj_expand(n, q))
            if q == n - 1:
                ok = found == DuVal(DuValFamily.A, n - 1)
            else:
                ok = isinstance(found, Cyclic) and found.n == n and q in (found.q, found.q_inverse)
            if not ok:
                mismatches.append((n, q))
    return [
        CheckResult.compare("(-3)-(-3)", chain.label, "1/8(1,3)"),
        CheckResult.compare(f"round trips up to n={max_n} failing", mismatches, []),
    ]


def check_constructions() -> list[CheckResult]:
    checks: list[CheckResult] = []
    for params in construction_family(max_node=3):
        report = verify_params(params)
        for check in report.checks:
            checks.append(check.model_copy(update={"name": f"{params.label}: {check.name}"}))
    fork = construct_X(ConstructionParams.cusp(4)).points[0].singularity_type()
    checks.append(CheckResult.compare("cusp m=4 point", fork.label, "<2;2,1;3,1;5,1>"))
    return checks


def check_pullback_orthogonality() -> list[CheckResult]:
    failures: list[str] = []
    for params in construction_family(max_node=3):
        x = construct_X(params)
        ambient = x.ambient
        for index in range(ambient.rank):
            image = pullback(x, DivisorClass.basis_vector(index, ambient.rank))
            for cid in x.contracted_ids:
                if ambient.dot(image, ambient.curve(cid).cls) != 0:
                    failures.append(f"{params.label}/{ambient.basis[index]}/{cid}")
    return [CheckResult.compare("non-orthogonal pullbacks", failures, [])]


def check_rational_examples() -> list[CheckResult]:
    checks: list[CheckResult] = []
    for m in (5, 6):
        report = rational_example(m).report
        checks += [c.model_copy(update={"name": f"rational m={m}: {c.name}"}) for c in report.checks]
    return checks


def check_worked_examples() -> list[CheckResult]:
    checks: list[CheckResult] = []
    for report in (
        no_p1_example("A8"),
        no_p1_example("smooth"),
        nodal_blowup_example(),
        tiger_example(),
        tiger_lemma_check(),
    ):
        checks += [c.model_copy(update={"name": f"{report.label}: {c.name}"}) for c in report.checks]
    return checks


def check_fe() -> list[CheckResult]:
    two = fe_check(2)
    balanced = [(c.m1, c.m2) for c in two.candidates if c.balanced]
    checks = [
        CheckResult.compare("e=0", fe_check(0).no_generating_decomposition, True),
        CheckResult.compare("e=2", two.no_generating_decomposition, True),
        CheckResult.compare("e=2 balanced splits", balanced, [((1, 2), (1, 2))]),
    ]
    failing = [e for e in [0, *range(2, 11)] if not fe_check(e).no_generating_decomposition]
    checks.append(CheckResult.compare("e <= 10 with a generating split", failing, []))
    return checks


def _random_matrix(rng: random.Random) -> IntMatrix:
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    return IntMatrix.from_rows(
        [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
    )


def smith_defects(a: IntMatrix) -> list[str]:
    """Every way the Smith decomposition of ``a`` fails its contract (empty when correct)."""
    snf = smith_normal_form(a)
    defects: list[str] = []
    if snf.U @ a @ snf.V != snf.D:
        defects.append("U·A·V != D")
    if snf.U @ snf.U_inv != IntMatrix.identity(a.rows):
        defects.append("U·U_inv != I")
    if abs(determinant(snf.V)) != 1:
        defects.append("V not unimodular")
    off_diagonal = any(
        snf.D[i, j] for i in range(a.rows) for j in range(a.cols) if i != j
    )
    if off_diagonal:
        defects.append("D not diagonal")
    diagonal = snf.diagonal
    if any(d < 0 for d in diagonal):
        defects.append("negative divisor")
    for first, second in zip(diagonal, diagonal[1:]):
        if (first == 0 and second != 0) or (first and second % first):
            defects.append("divisibility chain broken")
            break
    return defects


def _random_step(rng: random.Random, model: SurfaceModel, index: int) -> BlowupStep:
    mults: dict[str, int] = {}
    for curve in model.curves:
        roll = rng.random()
        if curve.pa >= 1 and roll < 0.15:
            mults[curve.id] = 2
        elif roll < 0.4:
            mults[curve.id] = 1
    return BlowupStep(f"R{index}", mults)


def blowup_defects(rng: random.Random) -> list[str]:
    name = rng.choice(default_registry.list_names())
    model = default_registry.get(name)
    defects: list[str] = []
    for index in range(1, rng.randint(1, 8) + 1):
        step = _random_step(rng, model, index)
        after = blowup(model, step)
        if after.rank != model.rank + 1:
            defects.append(f"{name}/{step.new_id}: rank")
        if after.dot(after.K, after.K) != model.dot(model.K, model.K) - 1:
            defects.append(f"{name}/{step.new_id}: K^2")
        if after.is_unimodular() != model.is_unimodular():
            defects.append(f"{name}/{step.new_id}: unimodularity")
        for curve in after.curves:
            if after.adjunction_defect(curve) != 0:
                defects.append(f"{name}/{step.new_id}: adjunction of {curve.id}")
        model = after
    return defects


def lct_corpus() -> list[WeightedDualGraph]:
    graphs = [
        hj_expand(n, q)
        for n in range(2, 13)
        for q in range(1, n)
        if math.gcd(n, q) == 1
    ]
    graphs += [fork_from_branches(2, branches) for branches in (SURVIVOR_FORK[1], REJECTED_FORK[1])]
    graphs.append(e8_graph())
    return graphs


def lct_defects(g: WeightedDualGraph) -> list[str]:
    defects: list[str] = []
    discrepancy = discrepancy_cycle(g)
    for position, vertex_id in enumerate(g.ids):
        single = lct_local(g, Attachment.unit(vertex_id), discrepancy)
        double = lct_local(g, Attachment({vertex_id: 2}), discrepancy)
        if single > 1:
            defects.append(f"{vertex_id}: lct above 1")
        if double > single:
            defects.append(f"{vertex_id}: doubling raised the lct")
        neighbour = g.ids[(position + 1) % len(g)]
        if neighbour != vertex_id:
            wider = lct_local(g, Attachment({vertex_id: 1, neighbour: 1}), discrepancy)
            if wider > single:
                defects.append(f"{vertex_id}+{neighbour}: larger attachment raised the lct")
    return defects


def property_checks(seed: int, samples: int) -> CheckGroup:
    def run() -> list[CheckResult]:
        rng = random.Random(seed)
        smith = [
            f"{a.to_rows()}: {d}"
            for a in (_random_matrix(rng) for _ in range(samples))
            for d in smith_defects(a)
        ]
        blowups = [d for _ in range(max(1, samples // 2)) for d in blowup_defects(rng)]
        lct = [d for g in lct_corpus() for d in lct_defects(g)]
        return [
            CheckResult.compare(f"Smith normal form on {samples} random matrices", smith, []),
            CheckResult.compare("random blowup scripts", blowups, []),
            CheckResult.compare("lct bounded and monotone", lct, []),
        ]

    return run


def verification_suite(seed: int | None = None, samples: int | None = None) -> SuiteReport:
    """Run every verification check and collect the results."""
    settings = get_settings()
    seed = settings.property_seed if seed is None else seed
    samples = settings.property_samples if samples is None else samples
    groups: list[tuple[str, CheckGroup]] = [
        ("rejected fork", check_rejected_fork),
        ("survivor screen", check_survivor_screen),
        ("attachment enumeration", check_attachment_enumeration),
        ("E8 invariants", check_e8),
        ("recognition", check_recognition),
        ("constructions", check_constructions),
        ("pullback orthogonality", check_pullback_orthogonality),
        ("rational examples", check_rational_examples),
        ("worked examples", check_worked_examples),
        ("F_e", check_fe),
        ("properties", property_checks(seed, samples)),
    ]
    checks: list[CheckResult] = []
    for name, group in groups:
        try:
            results = group()
        except Exception as e:
            logger.error(f"check group '{name}' raised {e}")
            results = [CheckResult.failed(name, e)]
        checks += [
            r if r.name.startswith(name) else r.model_copy(update={"name": f"{name}: {r.name}"})
            for r in results
        ]
    report = SuiteReport(label="verification suite", checks=checks, seed=seed, samples=samples)
    logger.info(f"verification suite: {len(checks) - len(report.failures())}/{len(checks)} passed")
    return report


def paper_suite(seed: int | None = None, samples: int | None = None) -> SuiteReport:
    """Entry point of ``surfcalc verify-paper``; same checks as ``verification_suite``."""
    return verification_suite(seed=seed, samples=samples)
