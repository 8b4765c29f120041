from fractions import Fraction

import pytest
from sympy import Matrix

from surfcalc.dualgraph import (
    Attachment,
    Cycle,
    WeightedDualGraph,
    attachment_solve,
    canonical_pairing,
    chain_graph,
    cycle_genus,
    different_degree,
    discrepancy_cycle,
    du_val_graph,
    fundamental_cycle,
    is_klt,
    is_rational,
    is_rational_tree,
    lct_local,
    local_class_group,
    local_index,
    mumford_correction,
)
from surfcalc.errors import (
    NonIntegralCycle,
    NonRationalVertex,
    NotContractible,
    PreconditionViolated,
)
from tests.conftest import minus_three_pair, rejected_fork, survivor_fork


@pytest.mark.unit
def test_e8_fundamental_cycle_has_no_reduced_component(e8: WeightedDualGraph) -> None:
    z = fundamental_cycle(e8)

    assert z.minimum() == 2
    assert max(z.coefficients.values()) == 6
    assert cycle_genus(e8, z) == 0
    assert is_rational(e8)


@pytest.mark.unit
def test_a_n_fundamental_cycle_is_reduced() -> None:
    z = fundamental_cycle(du_val_graph("A", 5))

    assert set(z.coefficients.values()) == {1}


@pytest.mark.unit
def test_elliptic_curve_is_not_rational() -> None:
    g = WeightedDualGraph.build([("e", -1, 1)])

    assert cycle_genus(g, fundamental_cycle(g)) == 1
    assert not is_rational(g)
    with pytest.raises(NonRationalVertex):
        discrepancy_cycle(g)


@pytest.mark.unit
def test_cycle_genus_needs_integral_cycle(e8: WeightedDualGraph) -> None:
    with pytest.raises(NonIntegralCycle):
        cycle_genus(e8, Cycle({"e1": Fraction(1, 2)}))


@pytest.mark.unit
def test_non_negative_definite_graph_is_not_contractible() -> None:
    g = WeightedDualGraph.build([("a", -1), ("b", -1)], [("a", "b")])

    with pytest.raises(NotContractible):
        fundamental_cycle(g)


@pytest.mark.unit
def test_du_val_points_are_crepant(e8: WeightedDualGraph) -> None:
    d = discrepancy_cycle(e8)

    assert set(d.coefficients.values()) == {0}
    assert canonical_pairing(e8) == 0
    assert local_index(e8) == 1


@pytest.mark.unit
def test_rejected_fork_pairing_and_index() -> None:
    g = rejected_fork()

    d = discrepancy_cycle(g)

    assert d["center"] == Fraction(2, 3)
    assert d["b2_1"] == Fraction(5, 9)
    assert canonical_pairing(g) == Fraction(5, 9)
    assert local_index(g) == 9
    assert is_klt(g)


@pytest.mark.unit
def test_survivor_fork_discrepancies() -> None:
    g = survivor_fork()

    d = discrepancy_cycle(g).vector(g)

    assert d == [Fraction(28, 29), Fraction(14, 29), Fraction(19, 29), Fraction(23, 29)]
    assert canonical_pairing(g) == Fraction(88, 29)
    assert local_index(g) == 29


@pytest.mark.unit
def test_discrepancies_solve_the_adjunction_system() -> None:
    g = rejected_fork()
    matrix = Matrix(g.intersection_matrix().to_rows())

    d = discrepancy_cycle(g).vector(g)

    products = matrix * Matrix(d)
    assert list(products) == [-k for k in g.canonical_degrees()]


@pytest.mark.unit
def test_local_class_group_is_cyclic_of_the_index() -> None:
    group = local_class_group(rejected_fork())

    assert group.divisors == (9,)
    assert group.order == 9
    assert group.cyclic_of_index is True


@pytest.mark.unit
def test_local_class_group_of_minus_three_pair() -> None:
    group = local_class_group(minus_three_pair())

    assert group.divisors == (8,)
    assert group.index == 2
    assert group.cyclic_of_index is False


@pytest.mark.unit
def test_rational_tree_counts_multiplicities() -> None:
    tangent = WeightedDualGraph.build([("a", -3), ("b", -3)], [("a", "b", 2)])
    loop = WeightedDualGraph.build(
        [("a", -3), ("b", -3), ("c", -3)], [("a", "b"), ("b", "c"), ("a", "c")]
    )

    assert is_rational_tree(chain_graph([3, 3]))
    assert not is_rational_tree(tangent)
    assert not is_rational_tree(loop)
    assert is_rational_tree(loop, subset=["a", "b"])


@pytest.mark.unit
def test_unit_attachment_at_survivor_center_is_integral() -> None:
    g = survivor_fork()

    solution = attachment_solve(g, Attachment.unit("center"))

    assert solution.coefficients.vector(g) == [2, 1, 1, 1]
    assert solution.passes


@pytest.mark.unit
def test_attachment_reports_log_degree() -> None:
    g = chain_graph([3])

    solution = attachment_solve(g, Attachment.unit("c1"), c_self=-1, c_genus=0)

    assert solution.coefficients["c1"] == Fraction(2, 3)
    assert not solution.integral
    assert solution.log_degree == Fraction(-4, 3)
    assert solution.pullback_self == Fraction(-2, 3)


@pytest.mark.unit
def test_mumford_correction_of_one_third_point() -> None:
    attach = Attachment.unit("c1")

    assert mumford_correction(chain_graph([3]), attach, attach) == Fraction(1, 3)


@pytest.mark.unit
def test_lct_at_a8_third_vertex_is_one_half() -> None:
    assert lct_local(du_val_graph("A", 8), Attachment.unit("a3")) == Fraction(1, 2)


@pytest.mark.unit
def test_lct_is_capped_at_one() -> None:
    assert lct_local(chain_graph([3]), Attachment.unit("c1")) == 1


@pytest.mark.unit
def test_attachment_coefficients_ignore_curve_data() -> None:
    g = survivor_fork()
    attach = Attachment.unit("center")

    bare = attachment_solve(g, attach)
    full = attachment_solve(g, attach, c_self=-1, c_genus=0)

    assert bare.coefficients.vector(g) == full.coefficients.vector(g) == [2, 1, 1, 1]
    assert bare.log_degree is None
    assert bare.pullback_self is None
    assert full.log_degree == 0


@pytest.mark.unit
def test_different_of_a_one_is_one_half() -> None:
    assert different_degree(du_val_graph("A", 1), Attachment.unit("a1")) == Fraction(1, 2)


@pytest.mark.unit
def test_different_on_du_val_points_matches_mumford_correction() -> None:
    a8 = du_val_graph("A", 8)

    for vertex_id in a8.ids:
        attach = Attachment.unit(vertex_id)
        assert different_degree(a8, attach) == mumford_correction(a8, attach, attach)
    assert different_degree(a8, Attachment.unit("a4")) == Fraction(20, 9)


@pytest.mark.unit
def test_different_on_survivor_center_adds_the_coefficient() -> None:
    assert different_degree(survivor_fork(), Attachment.unit("center")) == 2


@pytest.mark.unit
def test_different_needs_a_meeting_curve() -> None:
    with pytest.raises(PreconditionViolated):
        different_degree(du_val_graph("A", 2), Attachment(intersections={}))
