import pytest

from surfcalc.dualgraph import (
    Attachment,
    Cycle,
    Edge,
    Vertex,
    WeightedDualGraph,
    chain_graph,
    du_val_graph,
    fork_graph,
)
from surfcalc.errors import DuplicateId, InvalidParameters, ParseError, SelfLoop


@pytest.mark.unit
def test_intersection_matrix_follows_vertex_order() -> None:
    g = WeightedDualGraph.build([("x", -3), ("y", -2)], [("x", "y", 2)])

    assert g.intersection_matrix().to_rows() == [[-3, 2], [2, -2]]
    assert g.canonical_degrees() == [1, 0]


@pytest.mark.unit
def test_duplicate_vertex_ids_are_rejected() -> None:
    with pytest.raises(DuplicateId) as error:
        WeightedDualGraph.build([("a", -2), ("a", -3)])

    assert error.value.vertex_id == "a"


@pytest.mark.unit
def test_edge_to_unknown_vertex_names_it() -> None:
    with pytest.raises(ParseError, match="ghost"):
        WeightedDualGraph.build([("a", -2)], [("a", "ghost")])


@pytest.mark.unit
def test_self_loop_and_zero_multiplicity_are_rejected() -> None:
    with pytest.raises(SelfLoop):
        Edge("a", "a")
    with pytest.raises(ParseError, match="multiplicity"):
        Edge("a", "b", 0)


@pytest.mark.unit
def test_negative_genus_is_rejected() -> None:
    with pytest.raises(ParseError, match="negative genus"):
        Vertex("a", -2, -1)


@pytest.mark.unit
def test_networkx_view_counts_multiplicity_as_parallel_edges() -> None:
    g = WeightedDualGraph.build([("a", -3), ("b", -3)], [("a", "b", 2)])

    graph = g.to_networkx()

    assert graph.number_of_edges("a", "b") == 2
    assert not g.has_simple_edges()


@pytest.mark.unit
def test_minimality_ignores_irrational_curves() -> None:
    assert WeightedDualGraph.build([("e", -1, 1)]).is_minimal()
    assert not WeightedDualGraph.build([("e", -1)]).is_minimal()


@pytest.mark.unit
def test_chain_and_fork_factories() -> None:
    chain = chain_graph([4, 2])
    fork = fork_graph(2, [[2], [3], [2, 2]])

    assert chain.weights == (-4, -2)
    assert fork.ids == ("center", "b1_1", "b2_1", "b3_1", "b3_2")
    assert fork.vertex("b2_1").self_intersection == -3
    assert fork.pairing("center", "b3_1") == 1
    assert fork.pairing("center", "b3_2") == 0


@pytest.mark.unit
def test_du_val_factory_rejects_impossible_ranks() -> None:
    assert len(du_val_graph("d", 5)) == 5
    with pytest.raises(InvalidParameters):
        du_val_graph("E", 9)


@pytest.mark.unit
def test_cycle_and_attachment_reject_unknown_vertices() -> None:
    g = chain_graph([2, 2])

    with pytest.raises(ParseError):
        Cycle({"zz": 1}).vector(g)
    with pytest.raises(ParseError):
        Attachment({"zz": 1}).vector(g)
    with pytest.raises(ParseError, match="negative"):
        Attachment({"c1": -1})
