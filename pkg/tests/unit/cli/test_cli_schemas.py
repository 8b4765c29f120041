from pathlib import Path

import pytest

from surfcalc.cli.schemas import parse_graph, parse_script
from surfcalc.errors import DuplicateId, ParseError, SelfLoop
from tests.conftest import write_json


@pytest.mark.unit
def test_parse_graph_reads_e8(e8_file: Path, e8) -> None:
    assert parse_graph(e8_file) == e8


@pytest.mark.unit
def test_parse_graph_defaults(tmp_path: Path) -> None:
    path = write_json(tmp_path / "g.json", {"vertices": [{"id": "C", "self": -1, "genus": 1}]})

    g = parse_graph(path)

    assert g.weights == (-1,)
    assert g.vertices[0].genus == 1
    assert g.edges == ()


@pytest.mark.unit
def test_unknown_edge_endpoint(tmp_path: Path) -> None:
    payload = {"vertices": [{"id": "a", "self": -2}], "edges": [{"a": "a", "b": "z"}]}

    with pytest.raises(ParseError, match="unknown vertex 'z'"):
        parse_graph(write_json(tmp_path / "g.json", payload))


@pytest.mark.unit
def test_zero_multiplicity_reports_field_path(tmp_path: Path) -> None:
    payload = {
        "vertices": [{"id": "a", "self": -2}, {"id": "b", "self": -2}],
        "edges": [{"a": "a", "b": "b", "mult": 0}],
    }

    with pytest.raises(ParseError) as excinfo:
        parse_graph(write_json(tmp_path / "g.json", payload))

    assert excinfo.value.field == "edges.0.mult"


@pytest.mark.unit
def test_missing_self_intersection(tmp_path: Path) -> None:
    path = write_json(tmp_path / "g.json", {"vertices": [{"id": "a"}]})

    with pytest.raises(ParseError) as excinfo:
        parse_graph(path)

    assert excinfo.value.field == "vertices.0.self"


@pytest.mark.unit
def test_unknown_key_is_rejected(tmp_path: Path) -> None:
    path = write_json(tmp_path / "g.json", {"vertices": [{"id": "a", "self": -2, "weight": 3}]})

    with pytest.raises(ParseError):
        parse_graph(path)


@pytest.mark.unit
def test_malformed_json_reports_line(tmp_path: Path) -> None:
    path = tmp_path / "g.json"
    path.write_text('{\n  "vertices": [\n    {"id": "a",}\n  ]\n}\n', encoding="utf-8")

    with pytest.raises(ParseError, match="line 3"):
        parse_graph(path)


@pytest.mark.unit
def test_unreadable_file(tmp_path: Path) -> None:
    with pytest.raises(ParseError, match="cannot read"):
        parse_graph(tmp_path / "missing.json")


@pytest.mark.unit
def test_duplicate_and_self_loop(tmp_path: Path) -> None:
    duplicate = {"vertices": [{"id": "a", "self": -2}, {"id": "a", "self": -3}]}
    loop = {"vertices": [{"id": "a", "self": -2}], "edges": [{"a": "a", "b": "a"}]}

    with pytest.raises(DuplicateId):
        parse_graph(write_json(tmp_path / "dup.json", duplicate))
    with pytest.raises(SelfLoop):
        parse_graph(write_json(tmp_path / "loop.json", loop))


@pytest.mark.unit
def test_parse_script(tmp_path: Path) -> None:
    payload = {
        "base": "S_E8",
        "steps": [{"new_id": "E1", "mults": {"Gamma": 2}}],
        "contract": [["Gamma"]],
    }

    script = parse_script(write_json(tmp_path / "s.json", payload))

    assert script.base == "S_E8"
    assert script.steps[0].new_id == "E1"
    assert script.steps[0].center_mults == {"Gamma": 2}
    assert script.contract == (("Gamma",),)
