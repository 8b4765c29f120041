import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from surfcalc.cli import app
from tests.conftest import graph_payload, minus_three_pair, write_json


runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(app, ["--no-color", *args])


@pytest.mark.integration
def test_graph_analyze_e8(e8_file: Path) -> None:
    result = invoke("graph", "analyze", str(e8_file))

    assert result.exit_code == 0, result.output
    assert "det" in result.output
    assert "E8" in result.output


@pytest.mark.integration
def test_graph_analyze_json(e8_file: Path) -> None:
    result = invoke("--json", "graph", "analyze", str(e8_file))

    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["determinant"] == 1
    assert data["type"] == "E8"
    assert data["canonical_pairing"] == "0"


@pytest.mark.integration
def test_graph_recognize_cyclic(tmp_path: Path) -> None:
    path = write_json(tmp_path / "pair.json", graph_payload(minus_three_pair()))

    result = invoke("--json", "graph", "recognize", str(path))

    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["kind"] == "cyclic"
    assert data["cyclic"] == [8, 3]


@pytest.mark.integration
def test_bad_graph_file_exits_two(tmp_path: Path) -> None:
    path = write_json(tmp_path / "bad.json", {"vertices": [{"id": "a", "self": -2}, {"id": "a", "self": -2}]})

    result = invoke("graph", "analyze", str(path))

    assert result.exit_code == 2
    assert "duplicate id 'a'" in result.stderr


@pytest.mark.integration
def test_not_contractible_exits_two(tmp_path: Path) -> None:
    path = write_json(tmp_path / "pos.json", {"vertices": [{"id": "a", "self": 1}]})

    result = invoke("graph", "analyze", str(path))

    assert result.exit_code == 2


@pytest.mark.integration
def test_lct_on_a8(tmp_path: Path) -> None:
    from surfcalc.dualgraph import du_val_graph

    path = write_json(tmp_path / "a8.json", graph_payload(du_val_graph("A", 8)))

    result = invoke("--json", "lct", str(path), "--attach", "a3")

    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["threshold"] == "1/2"


@pytest.mark.integration
def test_lct_rejects_bad_attachment(e8_file: Path) -> None:
    result = invoke("lct", str(e8_file), "--attach", "center=x")

    assert result.exit_code == 2


@pytest.mark.integration
def test_classify_screen_json() -> None:
    result = invoke("--json", "classify", "screen")

    assert result.exit_code == 0, result.output
    reports = json.loads(result.stdout)
    assert len(reports) == 8
    survivors = [report for report in reports if report["integral"]]
    assert len(survivors) == 1
    assert survivors[0]["rho"] == "13"


@pytest.mark.integration
def test_classify_screen_table() -> None:
    result = invoke("classify", "screen")

    assert result.exit_code == 0, result.output
    assert "survivors:" in result.output


@pytest.mark.integration
def test_classify_attach(e8_file: Path) -> None:
    result = invoke("--json", "classify", "attach", str(e8_file))

    assert result.exit_code == 0, result.output
    assert len(json.loads(result.stdout)) == 8


@pytest.mark.integration
def test_construct_single_and_family() -> None:
    single = invoke("--json", "construct", "cusp", "4")
    family = invoke("construct", "node", "3")

    assert single.exit_code == 0, single.output
    assert json.loads(single.stdout)["r"] == 29
    assert family.exit_code == 0, family.output
    assert "4/4 constructions verified" in family.output


@pytest.mark.integration
def test_construct_invalid_params_exit_two() -> None:
    result = invoke("construct", "cusp", "3")

    assert result.exit_code == 2
    assert "cusp" in result.stderr


@pytest.mark.integration
def test_surface_run(tmp_path: Path) -> None:
    payload = {
        "base": "S_E8",
        "steps": [{"new_id": "E1", "mults": {"Gamma": 2}}],
        "contract": [["Gamma"]],
    }
    path = write_json(tmp_path / "node1.json", payload)

    result = invoke("--json", "surface", "run", str(path))

    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["label"] == "node1"
    assert data["k_squared"] == "1/3"
    assert data["points"][0]["type"] == "1/3(1,1)"


@pytest.mark.integration
def test_fe_check_json() -> None:
    result = invoke("--json", "fe-check", "2")

    assert result.exit_code == 0, result.output
    data = json.loads(result.stdout)
    assert data["no_generating_decomposition"] is True
    assert {"m1": [1, 0], "m2": [1, 4], "generates": False, "balanced": False} in data["candidates"]


@pytest.mark.integration
@pytest.mark.parametrize("name", ["nodal", "tiger", "tiger-lemma", "no-p1", "rational"])
def test_examples_pass(name: str) -> None:
    result = invoke("example", name)

    assert result.exit_code == 0, result.output


@pytest.mark.integration
def test_unknown_example_exits_two() -> None:
    result = invoke("example", "dragon")

    assert result.exit_code == 2
    assert "unknown example" in result.stderr


@pytest.mark.integration
def test_verify_command() -> None:
    result = invoke("verify", "--samples", "5")

    assert result.exit_code == 0, result.output


@pytest.mark.integration
def test_verify_paper_command_and_alias_agree() -> None:
    paper = invoke("--json", "verify-paper", "--seed", "1", "--samples", "5")
    alias = invoke("--json", "verify", "--seed", "1", "--samples", "5")

    assert paper.exit_code == 0, paper.output
    assert json.loads(paper.stdout) == json.loads(alias.stdout)


@pytest.mark.integration
def test_invalid_settings_exit_two(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SURFCALC_LOG_LEVEL", "loud")

    result = invoke("classify", "screen")

    assert result.exit_code == 2
