import json
from pathlib import Path
from typing import Any

import pytest

from surfcalc.config import get_settings
from surfcalc.dualgraph import WeightedDualGraph, chain_graph, e8_graph, fork_graph


def rejected_fork() -> WeightedDualGraph:
    """⟨2;2,1;3,1;3,2⟩ with a (-3) curve on the second branch."""
    return fork_graph(2, [[2], [3], [2, 2]])


def survivor_fork() -> WeightedDualGraph:
    """⟨2;2,1;3,1;5,1⟩."""
    return fork_graph(2, [[2], [3], [5]])


def minus_three_pair() -> WeightedDualGraph:
    return chain_graph([3, 3])


def graph_payload(g: WeightedDualGraph) -> dict[str, Any]:
    return {
        "vertices": [
            {"id": v.id, "self": v.self_intersection, "genus": v.genus} for v in g.vertices
        ],
        "edges": [{"a": e.a, "b": e.b, "mult": e.mult} for e in g.edges],
    }


def write_json(path: Path, payload: object) -> Path:
    path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return path


@pytest.fixture
def e8() -> WeightedDualGraph:
    return e8_graph()


@pytest.fixture
def e8_file(tmp_path: Path) -> Path:
    return write_json(tmp_path / "e8.json", graph_payload(e8_graph()))


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in (
        "SURFCALC_COLOR",
        "SURFCALC_LOG_LEVEL",
        "SURFCALC_JSON_INDENT",
        "SURFCALC_PROPERTY_SEED",
        "SURFCALC_PROPERTY_SAMPLES",
    ):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
