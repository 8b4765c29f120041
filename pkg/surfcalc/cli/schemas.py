"""JSON input files: resolution graphs and blowup scripts."""

import json
import logging
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from surfcalc.dualgraph import Edge, Vertex, WeightedDualGraph
from surfcalc.errors import ParseError
from surfcalc.surface import BlowupScript, BlowupStep


logger = logging.getLogger(__name__)

FileModel = TypeVar("FileModel", bound=BaseModel)


class VertexSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    id: str = Field(min_length=1)
    self_intersection: int = Field(alias="self", description="E_i²")
    genus: int = Field(default=0, ge=0)


class EdgeSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: str
    b: str
    mult: int = Field(default=1, ge=1, description="Intersection number, at least 1")


class GraphFile(BaseModel):
    """{"vertices": [{"id", "self", "genus"}], "edges": [{"a", "b", "mult"}]}"""

    model_config = ConfigDict(extra="forbid")

    vertices: list[VertexSpec]
    edges: list[EdgeSpec] = Field(default_factory=list)

    def to_graph(self) -> WeightedDualGraph:
        return WeightedDualGraph(
            vertices=tuple(Vertex(v.id, v.self_intersection, v.genus) for v in self.vertices),
            edges=tuple(Edge(e.a, e.b, e.mult) for e in self.edges),
        )


class StepSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    new_id: str = Field(min_length=1)
    mults: dict[str, int] = Field(default_factory=dict)


class ScriptFile(BaseModel):
    """{"base": str, "steps": [{"new_id", "mults"}], "contract": [[ids...], ...]}"""

    model_config = ConfigDict(extra="forbid")

    base: str
    steps: list[StepSpec] = Field(default_factory=list)
    contract: list[list[str]] = Field(default_factory=list)

    def to_script(self) -> BlowupScript:
        return BlowupScript(
            base=self.base,
            steps=tuple(BlowupStep(s.new_id, s.mults) for s in self.steps),
            contract=tuple(tuple(group) for group in self.contract),
        )


def _field_path(location: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in location) or "<root>"


def load_file(path: Path, model: type[FileModel]) -> FileModel:
    """Read ``path`` as JSON and validate it against ``model``.

    Raises:
        ParseError: On unreadable files, malformed JSON (with line and column)
            or schema violations (with the field path of the first one).
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from e
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        logger.debug(f"{path}: {e.error_count()} validation error(s)")
        raise ParseError(first["msg"], field=_field_path(first["loc"])) from e


def parse_graph(path: Path) -> WeightedDualGraph:
    """Graph file to WeightedDualGraph.

    Raises:
        ParseError: Malformed file, unknown edge endpoint or multiplicity < 1.
        DuplicateId: Two vertices share an id.
        SelfLoop: An edge joins a vertex to itself.
    """
    return load_file(path, GraphFile).to_graph()


def parse_script(path: Path) -> BlowupScript:
    return load_file(path, ScriptFile).to_script()
