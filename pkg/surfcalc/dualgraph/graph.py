from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from surfcalc.errors import DuplicateId, InvalidParameters, ParseError, SelfLoop
from surfcalc.exact import IntMatrix, Number, format_rat


@dataclass(frozen=True, slots=True)
class Vertex:
    id: str
    self_intersection: int
    genus: int = 0

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ParseError(f"vertex '{self.id}' has negative genus", field="genus")


@dataclass(frozen=True, slots=True)
class Edge:
    a: str
    b: str
    mult: int = 1

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise SelfLoop(self.a)
        if self.mult < 1:
            raise ParseError(
                f"edge {self.a}-{self.b} has multiplicity {self.mult}; must be >= 1",
                field="mult",
            )


@dataclass(frozen=True, slots=True)
class WeightedDualGraph:
    """Resolution dual graph: curves with self-intersection and genus, edges with multiplicity.

    Vertex order is insertion order and fixes the row order of every matrix
    and vector derived from the graph.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        index: dict[str, int] = {}
        for position, vertex in enumerate(self.vertices):
            if vertex.id in index:
                raise DuplicateId(vertex.id)
            index[vertex.id] = position
        for edge in self.edges:
            for end in (edge.a, edge.b):
                if end not in index:
                    raise ParseError(f"edge references unknown vertex '{end}'", field="edges")
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(
        cls,
        vertices: Iterable[tuple[str, int] | tuple[str, int, int]],
        edges: Iterable[tuple[str, str] | tuple[str, str, int]] = (),
    ) -> "WeightedDualGraph":
        """Shorthand constructor from plain tuples."""
        return cls(
            vertices=tuple(Vertex(*spec) for spec in vertices),
            edges=tuple(Edge(*spec) for spec in edges),
        )

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.self_intersection for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex_id: object) -> bool:
        return vertex_id in self._index

    def index(self, vertex_id: str) -> int:
        return self._index[vertex_id]

    def vertex(self, vertex_id: str) -> Vertex:
        return self.vertices[self._index[vertex_id]]

    def pairing(self, a: str, b: str) -> int:
        """Intersection number of two distinct vertices (sum over parallel edges)."""
        return sum(
            e.mult for e in self.edges if {e.a, e.b} == {a, b}
        )

    def intersection_matrix(self) -> IntMatrix:
        size = len(self.vertices)
        rows = [[0] * size for _ in range(size)]
        for i, vertex in enumerate(self.vertices):
            rows[i][i] = vertex.self_intersection
        for edge in self.edges:
            i, j = self._index[edge.a], self._index[edge.b]
            rows[i][j] += edge.mult
            rows[j][i] += edge.mult
        return IntMatrix.from_rows(rows, cols=size)

    def canonical_degrees(self) -> list[int]:
        """K·E_i = 2g_i - 2 - E_i² for every vertex."""
        return [2 * v.genus - 2 - v.self_intersection for v in self.vertices]

    def to_networkx(self, subset: Iterable[str] | None = None) -> nx.MultiGraph:
        """Multigraph with one parallel edge per unit of multiplicity."""
        keep = set(self.ids if subset is None else subset)
        graph = nx.MultiGraph()
        graph.add_nodes_from(v.id for v in self.vertices if v.id in keep)
        for edge in self.edges:
            if edge.a in keep and edge.b in keep:
                for _ in range(edge.mult):
                    graph.add_edge(edge.a, edge.b)
        return graph

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_connected(self.to_networkx())

    def has_simple_edges(self) -> bool:
        """Every adjacent pair meets exactly once."""
        seen: set[frozenset[str]] = set()
        for edge in self.edges:
            key = frozenset((edge.a, edge.b))
            if edge.mult != 1 or key in seen:
                return False
            seen.add(key)
        return True

    def is_minimal(self) -> bool:
        """No genus-0 vertex of self-intersection >= -1."""
        return all(
            v.self_intersection <= -2 or v.genus > 0 for v in self.vertices
        )


@dataclass(frozen=True, slots=True)
class Cycle:
    """Rational combination of exceptional curves; missing ids mean coefficient 0."""

    coefficients: Mapping[str, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "coefficients",
            {key: Fraction(value) for key, value in self.coefficients.items()},
        )

    @classmethod
    def from_vector(
        cls, graph: WeightedDualGraph, values: Sequence[Number]
    ) -> "Cycle":
        return cls(coefficients=dict(zip(graph.ids, values)))

    def __getitem__(self, vertex_id: str) -> Fraction:
        return self.coefficients.get(vertex_id, Fraction(0))

    def vector(self, graph: WeightedDualGraph) -> list[Fraction]:
        unknown = set(self.coefficients) - set(graph.ids)
        if unknown:
            raise ParseError(f"cycle mentions unknown vertices {sorted(unknown)}")
        return [self[vertex_id] for vertex_id in graph.ids]

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self.coefficients.values())

    def minimum(self) -> Fraction:
        return min(self.coefficients.values(), default=Fraction(0))

    def as_strings(self) -> dict[str, str]:
        return {key: format_rat(value) for key, value in self.coefficients.items()}


@dataclass(frozen=True, slots=True)
class Attachment:
    """Intersection numbers of an external curve with each exceptional curve."""

    intersections: Mapping[str, int]

    def __post_init__(self) -> None:
        values = dict(self.intersections)
        for key, value in values.items():
            if value < 0:
                raise ParseError(
                    f"attachment to '{key}' is negative ({value})", field="attach"
                )
        object.__setattr__(self, "intersections", values)

    @classmethod
    def unit(cls, vertex_id: str) -> "Attachment":
        return cls(intersections={vertex_id: 1})

    def __getitem__(self, vertex_id: str) -> int:
        return self.intersections.get(vertex_id, 0)

    def is_zero(self) -> bool:
        return not any(self.intersections.values())

    def total(self) -> int:
        return sum(self.intersections.values())

    def vector(self, graph: WeightedDualGraph) -> list[int]:
        unknown = set(self.intersections) - set(graph.ids)
        if unknown:
            raise ParseError(
                f"attachment mentions unknown vertices {sorted(unknown)}", field="attach"
            )
        return [self[vertex_id] for vertex_id in graph.ids]


def chain_graph(weights: Sequence[int], prefix: str = "c") -> WeightedDualGraph:
    """Chain with self-intersections -w for each positive w in ``weights``."""
    ids = [f"{prefix}{i + 1}" for i in range(len(weights))]
    return WeightedDualGraph.build(
        [(vertex_id, -w) for vertex_id, w in zip(ids, weights)],
        list(zip(ids, ids[1:])),
    )


def fork_graph(
    b: int, branches: Sequence[Sequence[int]], center: str = "center"
) -> WeightedDualGraph:
    """Star with central weight -b and one chain per branch, listed outward from the center."""
    vertices: list[tuple[str, int]] = [(center, -b)]
    edges: list[tuple[str, str]] = []
    for k, branch in enumerate(branches):
        previous = center
        for depth, weight in enumerate(branch):
            vertex_id = f"b{k + 1}_{depth + 1}"
            vertices.append((vertex_id, -weight))
            edges.append((previous, vertex_id))
            previous = vertex_id
    return WeightedDualGraph.build(vertices, edges)


def du_val_graph(family: str, rank: int) -> WeightedDualGraph:
    """All-(-2) ADE graph in the standard labelling."""
    family = family.upper()
    if family == "A" and rank >= 1:
        return chain_graph([2] * rank, prefix="a")
    if family == "D" and rank >= 4:
        return fork_graph(2, [[2], [2], [2] * (rank - 3)])
    if family == "E" and rank in (6, 7, 8):
        return fork_graph(2, [[2], [2, 2], [2] * (rank - 4)])
    raise InvalidParameters(f"no Du Val graph {family}{rank}")


def e8_graph() -> WeightedDualGraph:
    """E8 in Bourbaki labelling: chain e1-e3-e4-e5-e6-e7-e8 with e2 on e4."""
    ids = [f"e{i}" for i in range(1, 9)]
    return WeightedDualGraph.build(
        [(vertex_id, -2) for vertex_id in ids],
        [
            ("e1", "e3"),
            ("e3", "e4"),
            ("e4", "e5"),
            ("e5", "e6"),
            ("e6", "e7"),
            ("e7", "e8"),
            ("e2", "e4"),
        ],
    )
