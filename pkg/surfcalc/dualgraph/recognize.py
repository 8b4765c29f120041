"""Recognition of quotient singularities from their minimal resolution graph.

Chains are Hirzebruch-Jung strings, star-shaped graphs with three branches are
forks ⟨b; n1,q1; n2,q2; n3,q3⟩ (quotient exactly when Σ 1/n_i > 1), and
all-(-2) trees are Du Val.
"""

import math
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, spec: str) -> str:
            return str.__format__(str(self.value), spec)
from fractions import Fraction

import networkx as nx

from surfcalc.dualgraph.graph import WeightedDualGraph
from surfcalc.dualgraph.hj import hj_fraction, inverse_residue
from surfcalc.errors import PreconditionViolated
from surfcalc.exact import is_negative_definite


class DuValFamily(StrEnum):
    A = "A"
    D = "D"
    E = "E"


@dataclass(frozen=True, slots=True)
class Cyclic:
    """1/n(1,q) with q the smaller of the two orientations."""

    n: int
    q: int
    q_inverse: int

    @property
    def label(self) -> str:
        return f"1/{self.n}(1,{self.q})"

    @property
    def other_convention(self) -> tuple[int, int]:
        """The same germ written as 1/n(1,-q)."""
        return self.n, self.n - self.q


@dataclass(frozen=True, slots=True)
class Fork:
    b: int
    branches: tuple[tuple[int, int], ...]

    @property
    def label(self) -> str:
        inner = ";".join(f"{n},{q}" for n, q in self.branches)
        return f"<{self.b};{inner}>"

    @property
    def branch_orders(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.branches)


@dataclass(frozen=True, slots=True)
class DuVal:
    family: DuValFamily
    rank: int

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def as_cyclic(self) -> Cyclic | None:
        if self.family is DuValFamily.A:
            return Cyclic(n=self.rank + 1, q=self.rank, q_inverse=self.rank)
        return None


@dataclass(frozen=True, slots=True)
class NotQuotient:
    reason: str

    @property
    def label(self) -> str:
        return "not a quotient"


SingularityType = Cyclic | Fork | DuVal | NotQuotient


def _check_preconditions(g: WeightedDualGraph) -> None:
    if not g.is_connected():
        raise PreconditionViolated("graph must be nonempty and connected")
    if not is_negative_definite(g.intersection_matrix()):
        raise PreconditionViolated("intersection matrix is not negative definite")
    if any(v.genus > 0 for v in g.vertices):
        raise PreconditionViolated("all exceptional curves must be rational")
    if not g.has_simple_edges():
        raise PreconditionViolated("curves must meet transversally in at most one point")
    if not g.is_minimal():
        raise PreconditionViolated("resolution is not minimal (self-intersection >= -1)")


def _walk(graph: nx.Graph, start: str, came_from: str | None) -> list[str]:
    path = [start]
    previous, current = came_from, start
    while True:
        forward = [n for n in graph.neighbors(current) if n != previous]
        if len(forward) != 1:
            return path
        previous, current = current, forward[0]
        path.append(current)


def _cyclic_from_chain(weights: list[int]) -> Cyclic:
    n, q = hj_fraction(weights)
    q_inverse = inverse_residue(n, q)
    return Cyclic(n=n, q=min(q, q_inverse), q_inverse=max(q, q_inverse))


def _du_val_fork(orders: tuple[int, ...], size: int) -> DuVal:
    if orders[:2] == (2, 2):
        return DuVal(DuValFamily.D, size)
    return DuVal(DuValFamily.E, size)


def recognize(g: WeightedDualGraph) -> SingularityType:
    """Classify a minimal resolution graph.

    Raises:
        PreconditionViolated: If the graph is disconnected, not negative
            definite, has irrational curves, tangencies or (-1)-curves.
    """
    _check_preconditions(g)
    simple = nx.Graph(g.to_networkx())
    if not nx.is_tree(simple):
        return NotQuotient("dual graph contains a cycle")

    weight = {v.id: -v.self_intersection for v in g.vertices}
    all_minus_two = all(w == 2 for w in weight.values())
    branch_points = [vid for vid in g.ids if simple.degree(vid) >= 3]

    if not branch_points:
        start = next(vid for vid in g.ids if simple.degree(vid) <= 1)
        path = _walk(simple, start, None)
        if all_minus_two:
            return DuVal(DuValFamily.A, len(path))
        return _cyclic_from_chain([weight[vid] for vid in path])

    center = branch_points[0]
    if len(branch_points) > 1 or simple.degree(center) != 3:
        return NotQuotient("graph is not a chain or a three-branch fork")

    branches: list[tuple[int, int]] = []
    for neighbour in sorted(simple.neighbors(center), key=g.index):
        arm = _walk(simple, neighbour, center)
        branches.append(hj_fraction([weight[vid] for vid in arm]))
    branches.sort()
    orders = tuple(n for n, _ in branches)

    if all_minus_two:
        return _du_val_fork(orders, len(g))
    if sum(Fraction(1, n) for n in orders) <= 1:
        return NotQuotient(f"fork with branch orders {orders} is not platonic")
    return Fork(b=weight[center], branches=tuple(branches))


def cyclic_parameters(t: SingularityType) -> tuple[int, int] | None:
    """(n, q) for cyclic points, including A_n written as 1/(n+1)(1,n)."""
    if isinstance(t, DuVal):
        t = t.as_cyclic()
    if isinstance(t, Cyclic):
        return t.n, t.q
    return None


def is_admissible_cyclic(t: SingularityType) -> bool:
    """Cyclic 1/n(1,q) with (q,n) = (q+1,n) = 1."""
    params = cyclic_parameters(t)
    if params is None:
        return False
    n, q = params
    return math.gcd(q, n) == 1 and math.gcd(q + 1, n) == 1


def is_quotient(t: SingularityType) -> bool:
    return not isinstance(t, NotQuotient)


def has_cyclic_class_group_of_index(t: SingularityType) -> bool:
    """Members of the quotient list whose local class group is cyclic of order the index.

    These are the admissible cyclic points, ⟨b;2,1;3,1;3,2⟩, ⟨b;2;3;5⟩ and E8.
    """
    if isinstance(t, DuVal):
        return t.family is DuValFamily.E and t.rank == 8
    if isinstance(t, Cyclic):
        return is_admissible_cyclic(t)
    if isinstance(t, Fork):
        return t.branches == ((2, 1), (3, 1), (3, 2)) or t.branch_orders == (2, 3, 5)
    return False
