"""Smith normal form over the integers and cokernel presentations.

Row and column operations run on numpy object arrays so entries stay Python
integers. Every row operation applied to D is mirrored on U (and its inverse on
``U_inv``), every column operation on V, keeping U·A·V = D at all times.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from surfcalc.exact.matrix import IntMatrix


logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SmithDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _to_matrix(array: np.ndarray) -> IntMatrix:
    rows, cols = array.shape
    return IntMatrix(rows=rows, cols=cols, entries=tuple(int(v) for v in array.flat))


class _Reducer:
    """Mutable working state of one Smith reduction."""

    def __init__(self, a: IntMatrix) -> None:
        m, n = a.rows, a.cols
        self.m, self.n = m, n
        self.d = np.array(a.entries, dtype=object).reshape(m, n)
        self.u = np.eye(m, dtype=int).astype(object)
        self.u_inv = np.eye(m, dtype=int).astype(object)
        self.v = np.eye(n, dtype=int).astype(object)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.d[[i, j]] = self.d[[j, i]]
        self.u[[i, j]] = self.u[[j, i]]
        self.u_inv[:, [i, j]] = self.u_inv[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        self.d[:, [i, j]] = self.d[:, [j, i]]
        self.v[:, [i, j]] = self.v[:, [j, i]]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]."""
        self.d[target] += factor * self.d[source]
        self.u[target] += factor * self.u[source]
        self.u_inv[:, source] -= factor * self.u_inv[:, target]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]."""
        self.d[:, target] += factor * self.d[:, source]
        self.v[:, target] += factor * self.v[:, source]

    def negate_row(self, i: int) -> None:
        self.d[i] = -self.d[i]
        self.u[i] = -self.u[i]
        self.u_inv[:, i] = -self.u_inv[:, i]

    def pick_pivot(self, t: int) -> tuple[int, int] | None:
        """Smallest nonzero |entry| in the trailing block, then lowest row, then column."""
        best: tuple[int, int, int] | None = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                value = abs(self.d[i, j])
                if value and (best is None or (value, i, j) < best):
                    best = (value, i, j)
        return None if best is None else (best[1], best[2])

    def eliminate(self, t: int) -> bool:
        """Clear row and column t against the pivot; True when both are clear."""
        pivot = self.d[t, t]
        clear = True
        for i in range(t + 1, self.m):
            if self.d[i, t]:
                self.add_row(i, t, -(self.d[i, t] // pivot))
                clear = clear and self.d[i, t] == 0
        for j in range(t + 1, self.n):
            if self.d[t, j]:
                self.add_col(j, t, -(self.d[t, j] // pivot))
                clear = clear and self.d[t, j] == 0
        return clear

    def non_divisible_row(self, t: int) -> int | None:
        pivot = self.d[t, t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if self.d[i, j] % pivot:
                    return i
        return None

    def run(self) -> None:
        for t in range(min(self.m, self.n)):
            while True:
                position = self.pick_pivot(t)
                if position is None:
                    return
                self.swap_rows(t, position[0])
                self.swap_cols(t, position[1])
                logger.debug(f"pivot {self.d[t, t]} at step {t}")
                if not self.eliminate(t):
                    continue
                offender = self.non_divisible_row(t)
                if offender is None:
                    break
                self.add_row(t, offender, 1)
            if self.d[t, t] < 0:
                self.negate_row(t)


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Returns:
        U, D, V with U·a·V = D, D diagonal with d1 | d2 | ... and nonnegative
        entries, and U_inv = U⁻¹. Output is deterministic for a fixed input.
    """
    reducer = _Reducer(a)
    reducer.run()
    return SmithDecomposition(
        U=_to_matrix(reducer.u),
        D=_to_matrix(reducer.d),
        V=_to_matrix(reducer.v),
        U_inv=_to_matrix(reducer.u_inv),
    )


@dataclass(frozen=True, slots=True)
class Cokernel:
    """Presentation of Z^m modulo the column span of an m×n integer matrix.

    ``divisors[i]`` is the order of the i-th coordinate: 0 for a free
    coordinate, 1 for a trivial one, d > 1 for a Z/d summand.
    """

    divisors: tuple[int, ...]
    transform: IntMatrix
    lifts: IntMatrix

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d > 1)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.divisors if d == 0)

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        total = 1
        for d in self.torsion:
            total *= d
        return total

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    def coordinates(self, x: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Image of x as (torsion residues, free coordinates)."""
        y = [
            sum(u * v for u, v in zip(self.transform.row(i), x))
            for i in range(self.transform.rows)
        ]
        torsion = tuple(y[i] % d for i, d in enumerate(self.divisors) if d > 1)
        free = tuple(y[i] for i, d in enumerate(self.divisors) if d == 0)
        return torsion, free

    def free_generator_lifts(self) -> list[tuple[int, ...]]:
        return [
            tuple(self.lifts[r, i] for r in range(self.lifts.rows))
            for i, d in enumerate(self.divisors)
            if d == 0
        ]

    def torsion_generator_lifts(self) -> list[tuple[int, ...]]:
        return [
            tuple(self.lifts[r, i] for r in range(self.lifts.rows))
            for i, d in enumerate(self.divisors)
            if d > 1
        ]


def cokernel(a: IntMatrix) -> Cokernel:
    snf = smith_normal_form(a)
    diagonal = snf.diagonal
    divisors = tuple(diagonal[i] if i < len(diagonal) else 0 for i in range(a.rows))
    return Cokernel(divisors=divisors, transform=snf.U, lifts=snf.U_inv)
