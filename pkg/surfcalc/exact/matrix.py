from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from surfcalc.errors import NotSymmetric
from surfcalc.exact.rational import Number


MatrixLike = Sequence[Sequence[Number]]


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Dense row-major integer matrix with arbitrary-precision entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        normalized: list[int] = []
        for entry in self.entries:
            if isinstance(entry, bool) or not isinstance(entry, int | Fraction):
                raise TypeError(f"integer entry required, got {entry!r}")
            if Fraction(entry).denominator != 1:
                raise ValueError(f"integer entry required, got {entry}")
            normalized.append(int(entry))
        object.__setattr__(self, "entries", tuple(normalized))

    @classmethod
    def from_rows(cls, rows: MatrixLike, cols: int | None = None) -> "IntMatrix":
        row_list = [list(row) for row in rows]
        width = len(row_list[0]) if row_list else (cols or 0)
        if any(len(row) != width for row in row_list):
            raise ValueError("rows must all have the same length")
        return cls(
            rows=len(row_list),
            cols=width,
            entries=tuple(entry for row in row_list for entry in row),
        )

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)],
            cols=size,
        )

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def permuted(self, order: Sequence[int]) -> "IntMatrix":
        """Simultaneous row and column permutation."""
        return IntMatrix.from_rows(
            [[self[i, j] for j in order] for i in order], cols=len(order)
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        return IntMatrix.from_rows(
            mat_mul(self.to_rows(), other.to_rows()), cols=other.cols
        )


def rows_of(a: IntMatrix | MatrixLike) -> list[list[Number]]:
    if isinstance(a, IntMatrix):
        return [list(row) for row in a.to_rows()]
    return [list(row) for row in a]


def mat_mul(a: MatrixLike, b: MatrixLike) -> list[list[Number]]:
    inner = len(b)
    width = len(b[0]) if inner else 0
    return [
        [sum((row[k] * b[k][j] for k in range(inner)), 0) for j in range(width)]
        for row in a
    ]


def mat_vec(a: IntMatrix | MatrixLike, x: Sequence[Number]) -> list[Number]:
    return [dot(row, x) for row in rows_of(a)]


def dot(x: Sequence[Number], y: Sequence[Number]) -> Number:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), 0)


def _exact_div(x: Number, y: Number) -> Number:
    if isinstance(x, int) and isinstance(y, int):
        return x // y
    return Fraction(x) / y


def determinant(a: IntMatrix | MatrixLike) -> Number:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Integer input gives an int; rational input gives a Fraction.
    """
    m = rows_of(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    previous: Number = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous)
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def is_negative_definite(a: IntMatrix | MatrixLike) -> bool:
    """Sylvester's criterion: (-1)^k times the k-th leading minor is positive."""
    m = rows_of(a)
    n = len(m)
    if any(len(row) != n for row in m) or any(
        m[i][j] != m[j][i] for i in range(n) for j in range(i + 1, n)
    ):
        raise NotSymmetric("negative definiteness needs a square symmetric matrix")
    for size in range(1, n + 1):
        minor = determinant([row[:size] for row in m[:size]])
        if (-1) ** size * minor <= 0:
            return False
    return True
