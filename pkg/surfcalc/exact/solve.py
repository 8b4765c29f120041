import logging
from collections.abc import Sequence
from fractions import Fraction

from surfcalc.errors import SingularMatrix
from surfcalc.exact.matrix import IntMatrix, MatrixLike, rows_of
from surfcalc.exact.rational import Number


logger = logging.getLogger(__name__)


def _reduce(augmented: list[list[Fraction]], size: int) -> None:
    """Gauss-Jordan elimination in place on an augmented matrix.

    The left ``size`` columns end up as the identity.
    """
    for col in range(size):
        pivot = next(
            (row for row in range(col, size) if augmented[row][col] != 0), None
        )
        if pivot is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {col})")
        if pivot != col:
            augmented[col], augmented[pivot] = augmented[pivot], augmented[col]
        scale = augmented[col][col]
        augmented[col] = [value / scale for value in augmented[col]]
        for row in range(size):
            if row == col or augmented[row][col] == 0:
                continue
            factor = augmented[row][col]
            augmented[row] = [
                value - factor * lead
                for value, lead in zip(augmented[row], augmented[col])
            ]


def _square_rows(a: IntMatrix | MatrixLike) -> list[list[Fraction]]:
    rows = [[Fraction(v) for v in row] for row in rows_of(a)]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("a square matrix is required")
    return rows


def solve(a: IntMatrix | MatrixLike, b: Sequence[Number]) -> list[Fraction]:
    """Exact solution x of a·x = b.

    Raises:
        SingularMatrix: If a has determinant zero.
    """
    rows = _square_rows(a)
    size = len(rows)
    if len(b) != size:
        raise ValueError(f"right-hand side has length {len(b)}, expected {size}")
    logger.debug(f"solving {size}x{size} system")
    augmented = [row + [Fraction(value)] for row, value in zip(rows, b)]
    _reduce(augmented, size)
    return [augmented[i][size] for i in range(size)]


def inverse(a: IntMatrix | MatrixLike) -> list[list[Fraction]]:
    rows = _square_rows(a)
    size = len(rows)
    augmented = [
        row + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(rows)
    ]
    _reduce(augmented, size)
    return [augmented[i][size:] for i in range(size)]
