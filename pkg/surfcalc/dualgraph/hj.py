"""Hirzebruch-Jung continued fractions n/q = b1 - 1/(b2 - 1/(... - 1/bk))."""

import math
from collections.abc import Sequence
from fractions import Fraction

from surfcalc.dualgraph.graph import WeightedDualGraph, chain_graph
from surfcalc.errors import InvalidParameters


def check_cyclic_parameters(n: int, q: int) -> None:
    if n < 2 or not 0 < q < n or math.gcd(n, q) != 1:
        raise InvalidParameters(
            f"cyclic parameters need n >= 2, 0 < q < n and gcd(n, q) = 1; got ({n}, {q})"
        )


def hj_continued_fraction(n: int, q: int) -> list[int]:
    check_cyclic_parameters(n, q)
    terms: list[int] = []
    while q:
        b = -(-n // q)
        terms.append(b)
        n, q = q, b * q - n
    return terms


def hj_fraction(weights: Sequence[int]) -> tuple[int, int]:
    """(n, q) of a chain given by its positive weights b1..bk, all >= 2."""
    if not weights or any(b < 2 for b in weights):
        raise InvalidParameters(f"chain weights must all be >= 2, got {list(weights)}")
    value = Fraction(weights[-1])
    for b in reversed(weights[:-1]):
        value = b - 1 / value
    return value.numerator, value.denominator


def inverse_residue(n: int, q: int) -> int:
    """q' with q·q' ≡ 1 (mod n), reduced into 0 < q' < n."""
    return pow(q, -1, n)


def hj_expand(n: int, q: int) -> WeightedDualGraph:
    """Resolution chain of the cyclic quotient singularity 1/n(1,q)."""
    return chain_graph(hj_continued_fraction(n, q))
