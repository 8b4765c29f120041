import math
from collections.abc import Iterable
from fractions import Fraction
from typing import Annotated

from pydantic import PlainSerializer, PlainValidator


Rat = Fraction
Number = int | Fraction


def as_rat(value: Number | str) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected: every quantity in surfcalc is exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact value required, got {type(value).__name__}")
    if isinstance(value, str):
        return parse_rat(value)
    return Fraction(value)


def parse_rat(text: str) -> Fraction:
    stripped = text.strip()
    if not stripped or any(ch in stripped for ch in ".eE"):
        raise ValueError(f"not an exact rational: '{text}'")
    return Fraction(stripped)


def format_rat(value: Number) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integral(value: Number) -> bool:
    return Fraction(value).denominator == 1


def to_int(value: Number) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise ValueError(f"{format_rat(value)} is not an integer")
    return value.numerator


def lcm_of_denominators(values: Iterable[Number]) -> int:
    return math.lcm(1, *(Fraction(v).denominator for v in values))


def _validate_rat(value: object) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, int | Fraction | str):
        raise ValueError(f"exact rational required, got {type(value).__name__}")
    return as_rat(value)


RatField = Annotated[
    Fraction,
    PlainValidator(_validate_rat),
    PlainSerializer(format_rat, return_type=str),
]
"""Fraction field for pydantic reports, serialized as "p/q" (or "p")."""
