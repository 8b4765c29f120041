from surfcalc.exact.matrix import (
    IntMatrix,
    determinant,
    dot,
    is_negative_definite,
    mat_mul,
    mat_vec,
)
from surfcalc.exact.rational import (
    Number,
    Rat,
    RatField,
    as_rat,
    format_rat,
    is_integral,
    lcm_of_denominators,
    parse_rat,
    to_int,
)
from surfcalc.exact.smith import Cokernel, SmithDecomposition, cokernel, smith_normal_form
from surfcalc.exact.solve import inverse, solve

__all__ = [
    "Cokernel",
    "IntMatrix",
    "Number",
    "Rat",
    "RatField",
    "SmithDecomposition",
    "as_rat",
    "cokernel",
    "determinant",
    "dot",
    "format_rat",
    "inverse",
    "is_integral",
    "is_negative_definite",
    "lcm_of_denominators",
    "mat_mul",
    "mat_vec",
    "parse_rat",
    "smith_normal_form",
    "solve",
    "to_int",
]
