"""Exact arithmetic for polynomial integro-differential operators on ``Q[x]``."""

from .act import act, format_qx, monomial
from .b1 import (B1Element, OreResult, OreWindowExceeded, b1_mul, b1_normalize,
                 ore_multipliers, to_B1)
from .element import I1Element, graded_component, in_F, in_KH_plus_F, mul, star
from .fredholm import (FredholmData, PreconditionError, fredholm, kernel_dim_at, m_factor,
                       s_membership)
from .parser import ExprSyntaxError, normalize, parse, parse_element
from .poly import PolyH

__all__ = [
    "act", "format_qx", "monomial",
    "B1Element", "OreResult", "OreWindowExceeded", "b1_mul", "b1_normalize", "ore_multipliers", "to_B1",
    "I1Element", "graded_component", "in_F", "in_KH_plus_F", "mul", "star",
    "FredholmData", "PreconditionError", "fredholm", "kernel_dim_at", "m_factor", "s_membership",
    "ExprSyntaxError", "normalize", "parse", "parse_element", "PolyH",
]
