"""Exact sparse polynomial arithmetic, monomial orders and the text front end."""

from .field import GF, QQ, Field, PrimeField, RationalField
from .order import MonomialOrder, Ordering, compare
from .parse import ParseError, parse_matrix, parse_poly, parse_poly_list, parse_ring, parse_vector
from .polynomial import FreeElement, PolyMatrix, Polynomial
from .ring import Ring, RingError


def poly_arith(op: str, a: Polynomial, b):
    """Dispatch ``add``/``sub``/``mul``/``pow``; results are free-ring arithmetic (never reduced)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "GF", "QQ", "Field", "PrimeField", "RationalField", "MonomialOrder", "Ordering", "compare",
    "ParseError", "parse_matrix", "parse_poly", "parse_poly_list", "parse_ring", "parse_vector",
    "FreeElement", "PolyMatrix", "Polynomial", "Ring", "RingError", "poly_arith",
]
