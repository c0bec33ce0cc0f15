"""Exact polynomial arithmetic over F_p and F_{p^t}."""
from .field import FieldDesc, is_prime, prime_factors, prime_field
from .poly import (
    DEFAULT_DEGREE_CAP,
    NEG_INF,
    GFPoly,
    ModContext,
    add,
    compose,
    derivative,
    divrem,
    evaluate,
    ext_field,
    frobenius_x,
    gcd,
    monic,
    mul,
    neg,
    pow_mod,
    power,
    scale,
    square,
    sub,
    xgcd,
)
from .ext import ExtElement
from .irreducibles import default_modulus, monic_polys
from .textfmt import format_field, format_poly, format_terms, parse_field, parse_poly, parse_terms

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "NEG_INF",
    "ExtElement",
    "FieldDesc",
    "GFPoly",
    "ModContext",
    "add",
    "compose",
    "default_modulus",
    "derivative",
    "divrem",
    "evaluate",
    "ext_field",
    "format_field",
    "format_poly",
    "format_terms",
    "frobenius_x",
    "gcd",
    "is_prime",
    "monic",
    "monic_polys",
    "mul",
    "neg",
    "parse_field",
    "parse_poly",
    "parse_terms",
    "pow_mod",
    "power",
    "prime_factors",
    "prime_field",
    "scale",
    "square",
    "sub",
    "xgcd",
]
