from .field import BUILTIN_POLYNOMIALS, SUPPORTED_WIDTHS, SYMBOL_DTYPE, TABLE_MAX_WIDTH, FieldSpec, field_new
from .polynomial import is_irreducible, poly_mulmod


def gf_add(a: int, b: int) -> int:
    return a ^ b


def gf_sub(a: int, b: int) -> int:
    return a ^ b


def gf_mul(a: int, b: int, f: FieldSpec) -> int:
    return f.mul(f.check_symbol(a), f.check_symbol(b))


def gf_inv(a: int, f: FieldSpec) -> int:
    return f.inv(f.check_symbol(a))


def gf_div(a: int, b: int, f: FieldSpec) -> int:
    return f.div(f.check_symbol(a), f.check_symbol(b))


__all__ = [
    "BUILTIN_POLYNOMIALS",
    "SUPPORTED_WIDTHS",
    "SYMBOL_DTYPE",
    "TABLE_MAX_WIDTH",
    "FieldSpec",
    "field_new",
    "gf_add",
    "gf_sub",
    "gf_mul",
    "gf_inv",
    "gf_div",
    "is_irreducible",
    "poly_mulmod",
]
