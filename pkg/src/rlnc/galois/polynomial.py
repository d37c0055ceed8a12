"""
Polynomials over GF(2), stored as integers where bit i is the coefficient of x^i.

These are slow, obviously-correct helpers. FieldSpec uses them to vet polynomials,
and the test suite uses them as an oracle for the shift-XOR multiplication.
"""

__version__ = "1.0.1"


def poly_degree(poly: int) -> int:
    """Returns the degree of a polynomial, -1 for the zero polynomial."""
    return poly.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two polynomials."""
    product = 0
    while b:
        if b & 1:
            product ^= a
        a <<= 1
        b >>= 1
    return product


def poly_mod(a: int, modulus: int) -> int:
    """Remainder of a divided by modulus, using XOR in place of subtraction."""
    if not modulus:
        raise ZeroDivisionError("Polynomial division by zero")
    modulus_degree = poly_degree(modulus)
    while (degree := poly_degree(a)) >= modulus_degree:
        a ^= modulus << (degree - modulus_degree)
    return a


def poly_mulmod(a: int, b: int, modulus: int) -> int:
    """Multiplies two polynomials, then reduces the result by the modulus."""
    return poly_mod(poly_mul(a, b), modulus)


def full_polynomial(s: int, q: int) -> int:
    """Restores the degree-s term of a reduced polynomial."""
    return (1 << s) | q


def is_irreducible(poly: int) -> bool:
    """
    Checks irreducibility over GF(2) by trial division.
    Every polynomial of degree 1 up to half the degree of poly is tried as a divisor.
    """
    degree = poly_degree(poly)
    if degree < 1:
        return False

    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


def format_polynomial(poly: int, variable="x") -> str:
    """Renders a polynomial as a sum of powers, highest term first."""
    if not poly:
        return "0"

    terms = []
    for power in range(poly_degree(poly), -1, -1):
        if not poly >> power & 1:
            continue
        match power:
            case 0:
                terms.append("1")
            case 1:
                terms.append(variable)
            case _:
                terms.append(f"{variable}^{power}")
    return " + ".join(terms)
