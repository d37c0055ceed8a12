__author__ = "desultory"
__version__ = "1.3.0"

from pathlib import Path
from tomllib import load

import numpy as np
from zenlib.logging import loggify
from zenlib.util import colorize

from rlnc import FieldError

from .polynomial import format_polynomial, full_polynomial, is_irreducible

SUPPORTED_WIDTHS = (1, 2, 4, 8, 16)
SYMBOL_DTYPE = np.uint32  # one 32 bit slot per symbol, enough for products of s <= 16 during reduction


def _load_polynomials() -> tuple[dict[int, int], int]:
    """Reads the built-in reduced polynomials and the table width limit."""
    with open(Path(__file__).parent / "polynomials.toml", "rb") as polynomial_file:
        data = load(polynomial_file)
    polynomials = {int(width): value for width, value in data["reduced_polynomials"].items()}
    return polynomials, data["tables"]["max_width"]


BUILTIN_POLYNOMIALS, TABLE_MAX_WIDTH = _load_polynomials()


@loggify
class FieldSpec:
    """
    The field GF(2^s).

    Symbols are integers in [0, 2^s - 1], addition is XOR and multiplication is the
    polynomial product reduced by the irreducible polynomial. `q` is that polynomial
    with the degree-s term removed, as used by the shift-XOR multiplication.

    When table_mode is set, the full multiplication and inverse tables are built and
    consulted instead of on-the-fly arithmetic. Tables are limited to s <= 8.

    Instances are never mutated after __init__, the tables are read-only arrays.
    """

    def __init__(self, s=8, table_mode=False, q=None, *args, **kwargs):
        if s not in SUPPORTED_WIDTHS:
            raise FieldError("Unsupported symbol width %r, allowed widths: %s" % (s, ", ".join(map(str, SUPPORTED_WIDTHS))))
        self.s = s
        self.order = 1 << s
        self.mask = self.order - 1

        if q is None:
            q = BUILTIN_POLYNOMIALS[s]
        elif not 0 <= q < self.order:
            raise FieldError("[%s] Reduced polynomial must fit in %d bits: %s" % (self, s, bin(q)))
        self.q = q

        if not is_irreducible(self.polynomial):
            raise FieldError("[%s] Polynomial is not irreducible: %s" % (self, format_polynomial(self.polynomial)))
        self.logger.debug("[%s] Using polynomial: %s" % (self, colorize(format_polynomial(self.polynomial), "cyan")))

        self._mul_table = None
        self._inv_table = None
        if table_mode:
            if s > TABLE_MAX_WIDTH:
                raise FieldError("[%s] Table mode is only available up to GF(2^%d)" % (self, TABLE_MAX_WIDTH))
            self._build_tables()

    @property
    def polynomial(self) -> int:
        """The full irreducible polynomial, including the degree-s term."""
        return full_polynomial(self.s, self.q)

    @property
    def table_mode(self) -> bool:
        return self._mul_table is not None

    @property
    def mul_table(self):
        return self._mul_table

    @property
    def inv_table(self):
        return self._inv_table

    def _build_tables(self) -> None:
        """
        Builds the product table with vectorized shift-XOR multiplication,
        then fills the inverse table by searching each row for the column holding 1.
        """
        elements = np.arange(self.order, dtype=SYMBOL_DTYPE)
        mul_table = self._shift_multiply(elements[:, None], elements[None, :])

        inv_table = np.zeros(self.order, dtype=SYMBOL_DTYPE)
        for a in range(1, self.order):
            inv_table[a] = np.flatnonzero(mul_table[a] == 1)[0]

        self._verify_tables(mul_table, inv_table)
        mul_table.flags.writeable = False
        inv_table.flags.writeable = False
        self._mul_table, self._inv_table = mul_table, inv_table
        self.logger.debug("[%s] Built multiplication table: %s bytes" % (self, colorize(mul_table.nbytes, "cyan")))

    def _verify_tables(self, mul_table, inv_table) -> None:
        """Checks the tables against scalar on-the-fly arithmetic."""
        samples = sorted({b for b in (0, 1, 2, self.order >> 1, self.mask) if b < self.order})
        for a in range(self.order):
            for b in samples:
                if mul_table[a, b] != self._shift_mul(a, b):
                    raise FieldError("[%s] Table mismatch at (%d, %d)" % (self, a, b))
            if a and self._itoh_tsujii_inverse(a) != inv_table[a]:
                raise FieldError("[%s] Inverse table mismatch for: %d" % (self, a))
        if not np.array_equal(mul_table, mul_table.T):
            raise FieldError("[%s] Multiplication table is not symmetric" % self)

    def check_symbol(self, value: int) -> int:
        """Returns the value if it is a valid symbol of this field."""
        if not 0 <= value <= self.mask:
            raise FieldError("[%s] Symbol out of range: %r" % (self, value))
        return value

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        """Subtraction is identical to addition in characteristic 2."""
        return a ^ b

    def _shift_mul(self, a: int, b: int) -> int:
        """Shift-XOR multiplication, the carry is taken from the top bit of a on every round."""
        product = 0
        for _ in range(self.s):
            if b & 1:
                product ^= a
            carry = a >> (self.s - 1) & 1
            a = (a << 1) & self.mask
            if carry:
                a ^= self.q
            b >>= 1
        return product

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        return self._shift_mul(a, b)

    def _itoh_tsujii_inverse(self, a: int) -> int:
        """
        Computes a^(2^s - 2) with the Itoh-Tsujii addition chain.
        c holds a^(2^k - 1) while the bits of s - 1 are consumed from the top down.
        """
        if self.s == 1:
            return 1

        chain_bits = bin(self.s - 1)[3:]  # h_(r-1) ... h_0, the leading 1 is implied
        c, k = a, 1
        for bit in chain_bits:
            b = c
            for _ in range(k):
                b = self._shift_mul(b, b)
            c = self._shift_mul(c, b)
            k *= 2
            if bit == "1":
                c = self._shift_mul(c, c)
                c = self._shift_mul(c, a)
                k += 1
        return self._shift_mul(c, c)

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("zero is not invertible")
        if self._inv_table is not None:
            return int(self._inv_table[a])
        return self._itoh_tsujii_inverse(a)

    def div(self, a: int, b: int) -> int:
        if not b:
            raise ZeroDivisionError("[%s] Division by zero: %d / 0" % (self, a))
        return self.mul(a, self.inv(b))

    def _shift_multiply(self, a, b) -> np.ndarray:
        """Elementwise shift-XOR multiplication over broadcast arrays."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=SYMBOL_DTYPE), np.asarray(b, dtype=SYMBOL_DTYPE))
        a, b = a.copy(), b.copy()
        product = np.zeros_like(a)
        for _ in range(self.s):
            product ^= np.where(b & 1, a, 0).astype(SYMBOL_DTYPE)
            carry = a >> (self.s - 1) & 1
            a = (a << 1) & self.mask
            a ^= carry * SYMBOL_DTYPE(self.q)
            b >>= 1
        return product

    def multiply(self, a, b) -> np.ndarray:
        """Elementwise product of two symbol arrays (or an array and a scalar)."""
        if self._mul_table is not None:
            return self._mul_table[np.asarray(a, dtype=SYMBOL_DTYPE), np.asarray(b, dtype=SYMBOL_DTYPE)]
        return self._shift_multiply(a, b)

    def scale(self, vector: np.ndarray, c: int) -> np.ndarray:
        """Multiplies every symbol of the vector by c."""
        match c:
            case 0:
                return np.zeros_like(vector, dtype=SYMBOL_DTYPE)
            case 1:
                return np.array(vector, dtype=SYMBOL_DTYPE)
        if self._mul_table is not None:
            return self._mul_table[c][vector]
        return self._shift_multiply(vector, c)

    def divide(self, vector: np.ndarray, c: int) -> np.ndarray:
        """Divides every symbol of the vector by c."""
        return self.scale(vector, self.inv(c))

    def combine(self, coefficients, rows) -> np.ndarray:
        """Returns the linear combination sum(coefficients[i] * rows[i])."""
        rows = np.asarray(rows, dtype=SYMBOL_DTYPE)
        if len(coefficients) != len(rows):
            raise FieldError("[%s] Got %d coefficients for %d rows" % (self, len(coefficients), len(rows)))
        result = np.zeros(rows.shape[1:], dtype=SYMBOL_DTYPE)
        for coefficient, row in zip(coefficients, rows):
            if coefficient:
                result ^= self.scale(row, int(coefficient))
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.s == other.s and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.s, self.q))

    def __str__(self) -> str:
        return f"GF(2^{self.s})"


def field_new(s: int = 8, table_mode: bool = False, q: int = None, logger=None) -> FieldSpec:
    """Creates GF(2^s) with the built-in polynomial for s, unless q is passed."""
    if logger:
        return FieldSpec(s, table_mode=table_mode, q=q, logger=logger)
    return FieldSpec(s, table_mode=table_mode, q=q)
