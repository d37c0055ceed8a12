__author__ = "desultory"
__version__ = "1.0.2"

from time import perf_counter

import numpy as np
from zenlib.util import colorize

from rlnc.galois import TABLE_MAX_WIDTH, FieldSpec, field_new
from rlnc.galois.polynomial import format_polynomial

BENCH_OPS = ("add", "mul", "div", "inv")


def _process_op(self, op: str) -> None:
    if op not in BENCH_OPS:
        raise ValueError("Unknown benchmark op '%s', available: %s" % (op, ", ".join(BENCH_OPS)))
    self.data["op"] = op


def _process_iterations(self, iterations: int) -> None:
    if iterations < 1:
        raise ValueError("iterations must be at least 1, got: %r" % iterations)
    self.data["iterations"] = int(iterations)


def _process_row(self, row: int) -> None:
    """Rows are checked against the field size when the table is printed."""
    if row < -1:
        raise ValueError("row must be -1 or a field element, got: %r" % row)
    self.data["row"] = int(row)


def format_row(field: FieldSpec, row: int) -> str:
    width = len(str(field.mask))
    return f"{row:{width}d} | " + " ".join(f"{value:{width}d}" for value in field.mul_table[row].tolist())


def cmd_table(self) -> list[str]:
    """
    Prints the multiplication table of the configured field, or a single row when `row` is set.
    In GF(2^8), the inverse of a is the column holding 1 in row a.
    """
    s = self["field_bits"]
    if s > TABLE_MAX_WIDTH:
        raise ValueError("Multiplication tables are limited to %d bit symbols, got: %d" % (TABLE_MAX_WIDTH, s))

    field = field_new(s, table_mode=True, q=self["polynomial"] or None, logger=self.logger)
    if self["row"] != -1:
        field.check_symbol(self["row"])

    rows = range(field.order) if self["row"] == -1 else [self["row"]]
    self.logger.info("[%s] Printing %d table rows" % (field, len(rows)))
    return [f"{field} multiplication table, polynomial {format_polynomial(field.polynomial)}"] + [
        format_row(field, row) for row in rows
    ]


def bench_field(field: FieldSpec, op: str, a: list[int], b: list[int]) -> float:
    """Times op over the operand pairs, returning operations per second."""
    match op:
        case "add":
            func = field.add
        case "mul":
            func = field.mul
        case "div":
            func = field.div
        case "inv":
            func = lambda x, _y: field.inv(x)  # noqa: E731
        case _:
            raise ValueError("Unknown benchmark op: %s" % op)

    start = perf_counter()
    for x, y in zip(a, b):
        func(x, y)
    return len(a) / max(perf_counter() - start, 1e-9)


def cmd_bench(self) -> list[str]:
    """
    Times single symbol field operations, with tables and with on-the-fly arithmetic.
    Operands are nonzero so div and inv are always defined.
    Above the table limit, only on-the-fly arithmetic is timed.
    """
    s, op, iterations = self["field_bits"], self["op"], self["iterations"]
    rng = np.random.default_rng(self["seed"])
    a = rng.integers(1, 1 << s, size=iterations).tolist()
    b = rng.integers(1, 1 << s, size=iterations).tolist()

    modes = {"table": True, "shift": False} if s <= TABLE_MAX_WIDTH else {"shift": False}
    lines = []
    for label, table_mode in modes.items():
        field = field_new(s, table_mode=table_mode, q=self["polynomial"] or None, logger=self.logger)
        rate = bench_field(field, op, a, b)
        self.logger.info("[%s] %s %s: %s ops/sec" % (field, label, op, colorize(f"{rate:.0f}", "cyan")))
        lines.append(f"{label} {field} {op}: {rate:.0f} ops/sec")
    return lines
