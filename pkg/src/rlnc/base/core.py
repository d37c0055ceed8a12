__author__ = "desultory"
__version__ = "1.0.1"

from pathlib import Path

from zenlib.util import colorize

from rlnc.galois import SUPPORTED_WIDTHS, TABLE_MAX_WIDTH, FieldSpec, field_new

MAX_PACKETS = 0xFFFF  # n is stored as 16 bits in container headers


def get_field(self, s: int = None) -> FieldSpec:
    """
    Builds the configured field, for field_bits unless s is passed.
    Table mode is dropped with a warning above the table limit.
    """
    s = s or self["field_bits"]
    table_mode = self["table_mode"]
    if table_mode and s > TABLE_MAX_WIDTH:
        self.logger.warning(
            "Table mode is only available up to %d bit symbols, using on-the-fly arithmetic for: %s"
            % (TABLE_MAX_WIDTH, colorize(f"GF(2^{s})", "red"))
        )
        table_mode = False
    return field_new(s, table_mode=table_mode, q=self["polynomial"] or None, logger=self.logger)


def get_input(self) -> Path:
    """Returns the configured input path, raising a ValueError if it is unset."""
    if not self["input"]:
        raise ValueError("No input file specified")
    return self["input"]


def _process_field_bits(self, field_bits: int) -> None:
    """Checks that the symbol width is supported."""
    if field_bits not in SUPPORTED_WIDTHS:
        raise ValueError(
            "Unsupported field_bits %r, allowed values: %s" % (field_bits, ", ".join(map(str, SUPPORTED_WIDTHS)))
        )
    self.data["field_bits"] = int(field_bits)


def _process_packets(self, packets: int) -> None:
    if not 1 <= packets <= MAX_PACKETS:
        raise ValueError("packets must be within [1, %d], got: %r" % (MAX_PACKETS, packets))
    self.data["packets"] = int(packets)


def _process_redundancy(self, redundancy: int) -> None:
    if redundancy < 1:
        raise ValueError("redundancy must be at least 1, got: %r" % redundancy)
    self.data["redundancy"] = int(redundancy)


def _process_seed(self, seed: int) -> None:
    if seed < 0:
        raise ValueError("seed must not be negative, got: %r" % seed)
    self.data["seed"] = int(seed)


def _process_coding(self, coding) -> None:
    """Accepts booleans and on/off strings."""
    if isinstance(coding, str):
        match coding.lower():
            case "on" | "true":
                coding = True
            case "off" | "false":
                coding = False
            case _:
                raise ValueError("coding must be 'on' or 'off', got: %r" % coding)
    self.logger.debug("Setting network coding: %s" % colorize("on" if coding else "off", "blue"))
    self.data["coding"] = bool(coding)


def _process_polynomial(self, polynomial: int) -> None:
    """
    Sets a custom reduced polynomial.
    Irreducibility is checked when the field is built, as it depends on field_bits.
    """
    if not 0 <= polynomial < 1 << max(SUPPORTED_WIDTHS):
        raise ValueError("polynomial must fit in 16 bits, got: %r" % polynomial)
    if polynomial:
        self.logger.info("Using custom reduced polynomial: %s" % colorize(bin(polynomial), "cyan"))
    self.data["polynomial"] = int(polynomial)


def _process_input(self, input_file) -> None:
    self.data["input"] = Path(input_file)


def _process_output(self, output) -> None:
    self.data["output"] = Path(output)
