__author__ = "desultory"
__version__ = "1.4.1"

from bisect import bisect
from enum import Enum

import numpy as np
from zenlib.logging import loggify
from zenlib.util import colorize

from rlnc import CodecError
from rlnc.galois import SYMBOL_DTYPE

from .packets import CodedPacket
from .symbols import GenerationParams, SourcePacket


class ReceiveStatus(Enum):
    INNOVATIVE = "innovative"
    REDUNDANT = "redundant"


@loggify
class DecoderState:
    """
    Receive side of a generation.

    Received rows (encoding_vector || payload) are kept in reduced row echelon form:
    every leading coefficient is 1, it is the only nonzero in its column,
    and leading positions move strictly right going down the rows.
    A row that eliminates to zero is redundant and leaves the state untouched.

    Receives must be serialized per instance.
    """

    def __init__(self, params: GenerationParams, check_rref=False, *args, **kwargs):
        self.params = params
        self.check_rref = check_rref
        self.rows = []
        self.pivots = []
        self.innovative_count = 0
        self.redundant_count = 0

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_complete(self) -> bool:
        return self.rank == self.n

    @property
    def matrix(self) -> np.ndarray:
        """The augmented matrix, one row per stored packet."""
        if not self.rows:
            return np.zeros((0, self.n + self.params.m), dtype=SYMBOL_DTYPE)
        return np.stack(self.rows)

    def coefficient_matrix(self) -> np.ndarray:
        """The encoding side of the augmented matrix."""
        return self.matrix[:, : self.n]

    def receive(self, packet: CodedPacket) -> ReceiveStatus:
        """Eliminates the packet against the stored rows, storing it if it raises the rank."""
        packet.check(self.params)
        field = self.params.field
        row = packet.row()

        for stored, pivot in zip(self.rows, self.pivots):
            if coefficient := int(row[pivot]):
                row ^= field.scale(stored, coefficient)

        leading = np.flatnonzero(row[: self.n])
        if not len(leading):
            if row[self.n :].any():
                self.logger.warning("Received packet reduced to a zero encoding vector with a nonzero payload")
            self.redundant_count += 1
            self.logger.debug(
                "[%d/%d] Ignoring redundant packet: %s"
                % (self.rank, self.n, colorize(packet.encoding_vector.tolist(), "yellow"))
            )
            return ReceiveStatus.REDUNDANT

        pivot = int(leading[0])
        row = field.divide(row, int(row[pivot]))

        # Back substitution keeps the new pivot column clear in the stored rows
        for index, stored in enumerate(self.rows):
            if coefficient := int(stored[pivot]):
                self.rows[index] = stored ^ field.scale(row, coefficient)

        position = bisect(self.pivots, pivot)
        self.rows.insert(position, row)
        self.pivots.insert(position, pivot)
        self.innovative_count += 1
        self.logger.debug("[%d/%d] Stored innovative packet with pivot: %d" % (self.rank, self.n, pivot))

        if self.check_rref and not self.is_rref():
            raise CodecError("Decoder matrix left reduced row echelon form after pivot: %d" % pivot)
        return ReceiveStatus.INNOVATIVE

    def is_rref(self) -> bool:
        """Checks the three reduced row echelon conditions on the encoding side."""
        if self.rank > self.n:
            return False
        coefficients = self.coefficient_matrix()
        previous = -1
        for index, row in enumerate(coefficients):
            leading = np.flatnonzero(row)
            if not len(leading) or leading[0] != self.pivots[index] or leading[0] <= previous:
                return False
            if row[leading[0]] != 1 or np.count_nonzero(coefficients[:, leading[0]]) != 1:
                return False
            previous = leading[0]
        return True

    def decoded_packets(self) -> dict[int, SourcePacket]:
        """Originals whose row has a single nonzero on the encoding side, keyed by index."""
        decoded = {}
        for row, pivot in zip(self.rows, self.pivots):
            if np.count_nonzero(row[: self.n]) == 1:
                decoded[pivot] = SourcePacket(row[self.n :].copy())
        return decoded

    def __str__(self) -> str:
        return f"DecoderState(rank={self.rank}/{self.n}, innovative={self.innovative_count}, redundant={self.redundant_count})"
