__version__ = "1.0.2"

import numpy as np

from rlnc import CodecError
from rlnc.galois import SYMBOL_DTYPE

from .symbols import GenerationParams


class CodedPacket:
    """
    An encoding vector with one weight per original packet,
    sent along with the information vector, the combined payload symbols.
    """

    def __init__(self, encoding_vector, payload):
        self.encoding_vector = np.asarray(encoding_vector, dtype=SYMBOL_DTYPE)
        self.payload = np.asarray(payload, dtype=SYMBOL_DTYPE)

    @property
    def n(self) -> int:
        return len(self.encoding_vector)

    @property
    def m(self) -> int:
        return len(self.payload)

    def row(self) -> np.ndarray:
        """The augmented row (encoding_vector || payload) as stored by the decoder."""
        return np.concatenate((self.encoding_vector, self.payload))

    def check(self, params: GenerationParams) -> None:
        """Raises a CodecError unless the packet matches the generation dimensions and field."""
        if self.n != params.n or self.m != params.m:
            raise CodecError(
                "Packet dimensions (n=%d, m=%d) do not match the generation (n=%d, m=%d)"
                % (self.n, self.m, params.n, params.m)
            )
        limit = params.field.mask
        if (self.n and self.encoding_vector.max() > limit) or (self.m and self.payload.max() > limit):
            raise CodecError("[%s] Packet holds symbols outside of the field" % params.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodedPacket):
            return NotImplemented
        return np.array_equal(self.encoding_vector, other.encoding_vector) and np.array_equal(
            self.payload, other.payload
        )

    def __repr__(self) -> str:
        return f"CodedPacket(encoding_vector={self.encoding_vector.tolist()}, payload={self.payload.tolist()})"


class LocalCoefficients:
    """The weights an intermediate node applies to the r packets it combines."""

    def __init__(self, w):
        self.w = np.asarray(w, dtype=SYMBOL_DTYPE)
        if len(self.w) < 1:
            raise CodecError("At least one local coefficient is required")
        if not self.w.any():
            raise CodecError("Local coefficients must not all be zero")

    @property
    def r(self) -> int:
        return len(self.w)

    def __repr__(self) -> str:
        return f"LocalCoefficients({self.w.tolist()})"
