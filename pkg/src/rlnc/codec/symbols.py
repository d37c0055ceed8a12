__author__ = "desultory"
__version__ = "1.1.0"

from math import ceil

import numpy as np

from rlnc import CodecError
from rlnc.galois import SYMBOL_DTYPE, FieldSpec


class GenerationParams:
    """
    Dimensions shared by every packet of a generation.
    n is the number of original packets, m the number of s bit symbols per packet.
    """

    def __init__(self, n: int, m: int, field: FieldSpec):
        if n < 1 or m < 1:
            raise CodecError("Generation dimensions must be positive, got n=%d, m=%d" % (n, m))
        self.n = n
        self.m = m
        self.field = field

    @classmethod
    def from_packet_size(cls, n: int, packet_size: int, field: FieldSpec) -> "GenerationParams":
        """Derives m from a packet size in bytes, rounding packet_size * 8 / s up."""
        return cls(n, max(1, ceil(packet_size * 8 / field.s)), field)

    @property
    def s(self) -> int:
        return self.field.s

    @property
    def packet_bytes(self) -> int:
        """Number of whole bytes a symbolized packet can hold."""
        return self.m * self.s // 8

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenerationParams):
            return NotImplemented
        return (self.n, self.m, self.field) == (other.n, other.m, other.field)

    def __repr__(self) -> str:
        return f"GenerationParams(n={self.n}, m={self.m}, field={self.field})"


class SourcePacket:
    """An original packet as m symbols, the last pad_count of which are zero padding."""

    def __init__(self, payload, pad_count: int = 0):
        self.payload = np.asarray(payload, dtype=SYMBOL_DTYPE)
        if not 0 <= pad_count <= len(self.payload):
            raise CodecError("Invalid pad count %d for %d symbols" % (pad_count, len(self.payload)))
        self.pad_count = pad_count

    def __eq__(self, other) -> bool:
        if not isinstance(other, SourcePacket):
            return NotImplemented
        return np.array_equal(self.payload, other.payload)

    def __repr__(self) -> str:
        return f"SourcePacket({self.payload.tolist()}, pad_count={self.pad_count})"


def _symbol_weights(s: int) -> np.ndarray:
    return (1 << np.arange(s - 1, -1, -1, dtype=np.uint64)).astype(SYMBOL_DTYPE)


def bits_to_symbols(bits: np.ndarray, s: int) -> np.ndarray:
    """Groups a bit array, MSB first, into s bit symbols. The length must be a multiple of s."""
    return (bits.reshape(-1, s).astype(SYMBOL_DTYPE) * _symbol_weights(s)).sum(axis=1, dtype=SYMBOL_DTYPE)


def symbols_to_bits(symbols, s: int) -> np.ndarray:
    """Expands symbols into their s bits each, MSB first."""
    symbols = np.asarray(symbols, dtype=SYMBOL_DTYPE)
    shifts = np.arange(s - 1, -1, -1, dtype=SYMBOL_DTYPE)
    return ((symbols[:, None] >> shifts) & 1).astype(np.uint8).reshape(-1)


def symbolize(data: bytes, params: GenerationParams) -> SourcePacket:
    """Splits bytes into m symbols of s bits, MSB first, zero padding the tail."""
    s, m = params.s, params.m
    bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
    if len(bits) > m * s:
        raise CodecError("Input of %d bits does not fit in %d symbols of %d bits" % (len(bits), m, s))

    used = ceil(len(bits) / s)
    padded = np.zeros(m * s, dtype=np.uint8)
    padded[: len(bits)] = bits
    return SourcePacket(bits_to_symbols(padded, s), pad_count=m - used)


def desymbolize(symbols, byte_length: int, s: int) -> bytes:
    """Packs symbols back into bytes and truncates to the original byte length."""
    data = np.packbits(symbols_to_bits(symbols, s)).tobytes()
    if byte_length > len(data):
        raise CodecError("Requested %d bytes from a %d byte payload" % (byte_length, len(data)))
    return data[:byte_length]


def split_payload(data: bytes, n: int, field: FieldSpec) -> tuple[GenerationParams, list[SourcePacket]]:
    """
    Splits data into n source packets of equal size, the last ones zero padded.
    Packets past the end of the data are all padding.
    """
    chunk_size = max(1, ceil(len(data) / n))
    params = GenerationParams.from_packet_size(n, chunk_size, field)
    packets = [symbolize(data[i * chunk_size : (i + 1) * chunk_size], params) for i in range(n)]
    return params, packets


def join_payload(payloads, params: GenerationParams, byte_length: int) -> bytes:
    """Reverses split_payload, payloads must be ordered by original index."""
    chunk_size = max(1, ceil(byte_length / params.n))
    data = b"".join(desymbolize(payload, chunk_size, params.s) for payload in payloads)
    return data[:byte_length]
