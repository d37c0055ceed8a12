"""
Coded packet layout: the encoding vector section followed by the payload section.
Each section is a dense MSB-first bit pack of s bit symbols, zero padded to a byte boundary.
"""

__version__ = "1.1.0"

from math import ceil

import numpy as np

from rlnc import IntegrityError, WireFormatError
from rlnc.codec import CodedPacket, GenerationParams
from rlnc.codec.symbols import bits_to_symbols, symbols_to_bits


def section_size(count: int, s: int) -> int:
    """Bytes used by count symbols of s bits."""
    return ceil(count * s / 8)


def packet_size(params: GenerationParams) -> int:
    return section_size(params.n, params.s) + section_size(params.m, params.s)


def pack_symbols(symbols, s: int) -> bytes:
    return np.packbits(symbols_to_bits(symbols, s)).tobytes()


def unpack_symbols(data: bytes, count: int, s: int) -> np.ndarray:
    """Reads count symbols from a section, the padding bits after them must be zero."""
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    if bits[count * s :].any():
        raise IntegrityError("Nonzero padding bits after %d symbols of %d bits" % (count, s))
    return bits_to_symbols(bits[: count * s], s)


def write_packet(p: CodedPacket, params: GenerationParams) -> bytes:
    p.check(params)
    return pack_symbols(p.encoding_vector, params.s) + pack_symbols(p.payload, params.s)


def read_packet(data: bytes, params: GenerationParams) -> CodedPacket:
    vector_size = section_size(params.n, params.s)
    expected = packet_size(params)
    if len(data) != expected:
        raise WireFormatError("Packet is %d bytes, expected %d for n=%d, m=%d, s=%d" % (len(data), expected, params.n, params.m, params.s))
    data = bytes(data)
    return CodedPacket(
        unpack_symbols(data[:vector_size], params.n, params.s),
        unpack_symbols(data[vector_size:], params.m, params.s),
    )
