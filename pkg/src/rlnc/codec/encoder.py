__author__ = "desultory"
__version__ = "1.2.0"

from math import prod

import numpy as np
from zenlib.logging import loggify

from rlnc import CodecError
from rlnc.galois import SYMBOL_DTYPE, FieldSpec

from .packets import CodedPacket
from .symbols import GenerationParams, SourcePacket


def random_coefficients(n: int, f: FieldSpec, rng: np.random.Generator, reject_zero=True) -> np.ndarray:
    """
    Draws n coefficients uniformly over the field.
    All-zero vectors carry no information, they are redrawn unless reject_zero is disabled.
    """
    if n < 1:
        raise CodecError("Cannot draw an empty coefficient vector")
    while True:
        coefficients = rng.integers(0, f.order, size=n, dtype=SYMBOL_DTYPE)
        if coefficients.any() or not reject_zero:
            return coefficients


def encode(originals: list[SourcePacket], coeffs, f: FieldSpec) -> CodedPacket:
    """Combines the original payloads symbol by symbol, weighted by coeffs."""
    coeffs = np.asarray(coeffs, dtype=SYMBOL_DTYPE)
    if len(coeffs) != len(originals):
        raise CodecError("Got %d coefficients for %d original packets" % (len(coeffs), len(originals)))
    if not coeffs.any():
        raise CodecError("Refusing to encode with an all-zero coefficient vector")
    if len({len(original.payload) for original in originals}) != 1:
        raise CodecError("Original packets differ in length")

    payload = f.combine(coeffs, [original.payload for original in originals])
    return CodedPacket(coeffs.copy(), payload)


def full_rank_probability(n: int, s: int, reject_zero=False) -> float:
    """
    Probability that n random coefficient vectors over GF(2^s) are independent.
    With reject_zero, vectors are drawn from the q^n - 1 nonzero vectors.
    """
    q = 2**s
    total = q**n - 1 if reject_zero else q**n
    return prod((q**n - q**i) / total for i in range(n))


@loggify
class Encoder:
    """Source side of a generation, emits random linear combinations of its packets."""

    def __init__(self, originals: list[SourcePacket], params: GenerationParams, seed=None, rng=None, reject_zero=True, *args, **kwargs):
        if len(originals) != params.n:
            raise CodecError("Expected %d original packets, got %d" % (params.n, len(originals)))
        for index, original in enumerate(originals):
            if len(original.payload) != params.m:
                raise CodecError("[%d] Original packet has %d symbols, expected %d" % (index, len(original.payload), params.m))
        self.originals = originals
        self.params = params
        self.rng = rng if rng is not None else np.random.default_rng(seed)
        self.reject_zero = reject_zero
        self.emitted = 0

    def coded_packet(self, coeffs=None) -> CodedPacket:
        """Emits a coded packet, drawing fresh coefficients unless they are passed."""
        if coeffs is None:
            coeffs = random_coefficients(self.params.n, self.params.field, self.rng, reject_zero=self.reject_zero)
        if not np.asarray(coeffs).any():  # Only reachable with reject_zero disabled
            packet = CodedPacket(np.zeros(self.params.n, dtype=SYMBOL_DTYPE), np.zeros(self.params.m, dtype=SYMBOL_DTYPE))
        else:
            packet = encode(self.originals, coeffs, self.params.field)
        self.emitted += 1
        self.logger.log(5, "[%d] Emitting coded packet: %s" % (self.emitted, packet.encoding_vector.tolist()))
        return packet

    def coded_packets(self, count: int) -> list[CodedPacket]:
        return [self.coded_packet() for _ in range(count)]
