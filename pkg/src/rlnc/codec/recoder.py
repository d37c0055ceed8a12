__version__ = "1.0.1"

import numpy as np

from rlnc import CodecError
from rlnc.galois import FieldSpec

from .packets import CodedPacket, LocalCoefficients


def recode(received: list[CodedPacket], w: LocalCoefficients, f: FieldSpec) -> CodedPacket:
    """
    Combines already coded packets without decoding them.
    The payload is sum(w_i * Y_i), and the encoding vector is W x F
    where row i of F is the encoding vector of received[i].
    """
    if not isinstance(w, LocalCoefficients):
        w = LocalCoefficients(w)
    if not received:
        raise CodecError("Nothing to recode")
    if w.r != len(received):
        raise CodecError("Got %d local coefficients for %d packets" % (w.r, len(received)))
    if len({(packet.n, packet.m) for packet in received}) != 1:
        raise CodecError("Received packets differ in dimensions")

    encoding_vector = f.combine(w.w, np.stack([packet.encoding_vector for packet in received]))
    payload = f.combine(w.w, np.stack([packet.payload for packet in received]))
    return CodedPacket(encoding_vector, payload)
