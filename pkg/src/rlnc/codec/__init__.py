from .decoder import DecoderState, ReceiveStatus
from .encoder import Encoder, encode, full_rank_probability, random_coefficients
from .packets import CodedPacket, LocalCoefficients
from .recoder import recode
from .symbols import GenerationParams, SourcePacket, desymbolize, join_payload, split_payload, symbolize


def decoder_receive(state: DecoderState, p: CodedPacket) -> ReceiveStatus:
    return state.receive(p)


def decoded_packets(state: DecoderState) -> dict[int, SourcePacket]:
    return state.decoded_packets()


def decoder_rank(state: DecoderState) -> int:
    return state.rank


def decoder_is_complete(state: DecoderState) -> bool:
    return state.is_complete()


__all__ = [
    "CodedPacket",
    "DecoderState",
    "Encoder",
    "GenerationParams",
    "LocalCoefficients",
    "ReceiveStatus",
    "SourcePacket",
    "decoded_packets",
    "decoder_is_complete",
    "decoder_rank",
    "decoder_receive",
    "desymbolize",
    "encode",
    "full_rank_probability",
    "join_payload",
    "random_coefficients",
    "recode",
    "split_payload",
    "symbolize",
]
