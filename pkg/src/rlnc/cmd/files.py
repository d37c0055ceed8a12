__author__ = "desultory"
__version__ = "1.1.0"

from pathlib import Path

from zenlib.util import colorize

from rlnc import RankShortfallError
from rlnc.base.core import get_field, get_input
from rlnc.codec import DecoderState, Encoder, GenerationParams, ReceiveStatus, join_payload, split_payload
from rlnc.wire import ContainerHeader, read_container, write_container

CONTAINER_SUFFIX = ".ncp"
DECODED_SUFFIX = ".dec"


def cmd_encode(self) -> Path:
    """
    Splits the input file into `packets` source packets, zero padding the last,
    then writes `redundancy` coded packets to a container.
    The container is written next to the input with the .ncp suffix unless an output is set.
    """
    input_file = get_input(self)
    data = self._read(input_file)
    if not data:
        raise ValueError("Input file is empty: %s" % input_file)

    field = get_field(self)
    params, originals = split_payload(data, self["packets"], field)
    self.logger.info("[%s] Generation parameters: %s" % (input_file.name, colorize(params, "cyan")))
    if self["redundancy"] < params.n:
        self.logger.warning(
            "Redundancy %d is below the generation size %d, the container cannot be fully decoded"
            % (self["redundancy"], params.n)
        )

    encoder = Encoder(originals, params, seed=self["seed"], logger=self.logger)
    packets = encoder.coded_packets(self["redundancy"])
    header = ContainerHeader.from_params(params, len(data))

    out_path = self._get_out_path(input_file.with_name(input_file.name + CONTAINER_SUFFIX))
    return self._write(out_path, write_container(header, packets, field))


def cmd_decode(self) -> Path:
    """
    Feeds every packet of the input container to a decoder.
    When the rank reaches n, the de-padded original is written, by default next to the
    container with the .ncp suffix replaced by .dec.
    On a shortfall, raises a RankShortfallError listing the originals which could be decoded.
    """
    input_file = get_input(self)
    data = self._read(input_file)
    header = ContainerHeader.unpack(data)
    params = GenerationParams(header.n, header.m, get_field(self, header.s))
    header, packets = read_container(data, params)
    self.logger.info("[%s] Read %d packets: %s" % (input_file.name, len(packets), colorize(header, "cyan")))

    decoder = DecoderState(params, logger=self.logger)
    for index, packet in enumerate(packets):
        if decoder.receive(packet) is ReceiveStatus.REDUNDANT:
            self.logger.debug("[%d] Discarding redundant packet: %s" % (index, colorize(packet.encoding_vector.tolist(), "yellow")))
    self.logger.info(
        "[%s] Rank %d of %d, innovative: %d, redundant: %d"
        % (input_file.name, decoder.rank, params.n, decoder.innovative_count, decoder.redundant_count)
    )

    decoded = decoder.decoded_packets()
    if not decoder.is_complete():
        self.logger.warning("Partially decoded originals: %s" % colorize(sorted(decoded), "yellow"))
        raise RankShortfallError(decoder.rank, params.n, sorted(decoded))

    original = join_payload([decoded[index].payload for index in range(params.n)], params, header.original_byte_len)
    out_path = self._get_out_path(input_file.with_name(input_file.name.removesuffix(CONTAINER_SUFFIX) + DECODED_SUFFIX))
    return self._write(out_path, original)
