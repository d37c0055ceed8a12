__author__ = "desultory"
__version__ = "1.2.0"

from struct import Struct, error as StructError

from rlnc import FieldError, WireFormatError
from rlnc.codec import CodedPacket, GenerationParams
from rlnc.galois import SUPPORTED_WIDTHS, TABLE_MAX_WIDTH, FieldSpec, field_new

from .packet import packet_size, read_packet, write_packet

MAGIC = b"NCP1"
VERSION = 1
HEADER = Struct(">4sBBHIQ")  # magic, version, s, n, m, original_byte_len
RECORD_LENGTH = Struct(">I")


class ContainerHeader:
    """Generation metadata written once at the start of a container file."""

    def __init__(self, s: int, n: int, m: int, original_byte_len: int, magic=MAGIC, version=VERSION):
        self.magic = magic
        self.version = version
        self.s = s
        self.n = n
        self.m = m
        self.original_byte_len = original_byte_len
        self.validate()

    @classmethod
    def from_params(cls, params: GenerationParams, original_byte_len: int) -> "ContainerHeader":
        return cls(params.s, params.n, params.m, original_byte_len)

    def validate(self) -> None:
        if self.magic != MAGIC:
            raise WireFormatError("Bad container magic: %r" % self.magic)
        if self.version != VERSION:
            raise WireFormatError("Unsupported container version: %d" % self.version)
        if self.s not in SUPPORTED_WIDTHS:
            raise WireFormatError("Unsupported symbol width in container: %d" % self.s)
        if self.n < 1 or self.m < 1:
            raise WireFormatError("Container dimensions must be positive, got n=%d, m=%d" % (self.n, self.m))
        if self.m * self.s * self.n < 8 * self.original_byte_len:
            raise WireFormatError(
                "Container capacity of %d symbols per packet cannot hold %d bytes over %d packets"
                % (self.m, self.original_byte_len, self.n)
            )

    def params(self, table_mode=False, logger=None) -> GenerationParams:
        """Builds the generation parameters, table_mode is ignored above the table limit."""
        try:
            field = field_new(self.s, table_mode=table_mode and self.s <= TABLE_MAX_WIDTH, logger=logger)
        except FieldError as e:
            raise WireFormatError("Unable to build the container field: %s" % e) from e
        return GenerationParams(self.n, self.m, field)

    def pack(self) -> bytes:
        return HEADER.pack(self.magic, self.version, self.s, self.n, self.m, self.original_byte_len)

    @classmethod
    def unpack(cls, data: bytes) -> "ContainerHeader":
        try:
            magic, version, s, n, m, original_byte_len = HEADER.unpack(data[: HEADER.size])
        except StructError as e:
            raise WireFormatError("Truncated container header: %d bytes" % len(data)) from e
        return cls(s, n, m, original_byte_len, magic=magic, version=version)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContainerHeader):
            return NotImplemented
        return self.pack() == other.pack()

    def __repr__(self) -> str:
        return f"ContainerHeader(s={self.s}, n={self.n}, m={self.m}, original_byte_len={self.original_byte_len})"


def write_container(header: ContainerHeader, packets: list[CodedPacket], field: FieldSpec = None) -> bytes:
    """Serializes the header followed by length prefixed packet records."""
    params = GenerationParams(header.n, header.m, field or FieldSpec(header.s))
    out = [header.pack()]
    for packet in packets:
        record = write_packet(packet, params)
        out.append(RECORD_LENGTH.pack(len(record)))
        out.append(record)
    return b"".join(out)


def read_container(data: bytes, params: GenerationParams = None) -> tuple[ContainerHeader, list[CodedPacket]]:
    """
    Parses a container into its header and packets.
    Raises a WireFormatError on truncated or oversized records.
    """
    header = ContainerHeader.unpack(data)
    params = params or header.params()
    if (params.n, params.m, params.s) != (header.n, header.m, header.s):
        raise WireFormatError("Generation parameters do not match the container header: %r" % header)

    expected = packet_size(params)
    packets, offset = [], HEADER.size
    while offset < len(data):
        if offset + RECORD_LENGTH.size > len(data):
            raise WireFormatError("Truncated record length at offset: %d" % offset)
        (length,) = RECORD_LENGTH.unpack_from(data, offset)
        offset += RECORD_LENGTH.size
        if length != expected:
            raise WireFormatError("Record at offset %d is %d bytes, expected %d" % (offset, length, expected))
        if offset + length > len(data):
            raise WireFormatError("Truncated record at offset: %d" % offset)
        packets.append(read_packet(data[offset : offset + length], params))
        offset += length
    return header, packets
