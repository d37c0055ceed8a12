from .container import HEADER, MAGIC, RECORD_LENGTH, ContainerHeader, read_container, write_container
from .packet import pack_symbols, packet_size, read_packet, section_size, unpack_symbols, write_packet

__all__ = [
    "HEADER",
    "MAGIC",
    "RECORD_LENGTH",
    "ContainerHeader",
    "pack_symbols",
    "packet_size",
    "read_container",
    "read_packet",
    "section_size",
    "unpack_symbols",
    "write_container",
    "write_packet",
]
