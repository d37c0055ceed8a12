__author__ = "desultory"
__version__ = "0.4.0"


class FieldError(ValueError):
    pass


class CodecError(ValueError):
    pass


class WireFormatError(ValueError):
    pass


class IntegrityError(WireFormatError):
    pass


class TopologyError(ValueError):
    pass


class RankShortfallError(RuntimeError):
    def __init__(self, rank: int, n: int, decoded: list[int] = None):
        self.rank = rank
        self.n = n
        self.decoded = decoded or []
        super().__init__("Decoder rank %d is short of the %d originals, decodable: %s" % (rank, n, self.decoded))


from .netcode_runner import NetcodeRunner  # noqa: E402

__all__ = ["NetcodeRunner"]
