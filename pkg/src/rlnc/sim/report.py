__version__ = "1.0.3"


class SimReport:
    """
    Outcome of a simulation run.
    Per-slot series are lists indexed by slot - 1, keyed by destination.
    """

    def __init__(self, scenario: str, config, destinations: list[str], nodes: list[str]):
        self.scenario = scenario
        self.coding = config.coding
        self.n = config.n
        self.slots = config.slots
        self.seed = config.seed
        self.destinations = list(destinations)
        self.completion_slot = {destination: None for destination in destinations}
        self.delivered = {destination: [] for destination in destinations}
        self.new = {destination: [] for destination in destinations}
        self.rank = {destination: [] for destination in destinations}
        self.innovative = {destination: 0 for destination in destinations}
        self.redundant = {destination: 0 for destination in destinations}
        self.forwarded = {node: 0 for node in nodes}
        self.decoded = {destination: 0 for destination in destinations}
        self.verified = {destination: 0 for destination in destinations}
        self.unreachable = []

    def record_slot(self, slot: int, delivered: dict, new: dict, ranks: dict) -> None:
        for destination in self.destinations:
            self.delivered[destination].append(delivered[destination])
            self.new[destination].append(new[destination])
            self.rank[destination].append(ranks[destination])
            self.innovative[destination] += new[destination]
            self.redundant[destination] += delivered[destination] - new[destination]
            if self.completion_slot[destination] is None and ranks[destination] == self.n:
                self.completion_slot[destination] = slot

    def finish(self, destination: str, decoded: int, verified: int) -> None:
        self.decoded[destination] = decoded
        self.verified[destination] = verified

    @property
    def total_decoded(self) -> int:
        return sum(self.decoded.values())

    def is_complete(self, destination: str) -> bool:
        return self.completion_slot[destination] is not None

    def slot_records(self) -> list[dict]:
        """One record per slot, for plotting."""
        return [
            {
                "slot": index + 1,
                "delivered": {destination: self.delivered[destination][index] for destination in self.destinations},
                "new": {destination: self.new[destination][index] for destination in self.destinations},
                "rank": {destination: self.rank[destination][index] for destination in self.destinations},
            }
            for index in range(len(self.delivered[self.destinations[0]]) if self.destinations else 0)
        ]

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "coding": self.coding,
            "n": self.n,
            "slots": self.slots,
            "seed": self.seed,
            "completion_slot": self.completion_slot,
            "innovative": self.innovative,
            "redundant": self.redundant,
            "forwarded": self.forwarded,
            "decoded": self.decoded,
            "verified": self.verified,
            "unreachable": self.unreachable,
            "records": self.slot_records(),
        }

    def render(self) -> list[str]:
        """Line oriented text rendering."""
        lines = [
            "scenario=%s coding=%s n=%d slots=%d seed=%s"
            % (self.scenario, "on" if self.coding else "off", self.n, self.slots, self.seed)
        ]
        for destination in self.destinations:
            completion = self.completion_slot[destination]
            lines.append(
                "destination=%s completed=%s innovative=%d redundant=%d decoded=%d verified=%d"
                % (
                    destination,
                    completion if completion is not None else "no",
                    self.innovative[destination],
                    self.redundant[destination],
                    self.decoded[destination],
                    self.verified[destination],
                )
            )
        lines.append("forwarded " + " ".join(f"{node}={count}" for node, count in self.forwarded.items()))
        for destination in self.unreachable:
            lines.append("unreachable=%s" % destination)
        return lines

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()
