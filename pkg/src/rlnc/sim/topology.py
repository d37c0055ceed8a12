__author__ = "desultory"
__version__ = "1.1.2"

from collections import deque
from pathlib import Path
from tomllib import load

from zenlib.logging import loggify
from zenlib.util import colorize

from rlnc import TopologyError

ROLES = ("source", "intermediate", "destination")


class Link:
    """A directed link, moving up to capacity packets per slot, each lost with probability loss."""

    def __init__(self, source: str, target: str, capacity: int = 1, loss: float = 0.0):
        self.source = source
        self.target = target
        self.capacity = capacity
        self.loss = loss

    def __repr__(self) -> str:
        return f"Link({self.source} -> {self.target}, capacity={self.capacity}, loss={self.loss})"


@loggify
class Topology:
    """Named nodes with roles, connected by directed links. Node order is preserved."""

    def __init__(self, name="custom", nodes: dict = None, links: list = None, *args, **kwargs):
        self.name = name
        self.nodes = {}
        self.links = []
        for node, role in (nodes or {}).items():
            self.add_node(node, role)
        for link in links or []:
            if isinstance(link, Link):
                self.links.append(link)
            else:
                self.add_link(**link)

    @classmethod
    def from_dict(cls, name: str, data: dict, logger=None) -> "Topology":
        """Builds a topology from a parsed TOML table with 'nodes' and 'links'."""
        try:
            kwargs = {"nodes": data["nodes"], "links": data["links"]}
        except KeyError as e:
            raise TopologyError("[%s] Topology definition is missing: %s" % (name, e)) from e
        if logger:
            kwargs["logger"] = logger
        return cls(name, **kwargs)

    def add_node(self, name: str, role: str) -> None:
        if role not in ROLES:
            raise TopologyError("[%s] Invalid role for node '%s': %s" % (self.name, name, role))
        if name in self.nodes:
            raise TopologyError("[%s] Node already defined: %s" % (self.name, name))
        self.nodes[name] = role

    def add_link(self, source: str, target: str, capacity: int = 1, loss: float = 0.0) -> None:
        self.links.append(Link(source, target, capacity, loss))

    def _with_role(self, role: str) -> list[str]:
        return [node for node, node_role in self.nodes.items() if node_role == role]

    @property
    def sources(self) -> list[str]:
        return self._with_role("source")

    @property
    def intermediates(self) -> list[str]:
        return self._with_role("intermediate")

    @property
    def destinations(self) -> list[str]:
        return self._with_role("destination")

    def out_links(self, node: str) -> list[Link]:
        return [link for link in self.links if link.source == node]

    def in_links(self, node: str) -> list[Link]:
        return [link for link in self.links if link.target == node]

    def reachable_from(self, node: str) -> set[str]:
        """Nodes reachable from node over directed links, not counting node itself."""
        seen, queue = set(), deque([node])
        while queue:
            for link in self.out_links(queue.popleft()):
                if link.target not in seen:
                    seen.add(link.target)
                    queue.append(link.target)
        seen.discard(node)
        return seen

    def unreachable_destinations(self) -> list[str]:
        reachable = set().union(*(self.reachable_from(source) for source in self.sources))
        return [destination for destination in self.destinations if destination not in reachable]

    def validate(self, check_reachability=True) -> None:
        """Checks link endpoints and parameters, raising a TopologyError on the first problem."""
        if not self.sources:
            raise TopologyError("[%s] Topology has no source" % self.name)
        if not self.destinations:
            raise TopologyError("[%s] Topology has no destination" % self.name)

        for link in self.links:
            for endpoint in (link.source, link.target):
                if endpoint not in self.nodes:
                    raise TopologyError("[%s] Link refers to an undefined node: %s" % (self.name, endpoint))
            if link.source == link.target:
                raise TopologyError("[%s] Self loop on node: %s" % (self.name, link.source))
            if self.nodes[link.source] == "destination":
                raise TopologyError("[%s] Destinations do not transmit: %r" % (self.name, link))
            if not isinstance(link.capacity, int) or link.capacity < 1:
                raise TopologyError("[%s] Link capacity must be a positive integer: %r" % (self.name, link))
            if not 0.0 <= link.loss <= 1.0:
                raise TopologyError("[%s] Link loss must be within [0, 1]: %r" % (self.name, link))

        if check_reachability and (unreachable := self.unreachable_destinations()):
            raise TopologyError("[%s] Unreachable destinations: %s" % (self.name, ", ".join(unreachable)))
        self.logger.debug(
            "[%s] Validated topology with %d nodes and %d links" % (self.name, len(self.nodes), len(self.links))
        )

    def with_loss(self, loss: float) -> "Topology":
        """Returns a copy with the loss of every link replaced."""
        links = [Link(link.source, link.target, link.capacity, loss) for link in self.links]
        self.logger.info("[%s] Overriding link loss: %s" % (self.name, colorize(loss, "red")))
        return Topology(self.name, nodes=dict(self.nodes), links=links, logger=self.logger)

    def __str__(self) -> str:
        lines = [f"Topology '{self.name}':"]
        lines += [f"  {node} ({role})" for node, role in self.nodes.items()]
        lines += [f"  {link.source} -> {link.target} [capacity={link.capacity}, loss={link.loss}]" for link in self.links]
        return "\n".join(lines)


def _load_scenarios() -> dict:
    with open(Path(__file__).parent / "scenarios.toml", "rb") as scenario_file:
        return load(scenario_file)


SCENARIOS = _load_scenarios()


def load_scenario(name: str, logger=None) -> Topology:
    """Returns a fresh copy of a built-in topology."""
    if name not in SCENARIOS:
        raise TopologyError("Unknown scenario '%s', available: %s" % (name, ", ".join(SCENARIOS)))
    return Topology.from_dict(name, SCENARIOS[name], logger=logger)


def butterfly_topology(logger=None) -> Topology:
    return load_scenario("butterfly", logger=logger)


def relay_topology(logger=None) -> Topology:
    return load_scenario("relay", logger=logger)


def point_topology(logger=None) -> Topology:
    return load_scenario("point", logger=logger)
