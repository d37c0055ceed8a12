__author__ = "desultory"
__version__ = "1.1.1"

from json import dumps

from zenlib.util import colorize

from rlnc.base.core import get_field
from rlnc.sim import SCENARIOS, SimConfig, Topology, load_scenario, run


def _process_slots(self, slots: int) -> None:
    if slots < 1:
        raise ValueError("slots must be at least 1, got: %r" % slots)
    self.data["slots"] = int(slots)


def _process_scenario(self, scenario: str) -> None:
    if scenario not in SCENARIOS:
        raise ValueError("Unknown scenario '%s', available: %s" % (scenario, ", ".join(SCENARIOS)))
    self.data["scenario"] = scenario


def _process_loss(self, loss: float) -> None:
    """Sets the loss applied to every link, marking the topology values as overridden."""
    if not 0.0 <= loss <= 1.0:
        raise ValueError("loss must be within [0, 1], got: %r" % loss)
    self.data["loss"] = float(loss)
    self["_loss_override"] = True


def _process_payload_symbols(self, payload_symbols: int) -> None:
    if payload_symbols < 1:
        raise ValueError("payload_symbols must be at least 1, got: %r" % payload_symbols)
    self.data["payload_symbols"] = int(payload_symbols)


def _process_topology(self, topology: dict) -> None:
    """Checks a custom topology definition, it is simulated instead of the scenario."""
    name = topology.get("name", "custom")
    Topology.from_dict(name, topology, logger=self.logger).validate(check_reachability=False)
    self.logger.info("Using custom topology: %s" % colorize(name, "blue"))
    self.data["topology"] = topology


def get_topology(self) -> Topology:
    if topology := self["topology"]:
        topology = Topology.from_dict(topology.get("name", "custom"), topology, logger=self.logger)
    else:
        topology = load_scenario(self["scenario"], logger=self.logger)

    if self["_loss_override"]:
        topology = topology.with_loss(self["loss"])
    return topology


def cmd_sim(self) -> list[str]:
    """
    Simulates the configured scenario, returning the rendered report.
    When an output is set, one JSON record per slot is written to it.
    """
    topology = get_topology(self)
    self.logger.debug("Simulating:\n%s" % topology)
    config = SimConfig(
        get_field(self),
        self["packets"],
        coding=self["coding"],
        slots=self["slots"],
        seed=self["seed"],
        redundancy=self["redundancy"],
        payload_symbols=self["payload_symbols"],
    )
    report = run(topology, config, logger=self.logger)

    if self["output"]:
        self._write(self["output"], [dumps(record) for record in report.slot_records()])
    return report.render()
