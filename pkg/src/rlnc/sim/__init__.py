from .report import SimReport
from .simulator import SimConfig, Simulator, run
from .topology import SCENARIOS, Link, Topology, butterfly_topology, load_scenario, point_topology, relay_topology

__all__ = [
    "SCENARIOS",
    "Link",
    "SimConfig",
    "SimReport",
    "Simulator",
    "Topology",
    "butterfly_topology",
    "load_scenario",
    "point_topology",
    "relay_topology",
    "run",
]
