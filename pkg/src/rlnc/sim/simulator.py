__author__ = "desultory"
__version__ = "1.3.0"

from collections import deque
from typing import NamedTuple

import numpy as np
from zenlib.logging import loggify
from zenlib.util import colorize

from rlnc import TopologyError
from rlnc.codec import (
    CodedPacket,
    DecoderState,
    GenerationParams,
    LocalCoefficients,
    ReceiveStatus,
    SourcePacket,
    encode,
    random_coefficients,
    recode,
)
from rlnc.galois import SYMBOL_DTYPE, FieldSpec

from .report import SimReport
from .topology import Topology


class SimConfig:
    """
    Parameters of a simulation run.
    redundancy caps the packets each source emits, None lets sources send every slot.
    """

    def __init__(self, field: FieldSpec, n: int, coding=True, slots=20, seed=1, redundancy=None, payload_symbols=8):
        if n < 1:
            raise ValueError("Generation size must be positive, got: %d" % n)
        if slots < 1:
            raise ValueError("Simulation needs at least one slot, got: %d" % slots)
        if redundancy is not None and redundancy < 1:
            raise ValueError("Redundancy must be positive, got: %d" % redundancy)
        self.field = field
        self.n = n
        self.coding = coding
        self.slots = slots
        self.seed = seed
        self.redundancy = redundancy
        self.payload_symbols = payload_symbols

    def __repr__(self) -> str:
        return (
            f"SimConfig(field={self.field}, n={self.n}, coding={'on' if self.coding else 'off'}, slots={self.slots}, "
            f"seed={self.seed}, redundancy={self.redundancy}, payload_symbols={self.payload_symbols})"
        )


class Flight(NamedTuple):
    """A packet on a link, tagged with the source it came from and, uncoded, the original it copies."""

    packet: CodedPacket
    origin: str
    original: int = None


@loggify
class Simulator:
    """
    Synchronous time-slotted network.

    Every slot, each transmitting node produces as many packets as the largest capacity of its
    outgoing links and broadcasts them, each link carrying its first `capacity` packets.
    Packets received during a slot can only be forwarded from the next slot on.

    With coding on, sources send random combinations of the originals they own and intermediates
    recode everything they have received so far with fresh local coefficients.
    With coding off, nodes forward copies, intermediates serving their per-source queues round-robin.
    """

    def __init__(self, topology: Topology, config: SimConfig, *args, **kwargs):
        self.topology = topology
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self.params = GenerationParams(config.n, config.payload_symbols, config.field)

        topology.validate(check_reachability=False)
        self.unreachable = topology.unreachable_destinations()
        for destination in self.unreachable:
            self.logger.warning("[%s] Destination is unreachable from every source: %s" % (topology.name, colorize(destination, "red")))

        self.originals = [
            SourcePacket(payload)
            for payload in self.rng.integers(0, config.field.order, size=(config.n, config.payload_symbols), dtype=SYMBOL_DTYPE)
        ]
        self.blocks = self._assign_blocks()
        self.emitted = {source: 0 for source in topology.sources}
        self.buffers = {node: [] for node in topology.intermediates}
        self.queues = {node: {source: deque() for source in topology.sources} for node in topology.intermediates}
        self.next_queue = {node: 0 for node in topology.intermediates}
        self.decoders = {
            destination: DecoderState(self.params, logger=self.logger, _log_bump=10) for destination in topology.destinations
        }
        self.received = {destination: {} for destination in topology.destinations}
        self.report = SimReport(topology.name, config, topology.destinations, list(topology.nodes))

    def _assign_blocks(self) -> dict[str, list[int]]:
        """Splits the originals into contiguous blocks, one per source, in source order."""
        sources = self.topology.sources
        if self.config.n < len(sources):
            raise TopologyError("Generation of %d packets cannot be split over %d sources" % (self.config.n, len(sources)))
        blocks = {source: block.tolist() for source, block in zip(sources, np.array_split(np.arange(self.config.n), len(sources)))}
        for source, block in blocks.items():
            self.logger.debug("[%s] Owns originals: %s" % (source, colorize(block, "cyan")))
        return blocks

    def _source_packets(self, source: str, count: int) -> list[Flight]:
        if self.config.redundancy is not None:
            count = min(count, self.config.redundancy - self.emitted[source])

        block, flights = self.blocks[source], []
        for _ in range(count):
            if self.config.coding:
                coeffs = np.zeros(self.config.n, dtype=SYMBOL_DTYPE)
                coeffs[block] = random_coefficients(len(block), self.config.field, self.rng)
                flights.append(Flight(encode(self.originals, coeffs, self.config.field), source))
            else:
                original = block[self.emitted[source] % len(block)]
                unit = np.zeros(self.config.n, dtype=SYMBOL_DTYPE)
                unit[original] = 1
                flights.append(Flight(CodedPacket(unit, self.originals[original].payload.copy()), source, original))
            self.emitted[source] += 1
        return flights

    def _intermediate_packets(self, node: str, count: int) -> list[Flight]:
        if self.config.coding:
            buffer = self.buffers[node]
            if not buffer:
                return []
            flights = []
            for _ in range(count):
                w = LocalCoefficients(random_coefficients(len(buffer), self.config.field, self.rng))
                flights.append(Flight(recode([flight.packet for flight in buffer], w, self.config.field), node))
            return flights

        queues, flights = self.queues[node], []
        origins = list(queues)
        while len(flights) < count and any(queues.values()):
            origin = origins[self.next_queue[node] % len(origins)]
            self.next_queue[node] += 1
            if queues[origin]:
                flights.append(queues[origin].popleft())
        return flights

    def _transmit(self, node: str) -> list[tuple[str, Flight]]:
        """Produces this slot's packets for a node and pushes them over its links."""
        links = self.topology.out_links(node)
        if not links:
            return []
        count = max(link.capacity for link in links)
        if self.topology.nodes[node] == "source":
            flights = self._source_packets(node, count)
        else:
            flights = self._intermediate_packets(node, count)

        deliveries = []
        for link in links:
            for flight in flights[: link.capacity]:
                self.report.forwarded[node] += 1
                if self.rng.random() < link.loss:
                    self.logger.log(5, "Dropped packet on link: %s -> %s" % (link.source, link.target))
                    continue
                deliveries.append((link.target, flight))
        return deliveries

    def _deliver(self, node: str, flight: Flight) -> bool:
        """Hands a packet to a node, returns True when a destination learns something new."""
        match self.topology.nodes[node]:
            case "intermediate":
                if self.config.coding:
                    self.buffers[node].append(flight)
                else:
                    self.queues[node][flight.origin].append(flight)
                return False
            case "destination":
                if self.config.coding:
                    return self.decoders[node].receive(flight.packet) is ReceiveStatus.INNOVATIVE
                if flight.original in self.received[node]:
                    return False
                self.received[node][flight.original] = flight.packet.payload
                return True
        raise TopologyError("Sources do not receive packets: %s" % node)

    def _rank(self, destination: str) -> int:
        if self.config.coding:
            return self.decoders[destination].rank
        return len(self.received[destination])

    def step(self, slot: int) -> None:
        deliveries = []
        for node in self.topology.nodes:
            deliveries.extend(self._transmit(node))

        delivered = {destination: 0 for destination in self.topology.destinations}
        innovative = dict(delivered)
        for target, flight in deliveries:
            new = self._deliver(target, flight)
            if target in delivered:
                delivered[target] += 1
                innovative[target] += new

        ranks = {destination: self._rank(destination) for destination in self.topology.destinations}
        self.report.record_slot(slot, delivered, innovative, ranks)
        self.logger.log(5, "[slot %d] Delivered: %s, ranks: %s" % (slot, delivered, ranks))

    def _decoded(self, destination: str) -> dict[int, np.ndarray]:
        if self.config.coding:
            return {index: packet.payload for index, packet in self.decoders[destination].decoded_packets().items()}
        return self.received[destination]

    def run(self) -> SimReport:
        self.logger.info("[%s] Running simulation: %s" % (self.topology.name, colorize(self.config, "blue")))
        for slot in range(1, self.config.slots + 1):
            self.step(slot)

        for destination in self.topology.destinations:
            decoded = self._decoded(destination)
            verified = sum(np.array_equal(payload, self.originals[index].payload) for index, payload in decoded.items())
            self.report.finish(destination, len(decoded), verified)
        self.report.unreachable = list(self.unreachable)
        return self.report


def run(topology: Topology, config: SimConfig, logger=None) -> SimReport:
    """Runs one simulation, identical inputs and seed give an identical report."""
    if logger:
        return Simulator(topology, config, logger=logger).run()
    return Simulator(topology, config).run()
