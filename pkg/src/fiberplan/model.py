"""Component-graph model of an optical plant.

A ``Network`` is a set of named nodes joined by fiber ``Span``s, carrying the
shared component-loss figures and the transceiver that drives the plant.
Everything here is immutable after construction; the structural rules a ring
or tree must satisfy are checked by :func:`validate_network`, which reports
violations as data instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence


class DomainError(ValueError):
    """An argument lies outside its physically meaningful domain."""


class ConfigurationError(ValueError):
    """A reference or configuration value cannot be resolved."""


class Topology(str, Enum):
    RING = "ring"
    TREE = "tree"


class LineCode(str, Enum):
    NRZ = "nrz"
    RZ = "rz"


class AmplifierKind(str, Enum):
    EDFA = "edfa"


@dataclass(frozen=True)
class FiberProfile:
    """Per-km properties of a named fiber standard."""

    name: str
    attenuation: float  # dB/km
    dispersion: float  # ps/(nm km)
    drum_length: float  # km of fiber per cable drum

    def __post_init__(self) -> None:
        if self.attenuation <= 0:
            raise DomainError(f"fiber {self.name!r}: attenuation must be > 0 dB/km")
        if self.dispersion < 0:
            raise DomainError(f"fiber {self.name!r}: dispersion must be >= 0")
        if self.drum_length <= 0:
            raise DomainError(f"fiber {self.name!r}: drum_length must be > 0 km")


@dataclass(frozen=True)
class TransceiverProfile:
    """Transmitter/receiver pair terminating a path."""

    tx_power: float  # dBm
    spectral_width: float  # nm
    tx_rise_time: float  # ps
    rx_rise_time: float  # ps
    rx_sensitivity: float  # dBm, minimum acceptable received power
    responsivity: float  # A/W

    def __post_init__(self) -> None:
        if self.spectral_width <= 0:
            raise DomainError("transceiver: spectral_width must be > 0 nm")
        if self.tx_rise_time <= 0 or self.rx_rise_time <= 0:
            raise DomainError("transceiver: rise times must be > 0 ps")
        if self.responsivity <= 0:
            raise DomainError("transceiver: responsivity must be > 0 A/W")


@dataclass(frozen=True)
class ComponentLosses:
    """Fixed per-component losses and the path-level system margin."""

    connector_loss: float  # dB per connector
    splice_loss: float  # dB per splice
    system_margin: float  # dB, applied once per evaluated path
    splitter_excess_loss: float = 0.0  # dB per splitter stage, on top of the ideal split

    def __post_init__(self) -> None:
        for name in ("connector_loss", "splice_loss", "system_margin", "splitter_excess_loss"):
            if getattr(self, name) < 0:
                raise DomainError(f"losses: {name} must be >= 0 dB")


@dataclass(frozen=True)
class Amplifier:
    """Fixed-gain optical amplifier."""

    gain: float  # dB
    kind: AmplifierKind = AmplifierKind.EDFA

    def __post_init__(self) -> None:
        if self.gain <= 0:
            raise DomainError("amplifier gain must be > 0 dB")


@dataclass(frozen=True)
class Splitter:
    """Passive 1xN splitter; N must be a power of two."""

    ratio: int

    def __post_init__(self) -> None:
        n = self.ratio
        if n < 2 or (n & (n - 1)) != 0:
            raise DomainError(f"splitter ratio must be a power of two >= 2, got {n}")


@dataclass(frozen=True)
class Span:
    """A fiber run between two nodes with its joint and device inventory.

    ``splices=None`` means the count is resolved automatically from the run
    length and the fiber's drum length via :func:`splice_count`.
    """

    id: str
    from_node: str
    to_node: str
    length: float  # km
    fiber: FiberProfile
    connectors: int = 2  # one demountable joint per end by default
    splices: int | None = None
    amplifiers: tuple[Amplifier, ...] = ()
    splitters: tuple[Splitter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplifiers", tuple(self.amplifiers))
        object.__setattr__(self, "splitters", tuple(self.splitters))
        if self.length <= 0:
            raise DomainError(f"span {self.id!r}: length must be > 0 km")
        if self.connectors < 0:
            raise DomainError(f"span {self.id!r}: connector count must be >= 0")
        if self.splices is not None and self.splices < 0:
            raise DomainError(f"span {self.id!r}: splice count must be >= 0")
        if self.from_node == self.to_node:
            raise DomainError(f"span {self.id!r}: from_node and to_node must differ")


@dataclass(frozen=True)
class Node:
    id: str
    name: str


@dataclass(frozen=True)
class Network:
    """A plant: nodes, spans, topology kind, and the shared equipment figures.

    ``head`` designates the root of a tree plant; it defaults to the first
    listed node and is ignored for rings.
    """

    nodes: tuple[Node, ...]
    spans: tuple[Span, ...]
    topology: Topology
    losses: ComponentLosses
    transceiver: TransceiverProfile
    head: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "spans", tuple(self.spans))

    def node_name(self, node_id: str) -> str:
        for node in self.nodes:
            if node.id == node_id:
                return node.name
        return node_id

    @property
    def head_node(self) -> str | None:
        if self.head is not None:
            return self.head
        return self.nodes[0].id if self.nodes else None


@dataclass(frozen=True)
class Violation:
    """One broken structural rule, attached to the offending element."""

    element: str  # "node:<id>", "span:<id>", or "network"
    rule: str
    message: str


def splice_count(length: float, drum_length: float) -> int:
    """Splices on a run: one per cable-drum boundary plus the two terminating joints.

    Computed as ceil(length / drum_length) + 2.
    """
    if length <= 0 or drum_length <= 0:
        raise DomainError("splice_count: length and drum_length must be > 0 km")
    return math.ceil(length / drum_length) + 2


def resolved_splices(span: Span) -> int:
    """The span's explicit splice count, or the automatic drum-based count."""
    if span.splices is not None:
        return span.splices
    if span.fiber is None:
        raise ConfigurationError(f"span {span.id!r}: no fiber profile to resolve splices from")
    return splice_count(span.length, span.fiber.drum_length)


def _components(node_ids: set[str], edges: list[tuple[str, str]]) -> tuple[int, bool]:
    """Connected-component count and cycle flag, via union-find."""
    parent = {n: n for n in node_ids}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    has_cycle = False
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            has_cycle = True
        else:
            parent[ra] = rb
    roots = {find(n) for n in node_ids}
    return len(roots), has_cycle


def validate_network(net: Network) -> list[Violation]:
    """Check every structural invariant of the network.

    Returns the full list of violations, sorted by element id then rule name,
    so that a valid network yields an empty list. Validation is pure: the same
    network always produces the same list.
    """
    violations: list[Violation] = []
    known = {n.id for n in net.nodes}
    if not known:
        violations.append(Violation("network", "no-nodes", "network has no nodes"))

    seen_nodes: set[str] = set()
    for node in net.nodes:
        if node.id in seen_nodes:
            violations.append(Violation(f"node:{node.id}", "duplicate-id", "node id appears more than once"))
        seen_nodes.add(node.id)

    seen_spans: set[str] = set()
    resolved_edges: list[tuple[str, str]] = []
    for span in net.spans:
        if span.id in seen_spans:
            violations.append(Violation(f"span:{span.id}", "duplicate-id", "span id appears more than once"))
        seen_spans.add(span.id)
        dangling = [n for n in (span.from_node, span.to_node) if n not in known]
        for node_id in dangling:
            violations.append(
                Violation(f"span:{span.id}", "unresolved-node", f"references unknown node {node_id!r}")
            )
        if not dangling:
            resolved_edges.append((span.from_node, span.to_node))

    degree = {n: 0 for n in known}
    for a, b in resolved_edges:
        degree[a] += 1
        degree[b] += 1

    if net.topology is Topology.RING:
        for node_id in sorted(known):
            if degree[node_id] != 2:
                violations.append(
                    Violation(
                        f"node:{node_id}",
                        "ring-degree",
                        f"ring nodes need degree exactly 2, found {degree[node_id]}",
                    )
                )
        if known:
            n_components, _ = _components(known, resolved_edges)
            if n_components != 1 or len(resolved_edges) != len(known):
                violations.append(
                    Violation("network", "ring-single-cycle", "spans do not form a single closed cycle")
                )
    else:
        head = net.head_node
        if head is None or head not in known:
            violations.append(
                Violation("network", "tree-head", f"tree head node {head!r} does not resolve")
            )
        if known:
            n_components, has_cycle = _components(known, resolved_edges)
            if n_components != 1:
                violations.append(
                    Violation("network", "tree-connected", f"tree must be connected, found {n_components} components")
                )
            if has_cycle:
                violations.append(Violation("network", "tree-acyclic", "tree contains a cycle"))

    violations.sort(key=lambda v: (v.element, v.rule))
    return violations


def ring_order(net: Network) -> list[str]:
    """Node ids walking the full cycle, first node repeated at the end.

    A 7-node ring yields 8 ids covering all 7 spans. Raises
    ConfigurationError if the network does not validate as a ring.
    """
    if net.topology is not Topology.RING:
        raise ConfigurationError("ring traversal requested on a non-ring network")
    problems = validate_network(net)
    if problems:
        raise ConfigurationError(f"network is not a valid ring: {problems[0].message}")

    incident: dict[str, list[Span]] = {n.id: [] for n in net.nodes}
    for span in net.spans:
        incident[span.from_node].append(span)
        incident[span.to_node].append(span)

    start = net.nodes[0].id
    order = [start]
    used: set[str] = set()
    current = start
    for _ in range(len(net.spans) - 1):
        options = sorted(
            (s for s in incident[current] if s.id not in used),
            key=lambda s: (0 if s.from_node == current else 1, s.id),
        )
        span = options[0]
        used.add(span.id)
        current = span.to_node if span.from_node == current else span.from_node
        order.append(current)
    order.append(start)
    return order


def spans_along(net: Network, node_ids: Sequence[str]) -> list[Span]:
    """Spans joining each consecutive node pair, in path order."""
    ids = list(node_ids)
    if len(ids) < 2:
        raise ConfigurationError("a path needs at least two nodes")
    known = {n.id for n in net.nodes}
    for node_id in ids:
        if node_id not in known:
            raise ConfigurationError(f"path references unknown node {node_id!r}")

    path: list[Span] = []
    for a, b in zip(ids, ids[1:]):
        matches = sorted(
            (s for s in net.spans if {s.from_node, s.to_node} == {a, b}),
            key=lambda s: s.id,
        )
        if not matches:
            raise ConfigurationError(f"no span joins {a!r} and {b!r}")
        path.append(matches[0])
    return path
