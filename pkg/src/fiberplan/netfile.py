"""Network description file: a single JSON document describing a plant.

Top-level keys: ``nodes``, ``spans``, ``topology``, ``fiber_profiles``,
``transceiver``, ``losses``; optional ``standards`` (custom compliance
profiles), ``traffic`` (forecast inputs), ``distribution_loss`` (dB for the
downstream distribution leg), ``edfa_gain`` (dB unit gain used when sizing
amplifiers), ``head`` (tree root) and ``notes``.

Units are fixed by the format: lengths in km, powers in dBm, losses and gains
in dB, rise times in ps, dispersion in ps/(nm km). A span's ``splices`` key
accepts an integer or the string ``"auto"`` to derive the count from the
fiber's drum length. Unknown keys and unknown profile names are load-time
errors, not defaults: silent fallbacks hide unit mistakes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .model import (
    Amplifier,
    AmplifierKind,
    ComponentLosses,
    ConfigurationError,
    DomainError,
    FiberProfile,
    LineCode,
    Network,
    Node,
    Span,
    Splitter,
    Topology,
    TransceiverProfile,
)
from .standards import StandardProfile

DEFAULT_EDFA_GAIN = 20.0  # dB per unit when the file does not say otherwise


class NetworkFileError(ConfigurationError):
    """The document cannot be parsed or does not satisfy the schema."""


@dataclass(frozen=True)
class NetworkDocument:
    """Everything a network file carries beyond the Network itself."""

    network: Network
    fiber_profiles: dict[str, FiberProfile]
    standards: dict[str, StandardProfile] = field(default_factory=dict)
    traffic: Mapping[str, Any] | None = None
    distribution_loss: float = 0.0
    edfa_gain: float = DEFAULT_EDFA_GAIN


def _require(obj: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in obj:
        raise NetworkFileError(f"{where}: missing required key {key!r}")
    return obj[key]


def _reject_unknown(obj: Mapping[str, Any], allowed: set[str], where: str) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise NetworkFileError(f"{where}: unknown key(s) {', '.join(map(repr, unknown))}")


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise NetworkFileError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _count(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise NetworkFileError(f"{where}: expected an integer, got {value!r}")
    return value


def _text(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise NetworkFileError(f"{where}: expected a string, got {value!r}")
    return value


def _fiber_profiles(raw: Any) -> dict[str, FiberProfile]:
    if not isinstance(raw, dict):
        raise NetworkFileError("'fiber_profiles' must map profile names to objects")
    profiles: dict[str, FiberProfile] = {}
    for name, body in raw.items():
        where = f"fiber_profiles[{name!r}]"
        if not isinstance(body, dict):
            raise NetworkFileError(f"{where}: expected an object")
        _reject_unknown(body, {"attenuation", "dispersion", "drum_length"}, where)
        profiles[name] = FiberProfile(
            name=name,
            attenuation=_number(_require(body, "attenuation", where), f"{where}.attenuation"),
            dispersion=_number(_require(body, "dispersion", where), f"{where}.dispersion"),
            drum_length=_number(_require(body, "drum_length", where), f"{where}.drum_length"),
        )
    return profiles


def _transceiver(raw: Any) -> TransceiverProfile:
    where = "transceiver"
    if not isinstance(raw, dict):
        raise NetworkFileError(f"{where}: expected an object")
    keys = {"tx_power", "spectral_width", "tx_rise_time", "rx_rise_time", "rx_sensitivity", "responsivity"}
    _reject_unknown(raw, keys, where)
    return TransceiverProfile(
        **{key: _number(_require(raw, key, where), f"{where}.{key}") for key in sorted(keys)}
    )


def _losses(raw: Any) -> ComponentLosses:
    where = "losses"
    if not isinstance(raw, dict):
        raise NetworkFileError(f"{where}: expected an object")
    _reject_unknown(raw, {"connector_loss", "splice_loss", "system_margin", "splitter_excess_loss"}, where)
    return ComponentLosses(
        connector_loss=_number(_require(raw, "connector_loss", where), f"{where}.connector_loss"),
        splice_loss=_number(_require(raw, "splice_loss", where), f"{where}.splice_loss"),
        system_margin=_number(_require(raw, "system_margin", where), f"{where}.system_margin"),
        splitter_excess_loss=_number(raw.get("splitter_excess_loss", 0.0), f"{where}.splitter_excess_loss"),
    )


def _span(raw: Any, profiles: Mapping[str, FiberProfile]) -> Span:
    if not isinstance(raw, dict):
        raise NetworkFileError("spans: each entry must be an object")
    span_id = _text(_require(raw, "id", "span"), "span.id")
    where = f"span {span_id!r}"
    _reject_unknown(
        raw, {"id", "from", "to", "length", "fiber", "connectors", "splices", "amplifiers", "splitters"}, where
    )

    fiber_name = _text(_require(raw, "fiber", where), f"{where}.fiber")
    if fiber_name not in profiles:
        raise NetworkFileError(f"{where}: unknown fiber profile {fiber_name!r}")

    splices_raw = raw.get("splices", "auto")
    if splices_raw == "auto":
        splices = None
    else:
        splices = _count(splices_raw, f"{where}.splices")

    amplifiers = []
    for i, amp in enumerate(raw.get("amplifiers", [])):
        amp_where = f"{where}.amplifiers[{i}]"
        if not isinstance(amp, dict):
            raise NetworkFileError(f"{amp_where}: expected an object")
        _reject_unknown(amp, {"gain", "kind"}, amp_where)
        kind_raw = amp.get("kind", "edfa")
        try:
            kind = AmplifierKind(kind_raw)
        except ValueError:
            raise NetworkFileError(f"{amp_where}: unknown amplifier kind {kind_raw!r}") from None
        amplifiers.append(Amplifier(gain=_number(_require(amp, "gain", amp_where), f"{amp_where}.gain"), kind=kind))

    splitters = [
        Splitter(ratio=_count(ratio, f"{where}.splitters[{i}]"))
        for i, ratio in enumerate(raw.get("splitters", []))
    ]

    return Span(
        id=span_id,
        from_node=_text(_require(raw, "from", where), f"{where}.from"),
        to_node=_text(_require(raw, "to", where), f"{where}.to"),
        length=_number(_require(raw, "length", where), f"{where}.length"),
        fiber=profiles[fiber_name],
        connectors=_count(raw.get("connectors", 2), f"{where}.connectors"),
        splices=splices,
        amplifiers=tuple(amplifiers),
        splitters=tuple(splitters),
    )


def _standards(raw: Any) -> dict[str, StandardProfile]:
    if not isinstance(raw, dict):
        raise NetworkFileError("'standards' must map profile names to objects")
    out: dict[str, StandardProfile] = {}
    for name, body in raw.items():
        where = f"standards[{name!r}]"
        if not isinstance(body, dict):
            raise NetworkFileError(f"{where}: expected an object")
        _reject_unknown(body, {"bit_rate", "line_code", "rx_sensitivity", "notes"}, where)
        code = _text(_require(body, "line_code", where), f"{where}.line_code")
        try:
            line_code = LineCode(code)
        except ValueError:
            raise NetworkFileError(f"{where}: line_code must be 'nrz' or 'rz', got {code!r}") from None
        out[name] = StandardProfile(
            name=name,
            bit_rate=_number(_require(body, "bit_rate", where), f"{where}.bit_rate"),
            line_code=line_code,
            rx_sensitivity=_number(_require(body, "rx_sensitivity", where), f"{where}.rx_sensitivity"),
            notes=_text(body.get("notes", ""), f"{where}.notes"),
        )
    return out


def parse_network(doc: Mapping[str, Any]) -> NetworkDocument:
    """Build a NetworkDocument from an already-decoded JSON object.

    Domain-invariant failures (negative lengths, zero attenuation, ...) are
    reported as NetworkFileError so callers see one error type for bad files.
    """
    if not isinstance(doc, dict):
        raise NetworkFileError("top level: expected a JSON object")
    allowed = {
        "nodes", "spans", "topology", "fiber_profiles", "transceiver", "losses",
        "standards", "traffic", "distribution_loss", "edfa_gain", "head", "notes",
    }
    _reject_unknown(doc, allowed, "top level")

    topology_raw = _text(_require(doc, "topology", "top level"), "topology")
    try:
        topology = Topology(topology_raw)
    except ValueError:
        raise NetworkFileError(f"topology must be 'ring' or 'tree', got {topology_raw!r}") from None

    nodes_raw = _require(doc, "nodes", "top level")
    if not isinstance(nodes_raw, list):
        raise NetworkFileError("'nodes' must be a list")
    nodes = []
    for i, body in enumerate(nodes_raw):
        if not isinstance(body, dict):
            raise NetworkFileError(f"nodes[{i}]: expected an object")
        _reject_unknown(body, {"id", "name"}, f"nodes[{i}]")
        node_id = _text(_require(body, "id", f"nodes[{i}]"), f"nodes[{i}].id")
        nodes.append(Node(id=node_id, name=_text(body.get("name", node_id), f"nodes[{i}].name")))

    head = doc.get("head")
    if head is not None:
        head = _text(head, "head")

    traffic = doc.get("traffic")
    if traffic is not None and not isinstance(traffic, dict):
        raise NetworkFileError("'traffic' must be an object")

    spans_raw = _require(doc, "spans", "top level")
    if not isinstance(spans_raw, list):
        raise NetworkFileError("'spans' must be a list")

    try:
        profiles = _fiber_profiles(_require(doc, "fiber_profiles", "top level"))
        network = Network(
            nodes=tuple(nodes),
            spans=tuple(_span(raw, profiles) for raw in spans_raw),
            topology=topology,
            losses=_losses(_require(doc, "losses", "top level")),
            transceiver=_transceiver(_require(doc, "transceiver", "top level")),
            head=head,
        )
    except DomainError as exc:
        raise NetworkFileError(str(exc)) from exc

    return NetworkDocument(
        network=network,
        fiber_profiles=profiles,
        standards=_standards(doc.get("standards", {})),
        traffic=traffic,
        distribution_loss=_number(doc.get("distribution_loss", 0.0), "distribution_loss"),
        edfa_gain=_number(doc.get("edfa_gain", DEFAULT_EDFA_GAIN), "edfa_gain"),
    )


def load_network(path: str | Path) -> NetworkDocument:
    """Read and parse a network description file.

    Malformed JSON raises NetworkFileError carrying the line and column of
    the syntax error; schema problems name the offending element.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise NetworkFileError(f"{path}: {exc.strerror or exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkFileError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_network(doc)
