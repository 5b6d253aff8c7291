"""Fiber-optic network planning: component-graph modeling, power and
rise-time budgets, amplifier sizing, signal traces with BER estimates,
standards compliance verdicts, and subscriber forecasting."""

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
    Violation,
    resolved_splices,
    ring_order,
    spans_along,
    splice_count,
    validate_network,
)
from .netfile import NetworkDocument, NetworkFileError, load_network, parse_network
from .planning import PlanReport, SpanResult, ValidationFailure, run_forecast, run_plan, run_trace
from .power_budget import (
    AmplifierPlan,
    LossBreakdown,
    amplifier_requirement,
    max_allowed_loss,
    path_loss,
    received_power,
    required_input_power,
    span_loss,
    splitter_loss,
)
from .risetime import (
    RiseTimeReport,
    dispersion_risetime,
    max_system_risetime,
    span_risetime_report,
    total_risetime,
)
from .signal_chain import (
    BerEstimate,
    ChainElement,
    Connector,
    FiberSegment,
    MarginPad,
    PowerTrace,
    Splice,
    TracePoint,
    ber_from_q,
    estimate_ber,
    propagate,
    route_chain,
)
from .standards import (
    StandardProfile,
    Verdict,
    builtin_profiles,
    power_verdict,
    resolve_standard,
    risetime_verdict,
)
from .traffic import (
    TrafficForecast,
    TrafficInput,
    forecast_subscribers,
    project_growth,
    round_half_toward_zero,
)

__version__ = "0.1.0"

__all__ = [
    "Amplifier",
    "AmplifierKind",
    "AmplifierPlan",
    "BerEstimate",
    "ChainElement",
    "ComponentLosses",
    "ConfigurationError",
    "Connector",
    "DomainError",
    "FiberProfile",
    "FiberSegment",
    "LineCode",
    "LossBreakdown",
    "MarginPad",
    "Network",
    "NetworkDocument",
    "NetworkFileError",
    "Node",
    "PlanReport",
    "PowerTrace",
    "RiseTimeReport",
    "Span",
    "SpanResult",
    "Splice",
    "Splitter",
    "StandardProfile",
    "Topology",
    "TracePoint",
    "TrafficForecast",
    "TrafficInput",
    "TransceiverProfile",
    "ValidationFailure",
    "Verdict",
    "Violation",
    "amplifier_requirement",
    "ber_from_q",
    "builtin_profiles",
    "dispersion_risetime",
    "estimate_ber",
    "forecast_subscribers",
    "load_network",
    "max_allowed_loss",
    "max_system_risetime",
    "parse_network",
    "path_loss",
    "power_verdict",
    "project_growth",
    "propagate",
    "received_power",
    "required_input_power",
    "resolve_standard",
    "resolved_splices",
    "ring_order",
    "risetime_verdict",
    "round_half_toward_zero",
    "route_chain",
    "run_forecast",
    "run_plan",
    "run_trace",
    "span_loss",
    "span_risetime_report",
    "spans_along",
    "splice_count",
    "splitter_loss",
    "total_risetime",
    "validate_network",
]
