"""Named compliance profiles and the pass/fail verdicts rendered against them.

Three receiver-sensitivity thresholds ship as built-in profiles because they
apply to different link segments; the caller must pick the one that matches
the receiver being judged. Equality counts as a pass: sensitivity is defined
as the minimum acceptable power, and a ceiling as the maximum acceptable
rise time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Mapping

from .model import ConfigurationError, DomainError, LineCode
from .risetime import max_system_risetime


@dataclass(frozen=True)
class StandardProfile:
    """Compliance targets for one link segment class."""

    name: str
    bit_rate: float  # bits per second
    line_code: LineCode
    rx_sensitivity: float  # dBm
    notes: str = ""

    def __post_init__(self) -> None:
        if self.bit_rate <= 0:
            raise DomainError(f"standard {self.name!r}: bit_rate must be > 0")
        if not math.isfinite(self.rx_sensitivity):
            raise DomainError(f"standard {self.name!r}: rx_sensitivity must be finite")


@dataclass(frozen=True)
class Verdict:
    """One measured quantity judged against one threshold.

    ``direction`` records which way the comparison runs: ``"min"`` means the
    value must reach the threshold (received power), ``"max"`` means it must
    stay below it (rise time). ``margin`` is positive iff the verdict passes
    with room to spare, zero exactly at the threshold.
    """

    quantity: str
    value: float
    threshold: float
    unit: str
    direction: Literal["min", "max"]
    passed: bool
    margin: float


def power_verdict(received: float, profile: StandardProfile) -> Verdict:
    """Judge a received power (dBm) against the profile's sensitivity floor."""
    margin = received - profile.rx_sensitivity
    return Verdict(
        quantity="received power",
        value=received,
        threshold=profile.rx_sensitivity,
        unit="dBm",
        direction="min",
        passed=received >= profile.rx_sensitivity,
        margin=margin,
    )


def risetime_verdict(total_rise: float, profile: StandardProfile, quantity: str = "rise time") -> Verdict:
    """Judge a total system rise time (ps) against the profile's ceiling.

    The ceiling follows from the profile's bit rate and line code; for a
    10 Gbps NRZ system it is 70 ps.
    """
    ceiling = max_system_risetime(profile.bit_rate, profile.line_code)
    return Verdict(
        quantity=quantity,
        value=total_rise,
        threshold=ceiling,
        unit="ps",
        direction="max",
        passed=total_rise <= ceiling,
        margin=ceiling - total_rise,
    )


def builtin_profiles() -> dict[str, StandardProfile]:
    """The shipped compliance profiles, keyed by name.

    All three carry the 10 Gbps NRZ backbone signal, so they share the 70 ps
    rise-time ceiling; they differ in which receiver's sensitivity they
    enforce.
    """
    profiles = [
        StandardProfile(
            name="gpon-downlink-olt",
            bit_rate=10e9,
            line_code=LineCode.NRZ,
            rx_sensitivity=-21.0,
            notes="ITU-T G.984.2 class downlink receiver; the planning floor for backbone exit power",
        ),
        StandardProfile(
            name="gpon-onu-endpoint",
            bit_rate=10e9,
            line_code=LineCode.NRZ,
            rx_sensitivity=-28.0,
            notes="ITU-T G.984.2 class distribution end point (ONU) sensitivity",
        ),
        StandardProfile(
            name="table2-receiver",
            bit_rate=10e9,
            line_code=LineCode.NRZ,
            rx_sensitivity=-38.0,
            notes="design-table receiver minimum sensitivity",
        ),
    ]
    return {p.name: p for p in profiles}


def resolve_standard(name: str, custom: Mapping[str, StandardProfile] | None = None) -> StandardProfile:
    """Look up a profile by name, custom definitions first, then built-ins."""
    if custom and name in custom:
        return custom[name]
    builtins = builtin_profiles()
    if name in builtins:
        return builtins[name]
    known = sorted(set(builtins) | set(custom or {}))
    raise ConfigurationError(f"unknown standard profile {name!r}; known: {', '.join(known)}")
