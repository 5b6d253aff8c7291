from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fiberplan.model import ConfigurationError, DomainError, LineCode
from fiberplan.standards import (
    StandardProfile,
    builtin_profiles,
    power_verdict,
    resolve_standard,
    risetime_verdict,
)

GPON_ONU = builtin_profiles()["gpon-onu-endpoint"]
BACKBONE_10G = StandardProfile("10g-nrz", bit_rate=10e9, line_code=LineCode.NRZ, rx_sensitivity=-28.0)

finite_dbm = st.floats(min_value=-80.0, max_value=40.0)


def test_three_builtin_sensitivity_classes():
    profiles = builtin_profiles()
    assert profiles["gpon-downlink-olt"].rx_sensitivity == -21.0
    assert profiles["gpon-onu-endpoint"].rx_sensitivity == -28.0
    assert profiles["table2-receiver"].rx_sensitivity == -38.0
    for profile in profiles.values():
        assert profile.bit_rate == 10e9
        assert profile.line_code is LineCode.NRZ


def test_profile_invariants():
    with pytest.raises(DomainError):
        StandardProfile("bad", bit_rate=0.0, line_code=LineCode.NRZ, rx_sensitivity=-28.0)
    with pytest.raises(DomainError):
        StandardProfile("bad", bit_rate=1e9, line_code=LineCode.NRZ, rx_sensitivity=float("inf"))


class TestPowerVerdict:
    def test_simulated_endpoint_power_passes(self):
        v = power_verdict(-25.010, GPON_ONU)
        assert v.passed
        assert v.margin == pytest.approx(2.99, abs=1e-9)

    def test_boundary_counts_as_pass(self):
        v = power_verdict(-28.0, GPON_ONU)
        assert v.passed
        assert v.margin == 0.0

    def test_below_sensitivity_fails(self):
        v = power_verdict(-30.0, GPON_ONU)
        assert not v.passed
        assert v.margin == pytest.approx(-2.0)

    @given(x=finite_dbm, y=finite_dbm)
    def test_margin_monotone_in_received_power(self, x, y):
        if x > y:
            x, y = y, x
        assert power_verdict(x, GPON_ONU).margin <= power_verdict(y, GPON_ONU).margin


class TestRisetimeVerdict:
    def test_backbone_link_passes(self):
        v = risetime_verdict(69.552, BACKBONE_10G)
        assert v.passed
        assert v.threshold == 70.0
        assert v.margin == pytest.approx(0.448, abs=1e-9)

    def test_boundary_counts_as_pass(self):
        v = risetime_verdict(70.0, BACKBONE_10G)
        assert v.passed
        assert v.margin == 0.0

    def test_above_ceiling_fails(self):
        assert not risetime_verdict(71.0, BACKBONE_10G).passed


@given(value=finite_dbm)
def test_verdict_is_self_consistent(value):
    for verdict in (power_verdict(value, GPON_ONU), risetime_verdict(abs(value) + 1.0, BACKBONE_10G)):
        if verdict.direction == "min":
            recomputed = verdict.value >= verdict.threshold
        else:
            recomputed = verdict.value <= verdict.threshold
        assert verdict.passed == recomputed
        assert (verdict.margin >= 0) == verdict.passed


class TestResolution:
    def test_builtin_by_name(self):
        assert resolve_standard("table2-receiver").rx_sensitivity == -38.0

    def test_custom_wins_over_builtin(self):
        override = StandardProfile(
            "gpon-onu-endpoint", bit_rate=2.5e9, line_code=LineCode.NRZ, rx_sensitivity=-27.0
        )
        resolved = resolve_standard("gpon-onu-endpoint", {"gpon-onu-endpoint": override})
        assert resolved.rx_sensitivity == -27.0

    def test_unknown_name_lists_known_profiles(self):
        with pytest.raises(ConfigurationError, match="gpon-onu-endpoint"):
            resolve_standard("nope")
