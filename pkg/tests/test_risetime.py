from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from fiberplan.model import DomainError, FiberProfile, LineCode, Span
from fiberplan.risetime import (
    RiseTimeReport,
    dispersion_risetime,
    max_system_risetime,
    span_risetime_report,
    total_risetime,
)
from fiberplan.standards import builtin_profiles

from conftest import TRANSCEIVER, make_span

DISPERSION_FREE_FLOOR = math.sqrt(60.0**2 + 35.0**2)  # sqrt(4825), shared by every backbone link

rise_ps = st.floats(min_value=0.0, max_value=500.0)


class TestCeiling:
    def test_ten_gig_nrz_is_seventy_exactly(self):
        assert max_system_risetime(10e9, LineCode.NRZ) == 70.0

    def test_unit_scaling(self):
        assert max_system_risetime(1.0, LineCode.NRZ) == 0.7e12

    def test_rz_halves_the_ceiling(self):
        assert max_system_risetime(10e9, LineCode.RZ) == max_system_risetime(10e9, LineCode.NRZ) / 2
        assert max_system_risetime(10e9, LineCode.RZ) == 35.0

    def test_rejects_nonpositive_bit_rate(self):
        with pytest.raises(DomainError):
            max_system_risetime(0.0, LineCode.NRZ)


class TestDispersionRisetime:
    def test_full_backbone(self):
        assert dispersion_risetime(3.5, 0.1, 84.9) == pytest.approx(29.715)

    def test_zero_length(self):
        assert dispersion_risetime(3.5, 0.1, 0.0) == 0.0

    def test_longest_link(self):
        assert dispersion_risetime(3.5, 0.1, 18.8) == pytest.approx(6.58, abs=1e-9)


class TestTotalRisetime:
    def test_longest_link_total(self):
        assert total_risetime(60.0, 35.0, 6.578) == pytest.approx(69.773, abs=0.01)

    def test_zero(self):
        assert total_risetime(0.0, 0.0, 0.0) == 0.0

    def test_dispersion_free_floor(self):
        assert total_risetime(60.0, 35.0, 0.0) == pytest.approx(DISPERSION_FREE_FLOOR, abs=1e-12)
        assert total_risetime(60.0, 35.0, 0.0) == pytest.approx(69.462, abs=0.001)

    @given(a=rise_ps, b=rise_ps, c=rise_ps)
    def test_symmetric_in_all_arguments(self, a, b, c):
        reference = total_risetime(a, b, c)
        assert total_risetime(b, a, c) == reference
        assert total_risetime(c, b, a) == pytest.approx(reference, rel=1e-12)

    @given(a=rise_ps, b=rise_ps, c=rise_ps)
    def test_dominates_every_component(self, a, b, c):
        assert total_risetime(a, b, c) >= max(a, b, c) - 1e-12

    @given(a=rise_ps, b=rise_ps, bump=st.floats(min_value=1e-3, max_value=100.0))
    def test_strictly_increasing_without_dispersion(self, a, b, bump):
        assert total_risetime(a + bump, b, 0.0) > total_risetime(a, b, 0.0)
        assert total_risetime(a, b + bump, 0.0) > total_risetime(a, b, 0.0)


class TestSpanReport:
    PROFILE = builtin_profiles()["gpon-onu-endpoint"]

    def test_first_backbone_link(self):
        span = make_span("01", "a", "b", length=10.094)
        report = span_risetime_report(span, TRANSCEIVER, self.PROFILE)
        assert report.total == pytest.approx(69.552, abs=0.01)
        assert report.ceiling == 70.0
        assert report.passed

    def test_dispersion_free_fiber_sits_on_the_floor(self):
        flat = FiberProfile(name="flat", attenuation=0.3, dispersion=0.0, drum_length=3.0)
        span = Span(id="02", from_node="a", to_node="b", length=42.0, fiber=flat)
        report = span_risetime_report(span, TRANSCEIVER, self.PROFILE)
        assert report.dispersion_component == 0.0
        assert report.total == DISPERSION_FREE_FLOOR
        assert report.passed

    def test_hundred_km_fails_the_ceiling(self):
        span = make_span("03", "a", "b", length=100.0)
        report = span_risetime_report(span, TRANSCEIVER, self.PROFILE)
        assert report.dispersion_component == pytest.approx(35.0)
        assert report.total == pytest.approx(77.78, abs=0.01)
        assert not report.passed

    def test_unresolved_fiber_is_a_configuration_error(self):
        from fiberplan.model import ConfigurationError

        bare = Span(id="bare", from_node="a", to_node="b", length=5.0, fiber=None)  # type: ignore[arg-type]
        with pytest.raises(ConfigurationError):
            span_risetime_report(bare, TRANSCEIVER, self.PROFILE)

    @given(
        short=st.floats(min_value=0.1, max_value=100.0),
        stretch=st.floats(min_value=0.1, max_value=100.0),
    )
    def test_monotone_in_span_length(self, short, stretch):
        near = make_span("x", "a", "b", length=short)
        far = make_span("x", "a", "b", length=short + stretch)
        total_near = span_risetime_report(near, TRANSCEIVER, self.PROFILE).total
        total_far = span_risetime_report(far, TRANSCEIVER, self.PROFILE).total
        assert total_far > total_near


class TestReportInvariants:
    def test_total_must_be_root_sum_square(self):
        with pytest.raises(DomainError):
            RiseTimeReport(
                ceiling=70.0, dispersion_component=5.0, tx_component=60.0,
                rx_component=35.0, total=100.0, passed=False,
            )

    def test_pass_flag_must_match_comparison(self):
        with pytest.raises(DomainError):
            RiseTimeReport(
                ceiling=70.0, dispersion_component=0.0, tx_component=60.0,
                rx_component=35.0, total=DISPERSION_FREE_FLOOR, passed=False,
            )
