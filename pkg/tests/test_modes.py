"""Mode detection, the (c+1)/c head ratio, and unimodality scans."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from urnwait import (
    Dist,
    DomainError,
    ParameterError,
    PmfTable,
    UrnParams,
    local_modes,
    p0_p1_ratio,
    pmf_table,
    unimodal_m_range,
)

_DUMMY = UrnParams(15, 6, 3)


def _table(probs):
    return PmfTable(Dist.MAXNH, _DUMMY, list(range(len(probs))), probs, None)


def _maxnh_table(N, m, c):
    return pmf_table(Dist.MAXNH, UrnParams(N, m, c))


@st.composite
def urn_params(draw, n_max=40):
    N = draw(st.integers(min_value=2, max_value=n_max))
    m = draw(st.integers(min_value=1, max_value=N - 1))
    c = draw(st.integers(min_value=1, max_value=min(m, N - m)))
    return UrnParams(N, m, c)


class TestLocalModes:
    def test_balanced_moderate_c_is_unimodal(self):
        report = local_modes(_maxnh_table(10, 5, 2))
        assert report.modes == [0]
        assert report.is_unimodal

    def test_lopsided_large_c_is_bimodal(self):
        report = local_modes(_maxnh_table(24, 8, 6))
        assert len(report.modes) == 2
        assert report.modes[0] == 0
        assert not report.is_unimodal

    def test_degenerate_point_mass(self):
        report = local_modes(_maxnh_table(6, 3, 3))
        assert report.modes == [0]
        assert report.is_unimodal
        assert math.isnan(report.p0_over_p1)

    def test_flat_tail_c_one(self):
        # m = c = 1 gives p(0) = 2/N and a flat 1/N tail: one mode at 0
        report = local_modes(_maxnh_table(10, 1, 1))
        assert report.modes == [0]
        assert report.is_unimodal
        assert report.p0_over_p1 == pytest.approx(2.0, rel=1e-12)

    def test_interior_plateau_counts_once_at_left_end(self):
        assert local_modes(_table([0.2, 0.3, 0.3, 0.2])).modes == [1]

    def test_rising_plateau_is_not_a_mode(self):
        assert local_modes(_table([0.3, 0.3, 0.4])).modes == [2]

    def test_uniform_table_has_one_mode(self):
        assert local_modes(_table([0.25, 0.25, 0.25, 0.25])).modes == [0]

    def test_two_separated_peaks(self):
        assert local_modes(_table([0.3, 0.1, 0.2, 0.1, 0.3])).modes == [0, 2, 4]


class TestHeadRatio:
    def test_known_values(self):
        assert p0_p1_ratio(UrnParams(15, 6, 3)) == pytest.approx(4 / 3, rel=1e-10)
        assert p0_p1_ratio(UrnParams(50, 25, 20)) == pytest.approx(21 / 20, rel=1e-10)
        assert p0_p1_ratio(UrnParams(10, 4, 1)) == pytest.approx(2.0, rel=1e-10)

    def test_point_support_raises(self):
        with pytest.raises(DomainError):
            p0_p1_ratio(UrnParams(6, 3, 3))

    def test_two_point_support_is_fine(self):
        assert p0_p1_ratio(UrnParams(9, 4, 4)) == pytest.approx(5 / 4, rel=1e-10)

    @given(params=urn_params(n_max=60))
    @settings(deadline=None, max_examples=100)
    def test_ratio_is_always_c_plus_one_over_c(self, params):
        if max(params.m - params.c, params.N - params.m - params.c) < 1:
            return
        want = (params.c + 1) / params.c
        assert p0_p1_ratio(params) == pytest.approx(want, rel=1e-10)


class TestReportShape:
    @given(params=urn_params())
    @settings(deadline=None, max_examples=60)
    def test_zero_is_always_a_mode(self, params):
        report = local_modes(pmf_table(Dist.MAXNH, params))
        assert report.modes
        assert report.modes[0] == 0
        assert report.is_unimodal == (len(report.modes) == 1)


class TestUnimodalRange:
    def test_small_population_rows(self):
        assert unimodal_m_range(10, 1) == [(1, 9)]
        assert unimodal_m_range(10, 2) == [(3, 7)]
        assert unimodal_m_range(10, 3) == [(4, 6)]
        assert unimodal_m_range(10, 4) == [(5, 5)]
        assert unimodal_m_range(10, 5) == []

    def test_mid_population_row(self):
        assert unimodal_m_range(50, 10) == [(20, 30)]

    def test_excluded_m_really_is_bimodal(self):
        # the c=2 row starts at m=3, so m=2 must carry a second mode
        assert not local_modes(_maxnh_table(10, 2, 2)).is_unimodal
        assert local_modes(_maxnh_table(10, 3, 2)).is_unimodal

    @pytest.mark.parametrize("N,c", [(24, 2), (24, 5), (30, 4)])
    def test_symmetric_about_half(self, N, c):
        intervals = unimodal_m_range(N, c)
        assert intervals
        mirrored = sorted((N - hi, N - lo) for lo, hi in intervals)
        assert intervals == mirrored

    def test_balanced_m_always_unimodal(self):
        for N in (10, 20, 30, 40):
            for c in range(1, N // 2):
                report = local_modes(_maxnh_table(N, N // 2, c))
                assert report.is_unimodal, (N, c)

    def test_rejects_impossible_shapes(self):
        with pytest.raises(ParameterError):
            unimodal_m_range(10, 6)
        with pytest.raises(ParameterError):
            unimodal_m_range(10, 0)
        with pytest.raises(ParameterError):
            unimodal_m_range(10.0, 2)
