import math

import numpy as np
import pytest

from hurstlab.errors import NonDivisorWindow, SeriesError, WindowTooSmall
from hurstlab.series import (
    as_series,
    centered_cumsum,
    partition,
    plain_cumsum,
    range_of,
    subseries_stats,
)


class TestAsSeries:
    def test_rejects_nan(self):
        with pytest.raises(SeriesError, match="index 1"):
            as_series([1.0, float("nan"), 2.0])

    def test_rejects_infinity(self):
        with pytest.raises(SeriesError):
            as_series([1.0, float("inf")])

    def test_rejects_short_series(self):
        with pytest.raises(SeriesError, match=">= 2"):
            as_series([1.0])

    def test_rejects_2d(self):
        with pytest.raises(SeriesError, match="1-D"):
            as_series([[1.0, 2.0], [3.0, 4.0]])


class TestPartition:
    def test_contiguous_split(self):
        parts = partition([1, 2, 3, 4, 5, 6], 3)
        assert len(parts) == 2
        np.testing.assert_array_equal(parts[0], [1, 2, 3])
        np.testing.assert_array_equal(parts[1], [4, 5, 6])

    def test_whole_series_window(self):
        parts = partition([1, 2, 3, 4], 4)
        assert len(parts) == 1
        np.testing.assert_array_equal(parts[0], [1, 2, 3, 4])

    def test_non_divisor_rejected(self):
        with pytest.raises(NonDivisorWindow):
            partition([1, 2, 3, 4, 5, 6], 4)

    def test_window_below_two_rejected(self):
        with pytest.raises(WindowTooSmall):
            partition([1, 2, 3, 4], 1)

    def test_concat_is_identity(self):
        rng = np.random.default_rng(7)
        series = rng.normal(size=24)
        for n in (2, 3, 4, 6, 8, 12, 24):
            parts = partition(series, n)
            np.testing.assert_array_equal(np.concatenate(parts), series)


class TestSubseriesStats:
    def test_constant_series(self):
        s = subseries_stats([2, 2, 2])
        assert s.mean == 2.0
        assert s.std_dev == 0.0

    def test_two_points_population(self):
        s = subseries_stats([1, 3])
        assert s.mean == pytest.approx(2.0, abs=1e-12)
        assert s.std_dev == pytest.approx(1.0, abs=1e-12)

    def test_three_points_population(self):
        s = subseries_stats([1, 2, 3])
        assert s.mean == pytest.approx(2.0, abs=1e-12)
        assert s.std_dev == pytest.approx(math.sqrt(2.0 / 3.0), abs=1e-12)

    def test_sample_mode(self):
        s = subseries_stats([1, 3], sd_mode="sample")
        assert s.std_dev == pytest.approx(math.sqrt(2.0), abs=1e-12)

    def test_unknown_mode_rejected(self):
        with pytest.raises(SeriesError, match="sd_mode"):
            subseries_stats([1, 2], sd_mode="bessel")

    def test_std_scales_linearly(self):
        rng = np.random.default_rng(3)
        series = rng.exponential(size=50)
        base = subseries_stats(series).std_dev
        for a in (-2.5, 0.5, 3.0):
            scaled = subseries_stats(a * series).std_dev
            assert scaled == pytest.approx(abs(a) * base, rel=1e-12)


class TestCumsums:
    def test_centered_hand_case(self):
        np.testing.assert_allclose(centered_cumsum([1, 2, 3], 2.0), [-1, -1, 0], atol=1e-15)

    def test_centered_constants(self):
        np.testing.assert_array_equal(centered_cumsum([4, 4, 4], 4.0), [0, 0, 0])

    def test_centered_two_points(self):
        np.testing.assert_allclose(centered_cumsum([5, 1], 3.0), [2, 0], atol=1e-15)

    def test_centered_ends_at_zero(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            series = rng.exponential(size=rng.integers(2, 200))
            profile = centered_cumsum(series, series.mean())
            assert abs(profile[-1]) <= 1e-9 * np.abs(series).sum()

    def test_plain_running_sum(self):
        np.testing.assert_array_equal(plain_cumsum([1, 2, 3]), [1, 3, 6])

    def test_plain_zeros(self):
        np.testing.assert_array_equal(plain_cumsum([0, 0, 0]), [0, 0, 0])

    def test_plain_alternating(self):
        np.testing.assert_array_equal(plain_cumsum([1, -1, 1, -1]), [1, 0, 1, 0])


class TestRangeOf:
    def test_hand_cases(self):
        assert range_of([-1, -1, 0]) == 1.0
        assert range_of([0, 0, 0]) == 0.0
        assert range_of([3, -2, 5]) == 7.0

    def test_empty_rejected(self):
        with pytest.raises(SeriesError):
            range_of([])

    def test_translation_invariant(self):
        rng = np.random.default_rng(5)
        profile = rng.normal(size=40)
        base = range_of(profile)
        for c in (-10.0, 0.25, 1e6):
            assert range_of(profile + c) == pytest.approx(base, rel=1e-9)

    def test_range_of_centered_cumsum_offset_invariant(self):
        rng = np.random.default_rng(9)
        series = rng.exponential(size=60)
        base = range_of(centered_cumsum(series, series.mean()))
        for c in (-3.0, 7.5, 1e4):
            shifted = series + c
            r = range_of(centered_cumsum(shifted, shifted.mean()))
            assert r == pytest.approx(base, rel=1e-9)
