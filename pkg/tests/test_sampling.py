import math

import numpy as np
import pytest
from scipy import stats

from hurstlab.errors import SeriesError
from hurstlab.sampling import (
    ExponentialSpec,
    RngStream,
    derive_stream,
    exponential_inverse_cdf,
    exponential_sample,
)

GRID_LAMBDAS = (0.1, 0.5, 1.5, 3.0, 5.0, 7.0)


class TestDeriveStream:
    def test_same_coordinates_same_draws(self):
        a = derive_stream(42, 3, 7).uniforms(100)
        b = derive_stream(42, 3, 7).uniforms(100)
        np.testing.assert_array_equal(a, b)

    def test_different_iterations_differ(self):
        a = derive_stream(42, 3, 7).uniforms(100)
        b = derive_stream(42, 3, 8).uniforms(100)
        assert not np.array_equal(a, b)

    def test_different_cells_differ(self):
        a = derive_stream(42, 3, 7).uniforms(100)
        b = derive_stream(42, 4, 7).uniforms(100)
        assert not np.array_equal(a, b)

    def test_different_seeds_differ(self):
        a = derive_stream(1, 0, 0).uniforms(100)
        b = derive_stream(2, 0, 0).uniforms(100)
        assert not np.array_equal(a, b)

    def test_negative_seed_accepted(self):
        assert derive_stream(-1, 0, 0).uniforms(4).shape == (4,)


class TestExponentialSpec:
    def test_rejects_nonpositive_rate(self):
        with pytest.raises(SeriesError):
            ExponentialSpec(lam=0.0, length=16)

    def test_rejects_short_length(self):
        with pytest.raises(SeriesError):
            ExponentialSpec(lam=1.0, length=1)


class TestExponentialSample:
    def test_inverse_cdf_hand_value(self):
        assert exponential_inverse_cdf(0.5, 1.0) == pytest.approx(math.log(2), abs=1e-12)

    def test_stubbed_uniform_source(self):
        class FixedGenerator:
            def random(self, size):
                return np.full(size, 0.5)

        stream = RngStream(generator=FixedGenerator(), master_seed=0, stream_id=(0, 0))
        sample = exponential_sample(stream, ExponentialSpec(lam=2.0, length=3))
        np.testing.assert_allclose(sample, math.log(2) / 2.0, rtol=1e-12)

    def test_zero_uniform_mapped_to_positive(self):
        class ZeroGenerator:
            def random(self, size):
                return np.zeros(size)

        stream = RngStream(generator=ZeroGenerator(), master_seed=0, stream_id=(0, 0))
        sample = exponential_sample(stream, ExponentialSpec(lam=1.0, length=2))
        assert np.all(np.isfinite(sample))
        assert np.all(sample > 0)

    def test_law_of_large_numbers(self):
        lam, length = 0.5, 2**16
        sample = exponential_sample(derive_stream(9, 0, 0), ExponentialSpec(lam, length))
        assert abs(sample.mean() - 2.0) <= 3.0 * 2.0 / math.sqrt(length)

    def test_variance_matches_analytic(self):
        lam, length = 5.0, 2**16
        sample = exponential_sample(derive_stream(10, 0, 0), ExponentialSpec(lam, length))
        assert sample.var() == pytest.approx(1.0 / lam**2, rel=0.05)

    @pytest.mark.parametrize("lam", GRID_LAMBDAS)
    def test_all_draws_positive_and_finite(self, lam):
        sample = exponential_sample(derive_stream(11, 0, 0), ExponentialSpec(lam, 10**6))
        assert np.all(sample > 0)
        assert np.all(np.isfinite(sample))

    def test_ks_against_exponential_cdf(self):
        lam = 1.5
        sample = exponential_sample(derive_stream(12, 0, 0), ExponentialSpec(lam, 10**4))
        result = stats.kstest(sample, "expon", args=(0, 1.0 / lam))
        assert result.pvalue > 0.001
