"""Monte Carlo estimator tests: determinism, invariants, statistics."""

import math

import numpy as np
import pytest

from unimoments import (
    InternalCheckError,
    estimate_moment,
    exact_moment,
    sample_unimodular,
    validate_against_exact,
)
from unimoments import montecarlo
from unimoments.montecarlo import z_score


class TestSampler:
    def test_unit_modulus(self):
        u = sample_unimodular(6, seed=3, index=11)
        assert np.abs(np.abs(u) - 1.0).max() < 1e-12

    def test_bit_identical_for_fixed_key(self):
        a = sample_unimodular(4, seed=5, index=9)
        b = sample_unimodular(4, seed=5, index=9)
        assert (a == b).all()

    def test_distinct_indices_differ(self):
        a = sample_unimodular(4, seed=5, index=9)
        b = sample_unimodular(4, seed=5, index=10)
        c = sample_unimodular(4, seed=6, index=9)
        assert not (a == b).all()
        assert not (a == c).all()

    def test_scalar_case(self):
        u = sample_unimodular(1, seed=0, index=0)
        assert u.shape == (1, 1)
        assert abs(abs(u[0, 0]) - 1.0) < 1e-12

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            sample_unimodular(0, seed=1)
        with pytest.raises(ValueError):
            sample_unimodular(2, seed=1, index=-1)


class TestPerSampleTraces:
    def test_traces_stay_in_range(self):
        traces = montecarlo._all_traces(4, (1, 2, 3), 600, seed=2, workers=1)
        assert traces.min() >= 0.0
        assert traces.max() <= 4.0

    def test_normalized_trace_is_reciprocal_dimension(self):
        # tr(rho) = 1/n holds per sample up to floating-point residue
        for n in (1, 2, 5):
            traces = montecarlo._all_traces(n, (1,), 300, seed=4, workers=1)
            assert np.abs(traces - 1.0 / n).max() < 1e-12

    def test_hermitian_drift_guard(self, monkeypatch):
        monkeypatch.setattr(montecarlo, "HERMITIAN_DRIFT_TOL", -1.0)
        with pytest.raises(InternalCheckError):
            montecarlo._all_traces(3, (1,), 200, seed=1, workers=1)


class TestEstimateMoment:
    def test_deterministic_estimand_k1(self):
        est = estimate_moment(5, 1, 200, seed=0)
        assert est.mean == pytest.approx(0.2, abs=1e-12)
        assert est.std_error < 1e-12

    def test_scalar_dimension_all_mass_at_one(self):
        est = estimate_moment(1, 4, 150, seed=8)
        assert est.mean == pytest.approx(1.0, abs=1e-12)

    def test_repeatable(self):
        a = estimate_moment(3, 2, 500, seed=12)
        assert a == estimate_moment(3, 2, 500, seed=12)

    def test_worker_count_invariance(self):
        # 3 batches split across pools must give bit-identical results
        samples = montecarlo._BATCH * 2 + 100
        a = estimate_moment(2, 3, samples, seed=7, workers=1)
        b = estimate_moment(2, 3, samples, seed=7, workers=2)
        assert a.mean == b.mean and a.std_error == b.std_error

    def test_matches_exact_within_four_sigma(self):
        for n, k in ((2, 2), (3, 2), (2, 3)):
            est = estimate_moment(n, k, 20_000, seed=31)
            exact = float(exact_moment(k, n))
            assert abs(est.mean - exact) <= 4 * est.std_error

    def test_stderr_scales_like_inverse_sqrt_samples(self):
        small = estimate_moment(3, 3, 1000, seed=5)
        large = estimate_moment(3, 3, 4000, seed=5)
        ratio = small.std_error / large.std_error
        assert 2 / 1.5 <= ratio <= 2 * 1.5

    def test_preconditions(self):
        with pytest.raises(ValueError):
            estimate_moment(300, 2, 200, seed=0)
        with pytest.raises(ValueError):
            estimate_moment(2, 17, 200, seed=0)
        with pytest.raises(ValueError):
            estimate_moment(2, 2, 99, seed=0)


class TestZScore:
    def test_deterministic_floor(self):
        assert z_score(0.2, 0.0, 0.2) == 0.0
        assert z_score(0.2 + 5e-13, 1e-16, 0.2) == 0.0

    def test_regular_ratio(self):
        assert z_score(0.5, 0.1, 0.3) == pytest.approx(2.0)

    def test_zero_stderr_with_real_difference(self):
        assert z_score(1.0, 0.0, 0.5) == math.inf


class TestValidateAgainstExact:
    def test_small_sweep_passes(self):
        report = validate_against_exact(3, [2, 3], 4000, seed=13)
        assert report.passed
        assert len(report.entries) == 6

    def test_k1_rows_score_zero(self):
        report = validate_against_exact(2, [4], 500, seed=2)
        first = [e for e in report.entries if e.k == 1]
        assert first and all(e.z == 0.0 for e in first)

    def test_entries_carry_exact_values(self):
        report = validate_against_exact(2, [2], 400, seed=3)
        by_k = {e.k: e for e in report.entries}
        assert by_k[2].exact == pytest.approx(12 / 32)

    def test_invalid_k_max(self):
        with pytest.raises(ValueError):
            validate_against_exact(0, [2], 400, seed=1)
