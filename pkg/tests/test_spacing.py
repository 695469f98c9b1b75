import math
from pathlib import Path

import numpy as np
import pytest

from varextropy import (
    EstimatorConfig,
    Sample,
    TieError,
    default_window,
    ecdf,
    estimate_varextropy,
    spacing_terms,
)
from reference_impl import naive_spacing_statistic

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="module")
def vinyl_sample():
    values = np.loadtxt(DATA_DIR / "vinyl_chloride_transformed.txt")
    return Sample(values)


class TestSample:
    def test_sorts_and_freezes(self):
        s = Sample([0.9, 0.2, 0.5])
        np.testing.assert_array_equal(s.values, [0.2, 0.5, 0.9])
        assert s.n == len(s) == 3
        with pytest.raises(ValueError):
            s.values[0] = 0.0

    @pytest.mark.parametrize("bad", [[], [0.1, math.nan], [0.1, math.inf], [[0.1, 0.2]]])
    def test_rejects_bad_input(self, bad):
        with pytest.raises(ValueError):
            Sample(bad)


class TestEcdf:
    def test_step_definition(self):
        s = Sample([0.2, 0.5, 0.9])
        assert ecdf(s, 0.1) == 0.0
        assert ecdf(s, 0.5) == pytest.approx(2.0 / 3.0)
        assert ecdf(s, 0.9) == 1.0
        assert ecdf(s, 2.0) == 1.0

    def test_nondecreasing_step_function_with_unit_range(self):
        rng = np.random.default_rng(11)
        s = Sample(rng.random(40))
        grid = np.linspace(-0.5, 1.5, 400)
        values = ecdf(s, grid)
        assert np.all(np.diff(values) >= 0.0)
        steps = np.unique(values)
        expected = np.unique(np.searchsorted(s.values, grid, side="right")) / s.n
        np.testing.assert_array_equal(steps, expected)
        assert values[0] == 0.0 and values[-1] == 1.0
        assert np.all((values * s.n) == np.round(values * s.n))


class TestSpacingTerms:
    def test_hand_case_with_boundary_clamping(self):
        terms = spacing_terms(Sample([0.25, 0.5, 0.75, 1.0]), EstimatorConfig(m=1))
        np.testing.assert_array_equal(terms.y, [2.0, 1.0, 1.0, 2.0])

    def test_two_point_sample_clamps_both_sides(self):
        terms = spacing_terms(Sample([0.3, 0.8]), EstimatorConfig(m=1))
        np.testing.assert_array_equal(terms.y, [2.0, 2.0])

    def test_terms_scale_inversely_with_the_data(self):
        rng = np.random.default_rng(7)
        values = rng.random(25)
        y1 = spacing_terms(Sample(values), EstimatorConfig(m=3)).y
        y2 = spacing_terms(Sample(values * 10.0), EstimatorConfig(m=3)).y
        np.testing.assert_allclose(y2, y1 / 10.0, rtol=1e-14)

    def test_statistic_recomputed_from_terms_is_bit_identical(self):
        rng = np.random.default_rng(77)
        for _ in range(25):
            values = rng.random(rng.integers(4, 60))
            m = int(rng.integers(1, values.size // 2 + 1))
            sample = Sample(values)
            config = EstimatorConfig(m=m)
            terms = spacing_terms(sample, config)
            estimate = estimate_varextropy(sample, config)
            assert terms.statistic() == estimate
            # and a plain left-to-right float loop agrees bit-for-bit too
            s1 = 0.0
            s2 = 0.0
            for y in terms.y.tolist():
                s1 += y * y
                s2 += y
            n = terms.y.size
            assert s1 / (4.0 * n) - 0.25 * (s2 / n) * (s2 / n) == estimate


class TestEstimate:
    def test_two_point_sample_is_degenerate_zero(self):
        assert estimate_varextropy(Sample([0.3, 0.8]), EstimatorConfig(m=1)) == 0.0

    def test_hand_case(self):
        got = estimate_varextropy(Sample([0.25, 0.5, 0.75, 1.0]), EstimatorConfig(m=1))
        assert got == pytest.approx(0.0625, abs=1e-15)

    def test_vinyl_dataset_window_sixteen(self, vinyl_sample):
        got = estimate_varextropy(vinyl_sample, EstimatorConfig(m=16))
        assert got == pytest.approx(0.0329, abs=5e-4)

    def test_default_window_rule(self):
        assert default_window(2) == 1
        assert default_window(16) == 4
        assert default_window(34) == 6
        assert default_window(100) == 10
        assert default_window(3) == 1  # clamped to n//2

    @pytest.mark.parametrize("m", [0, -1, 3])
    def test_invalid_window_rejected(self, m):
        with pytest.raises(ValueError):
            estimate_varextropy(Sample([0.1, 0.4, 0.6, 0.9]), EstimatorConfig(m=m))

    def test_single_observation_rejected(self):
        with pytest.raises(ValueError):
            estimate_varextropy(Sample([0.5]))

    def test_accepts_unsorted_array_input(self):
        rng = np.random.default_rng(3)
        values = rng.random(30)
        direct = estimate_varextropy(values, EstimatorConfig(m=4))
        shuffled = values.copy()
        rng.shuffle(shuffled)
        assert estimate_varextropy(shuffled, EstimatorConfig(m=4)) == direct


class TestTies:
    def test_tie_raises_with_index_and_hint(self):
        sample = Sample([0.1, 0.1917, 0.1917, 0.1917, 0.8])
        with pytest.raises(TieError, match="jitter") as info:
            estimate_varextropy(sample, EstimatorConfig(m=1))
        assert info.value.index is not None

    def test_jitter_policy_resolves_ties_deterministically(self):
        sample = Sample([0.1, 0.1917, 0.1917, 0.1917, 0.8])
        config = EstimatorConfig(m=1, tie_policy="jitter")
        first = estimate_varextropy(sample, config)
        second = estimate_varextropy(sample, config)
        assert first == second
        assert math.isfinite(first) and first >= -1e-12

    def test_jitter_barely_moves_untied_data(self):
        rng = np.random.default_rng(15)
        values = rng.random(50)
        clean = estimate_varextropy(Sample(values), EstimatorConfig(m=5))
        jittered = estimate_varextropy(
            Sample(values), EstimatorConfig(m=5, tie_policy="jitter")
        )
        assert jittered == pytest.approx(clean, rel=1e-6)

    def test_all_equal_sample_cannot_be_jittered(self):
        with pytest.raises(TieError):
            estimate_varextropy(
                Sample([0.4, 0.4, 0.4, 0.4]), EstimatorConfig(m=1, tie_policy="jitter")
            )

    def test_unknown_tie_policy_rejected(self):
        with pytest.raises(ValueError):
            EstimatorConfig(tie_policy="wish")


class TestAgainstNaiveOracle:
    def test_small_samples_all_windows(self):
        rng = np.random.default_rng(2024)
        for _ in range(300):
            n = int(rng.integers(2, 9))
            values = rng.random(n)
            for m in range(1, n // 2 + 1):
                mine = estimate_varextropy(Sample(values), EstimatorConfig(m=m))
                ref = naive_spacing_statistic(values, m)
                assert mine == pytest.approx(ref, abs=1e-12)


class TestEstimatorProperties:
    def test_nonnegative(self):
        rng = np.random.default_rng(100)
        for _ in range(300):
            n = int(rng.integers(2, 80))
            values = rng.normal(size=n)
            m = int(rng.integers(1, n // 2 + 1))
            assert estimate_varextropy(Sample(values), EstimatorConfig(m=m)) >= -1e-12

    def test_location_invariance(self):
        rng = np.random.default_rng(101)
        for _ in range(100):
            n = int(rng.integers(4, 60))
            values = rng.random(n)
            m = int(rng.integers(1, n // 2 + 1))
            shift = rng.uniform(-100.0, 100.0)
            base = estimate_varextropy(Sample(values), EstimatorConfig(m=m))
            moved = estimate_varextropy(Sample(values + shift), EstimatorConfig(m=m))
            assert moved == pytest.approx(base, rel=1e-9, abs=1e-12)

    def test_scale_equivariance(self):
        rng = np.random.default_rng(102)
        for _ in range(100):
            n = int(rng.integers(4, 60))
            values = rng.random(n)
            m = int(rng.integers(1, n // 2 + 1))
            factor = rng.uniform(0.01, 100.0)
            base = estimate_varextropy(Sample(values), EstimatorConfig(m=m))
            scaled = estimate_varextropy(Sample(values * factor), EstimatorConfig(m=m))
            assert scaled == pytest.approx(base / factor**2, rel=1e-9, abs=1e-15)

    def test_permutation_invariance_is_exact(self):
        rng = np.random.default_rng(103)
        for _ in range(100):
            n = int(rng.integers(4, 60))
            values = rng.random(n)
            m = int(rng.integers(1, n // 2 + 1))
            base = estimate_varextropy(Sample(values), EstimatorConfig(m=m))
            perm = values.copy()
            rng.shuffle(perm)
            assert estimate_varextropy(Sample(perm), EstimatorConfig(m=m)) == base
