"""Airy zeros, the stochastic Airy operator sampler, counting statistics and rigidity bounds."""

import math
import unittest

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from general.Error.error_manager import DomainError, TruncationError
from Fredholm import counting_mean_exact, tracy_widom_cdf
from AiryProcess import (
    SaoMesh,
    SpectrumSample,
    airy_eigenvalue,
    airy_eigenvalues,
    chernoff_tail_bound,
    counting_mean_leading,
    counting_statistics,
    counting_variance_leading,
    exact_deficit_probability,
    markov_tail_bound,
    replicate_generator,
    rigidity_bounds,
    sample_counts,
    sample_sao_spectrum,
    sample_spectra,
    sandwich_constant,
    sandwich_estimate,
    zero_remainder,
)

LAMBDA_1 = 2.338107410459767
SMALL_MESH = SaoMesh(h=0.05, n=200)


class TestAiryZeros(unittest.TestCase):

    def test_first_zero(self):
        self.assertAlmostEqual(airy_eigenvalue(1), LAMBDA_1, delta=1e-9)

    def test_increasing(self):
        self.assertTrue(np.all(np.diff(airy_eigenvalues(100)) > 0))

    def test_remainder_decays(self):
        worst = max(n * abs(zero_remainder(n)) for n in range(1, 101))
        self.assertLessEqual(worst, 0.02)

    def test_index_domain(self):
        with self.assertRaises(DomainError):
            airy_eigenvalue(0)


class TestMesh(unittest.TestCase):

    def test_defaults(self):
        mesh = SaoMesh()
        self.assertAlmostEqual(mesh.length, 20.0)
        self.assertAlmostEqual(mesh.max_resolved_eigenvalue, 10.0)
        assert_allclose(mesh.points()[[0, -1]], [0.02, 20.0])

    def test_invalid(self):
        for kwargs in ({'h': 0.1}, {'h': 0.0}, {'n': 1}, {'beta': -1.0}):
            with self.subTest(**kwargs), self.assertRaises(DomainError):
                SaoMesh(**kwargs)

    def test_sample_shape_checked(self):
        with self.assertRaises(DomainError):
            SpectrumSample(mesh=SMALL_MESH, eigenvalues=np.array([1.0, 0.5]), seed=0, k=2)


class TestSampler(unittest.TestCase):

    def test_zero_noise_recovers_airy_zeros(self):
        sample = sample_sao_spectrum(SaoMesh(h=0.01, n=2000), 3, seed=0, noise_scale=0.0)
        assert_allclose(sample.eigenvalues, airy_eigenvalues(3), atol=1e-2)

    def test_reproducible(self):
        first = sample_sao_spectrum(SMALL_MESH, 2, seed=11, replicate=3)
        again = sample_sao_spectrum(SMALL_MESH, 2, seed=11, replicate=3)
        other = sample_sao_spectrum(SMALL_MESH, 2, seed=11, replicate=4)
        assert_array_equal(first.eigenvalues, again.eigenvalues)
        self.assertFalse(np.array_equal(first.eigenvalues, other.eigenvalues))

    def test_streams_differ_by_key(self):
        a = replicate_generator(1, 0).standard_normal(4)
        b = replicate_generator(0, 1).standard_normal(4)
        self.assertFalse(np.array_equal(a, b))

    def test_worker_count_does_not_change_results(self):
        serial = sample_spectra(SMALL_MESH, 2, seed=3, n_samples=8, workers=1)
        parallel = sample_spectra(SMALL_MESH, 2, seed=3, n_samples=8, workers=4)
        for one, other in zip(serial, parallel):
            assert_array_equal(one.eigenvalues, other.eigenvalues)
        self.assertEqual([s.replicate for s in parallel], list(range(8)))

    def test_mesh_too_short(self):
        with self.assertRaises(TruncationError):
            sample_sao_spectrum(SaoMesh(), 50, seed=0)
        with self.assertRaises(TruncationError):
            sample_counts(SMALL_MESH, 6.0, seed=0, n_samples=2)

    def test_airy_points_are_negated(self):
        sample = sample_sao_spectrum(SMALL_MESH, 2, seed=5)
        assert_array_equal(sample.airy_points, -sample.eigenvalues)


class TestRigidity(unittest.TestCase):

    def test_arithmetic(self):
        s, c, delta, epsilon = 4.0, 1.0, 0.5, 0.5
        bounds = rigidity_bounds(s, c, delta, epsilon, K=1.0, kappa=2.0)
        scale = c * s ** 1.5
        self.assertAlmostEqual(bounds.short_scale,
                               math.exp(-c * s ** 2.5 * (1.0 - s ** (-2.0 / 15.0))))
        self.assertAlmostEqual(bounds.counting_window,
                               math.exp(-scale * (math.log(scale) - 1.5 * math.log(math.log(s)))))
        self.assertAlmostEqual(bounds.eigenvalue_sandwich, 2.0 * math.exp(-4.0))
        self.assertEqual(len(bounds.as_tuple()), 3)

    def test_probabilities_for_large_s(self):
        for s in (3.0, 6.0, 10.0):
            with self.subTest(s=s):
                for value in rigidity_bounds(s, 1.0, 0.5, 0.5).as_tuple():
                    self.assertGreater(value, 0.0)
                    self.assertLessEqual(value, 1.0)

    def test_small_s_rejected(self):
        with self.assertRaises(DomainError):
            rigidity_bounds(1.0, 1.0, 0.5, 0.5)


class TestSandwich(unittest.TestCase):

    def test_deterministic_spectrum(self):
        sample = SpectrumSample(mesh=SaoMesh(), eigenvalues=airy_eigenvalues(5), seed=0, k=5)
        self.assertEqual(sandwich_constant(sample, 0.1), 0.0)

    def test_zero_epsilon_is_max_deviation(self):
        deviation = np.array([0.1, -0.3, 0.2, 0.0, 0.05])
        sample = SpectrumSample(mesh=SaoMesh(), eigenvalues=airy_eigenvalues(5) + deviation, seed=0, k=5)
        estimate = sandwich_estimate(sample, 0.0)
        self.assertAlmostEqual(estimate.value, 0.3)
        self.assertEqual(estimate.argmax, 2)
        self.assertTrue(estimate.truncated)

    def test_epsilon_domain(self):
        sample = SpectrumSample(mesh=SaoMesh(), eigenvalues=airy_eigenvalues(2), seed=0, k=2)
        with self.assertRaises(DomainError):
            sandwich_constant(sample, 1.0)


class TestDeficitBounds(unittest.TestCase):

    def test_markov_dominates_exact(self):
        exact = exact_deficit_probability(4.0, 0.1)
        self.assertAlmostEqual(exact, tracy_widom_cdf(-4.0), delta=1e-10)
        self.assertGreaterEqual(markov_tail_bound(4.0, 0.1, 2.0), exact)

    def test_chernoff_improves_on_fixed_v(self):
        bound, v = chernoff_tail_bound(4.0, 0.1)
        self.assertGreater(v, 0.0)
        self.assertLessEqual(bound, markov_tail_bound(4.0, 0.1, 2.0) * (1.0 + 1e-6))

    def test_impossible_deficit(self):
        self.assertEqual(exact_deficit_probability(4.0, 1.0), 0.0)

    def test_leading_moments(self):
        self.assertAlmostEqual(counting_mean_leading(4.0), 16.0 / (3.0 * math.pi))
        self.assertAlmostEqual(counting_variance_leading(math.e), 11.0 / (12.0 * math.pi ** 2))
        self.assertEqual(counting_variance_leading(1.0), 0.0)


@pytest.mark.slow
class TestMonteCarlo(unittest.TestCase):

    def test_lowest_eigenvalue_mean(self):
        samples = sample_spectra(SaoMesh(), 1, seed=0, n_samples=2000, workers=4)
        mean = float(np.mean([sample.eigenvalues[0] for sample in samples]))
        self.assertAlmostEqual(mean, 1.771, delta=0.15)

    def test_counting_mean(self):
        stats = counting_statistics(4.0, 2000, seed=0, workers=4)
        self.assertAlmostEqual(stats.mean, 1.698, delta=0.3)
        self.assertAlmostEqual(counting_mean_exact(4.0), counting_mean_leading(4.0), delta=0.1)
        self.assertGreater(stats.mean_ci_halfwidth, 0.0)

    def test_lowest_eigenvalue_law(self):
        n_samples = 2000
        samples = sample_spectra(SaoMesh(), 1, seed=0, n_samples=n_samples, workers=4)
        lowest = np.array([sample.eigenvalues[0] for sample in samples])
        for s in (1.0, 2.0, 3.0):
            with self.subTest(s=s):
                expected = tracy_widom_cdf(-s)
                standard_error = math.sqrt(expected * (1.0 - expected) / n_samples)
                self.assertLessEqual(abs(float(np.mean(lowest > s)) - expected), 3.0 * standard_error)

    def test_empty_window_matches_lowest_eigenvalue(self):
        counts = sample_counts(SaoMesh(), 2.0, seed=0, n_samples=200, workers=4)
        samples = sample_spectra(SaoMesh(), 1, seed=0, n_samples=200, workers=4)
        lowest = np.array([sample.eigenvalues[0] for sample in samples])
        assert_array_equal(counts == 0, lowest > 2.0)

    def test_sandwich_on_samples(self):
        samples = sample_spectra(SaoMesh(), 6, seed=4, n_samples=50)
        values = [sandwich_constant(sample, 0.5) for sample in samples]
        self.assertTrue(all(value >= 0.0 for value in values))
        self.assertTrue(all(math.isfinite(value) for value in values))


if __name__ == '__main__':
    unittest.main()
