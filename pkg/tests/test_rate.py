"""Closed-form lower-tail rate functions and the conditioned-density variational problem."""

import math
import unittest

import numpy as np

from general.Error.error_manager import DomainError
from RateFn import (
    conditional_cost,
    conditional_cost_exact,
    conditional_density,
    optimal_rate_level,
    phi_minus,
    phi_tilde,
    rate_point,
    rate_table,
    variational_min,
    variational_objective,
)

FIVE_HALVES = 4.0 / (15.0 * math.pi)


class TestPhiMinus(unittest.TestCase):

    def test_origin(self):
        self.assertEqual(phi_minus(0.0), 0.0)

    def test_known_value(self):
        self.assertAlmostEqual(phi_minus(-10.0), 22.393, delta=0.02)

    def test_cubic_near_origin(self):
        z = -0.005
        self.assertAlmostEqual(phi_minus(z) / (abs(z) ** 3 / 12.0), 1.0, delta=0.01)

    def test_five_halves_far_out(self):
        z = -1e4
        self.assertAlmostEqual(phi_minus(z) / (FIVE_HALVES * abs(z) ** 2.5), 1.0, delta=0.01)

    def test_positive_z_rejected(self):
        with self.assertRaises(DomainError):
            phi_minus(0.5)


class TestPhiTilde(unittest.TestCase):

    def test_vanishes_at_origin(self):
        self.assertLessEqual(phi_tilde(-1e-8), 1e-6)
        with self.assertRaises(DomainError):
            phi_tilde(0.0)

    def test_dominates_phi_minus(self):
        for z in -np.logspace(-3, 4, 50):
            with self.subTest(z=z):
                self.assertGreaterEqual(phi_tilde(z), phi_minus(z))

    def test_same_five_halves_limit(self):
        z = -1e4
        self.assertAlmostEqual(phi_tilde(z) / (FIVE_HALVES * abs(z) ** 2.5), 1.0, delta=0.01)

    def test_ratio_bounded(self):
        ratios = [rate_point(z).ratio for z in -np.logspace(-3, 4, 500)]
        self.assertLessEqual(max(ratios), 1.151)
        self.assertGreater(max(ratios), 1.1)

    def test_ratio_tends_to_one_at_both_ends(self):
        self.assertLessEqual(rate_point(-0.01).ratio, 1.02)
        self.assertLessEqual(rate_point(-1e4).ratio, 1.02)


class TestRateTable(unittest.TestCase):

    def test_origin_row(self):
        point = rate_point(0.0)
        self.assertEqual(point.ratio, 1.0)
        self.assertEqual(point.to_row()['phi_minus'], 0.0)

    def test_rows(self):
        table = rate_table([-3.0, -1.0])
        self.assertEqual([p.z for p in table], [-3.0, -1.0])
        self.assertTrue(all(p.ratio >= 1.0 for p in table))


class TestConditionalDensity(unittest.TestCase):

    def test_support(self):
        self.assertEqual(conditional_density(0.5, -1.0), 0.0)

    def test_edge(self):
        self.assertEqual(conditional_density(-1.0, -1.0), math.inf)
        self.assertEqual(conditional_density(0.0, 0.0), 0.0)

    def test_unconditioned_profile(self):
        for a in (-0.5, -4.0):
            with self.subTest(a=a):
                self.assertAlmostEqual(conditional_density(a, 0.0), math.sqrt(-a) / math.pi)

    def test_cost_quadrature_is_exact(self):
        self.assertAlmostEqual(conditional_cost(-4.0, -1.0), conditional_cost_exact(-4.0, -1.0), delta=1e-8)
        self.assertEqual(conditional_cost(-4.0, -4.0), 0.0)


class TestVariational(unittest.TestCase):

    def test_minimizer_matches_closed_form(self):
        for z in (-0.5, -3.0, -20.0):
            with self.subTest(z=z):
                r_star, value = variational_min(z)
                self.assertAlmostEqual(r_star, optimal_rate_level(z), delta=1e-6)
                self.assertAlmostEqual(value, phi_tilde(z), delta=1e-8 * max(1.0, phi_tilde(z)))

    def test_unconditioned_endpoint(self):
        z = -3.0
        self.assertAlmostEqual(variational_objective(z, 0.0), FIVE_HALVES * abs(z) ** 2.5, places=12)

    def test_minimum_below_endpoints(self):
        z = -3.0
        result = variational_min(z)
        self.assertLessEqual(result.value, variational_objective(z, 0.0))
        self.assertLessEqual(result.value, variational_objective(z, z))


if __name__ == '__main__':
    unittest.main()
