"""Special functions checked against scipy.special and mpmath."""

import math
import unittest

import mpmath
import numpy as np
from numpy.testing import assert_allclose
from scipy.special import airy, ellipe, ellipj, ellipkm1

from general.Error.error_manager import DomainError, RangeError
from Specfun import (
    AIRY_CUTOFF,
    Linear,
    RealLineTanh,
    SemiInfiniteRational,
    airy_ai,
    airy_ai_array,
    airy_asymptotic,
    airy_series,
    barnes_g_sym,
    composite_rule,
    elliptic_ke,
    elliptic_nome,
    gauss_legendre,
    jacobi_cd,
    log_barnes_g,
)


class TestAiry(unittest.TestCase):

    POINTS = np.array([-25.0, -12.0, -8.5, -5.0, -2.3381074104597670, -1.0, 0.0, 0.7, 2.5, 5.0, 8.9, 12.0, 20.0])

    def test_matches_scipy(self):
        ai, aip = airy_ai_array(self.POINTS)
        ref_ai, ref_aip, _, _ = airy(self.POINTS)
        assert_allclose(ai, ref_ai, rtol=1e-10, atol=1e-13)
        assert_allclose(aip, ref_aip, rtol=1e-10, atol=1e-12)

    def test_scalar_wrapper(self):
        ai, aip = airy_ai(1.5)
        ref_ai, ref_aip, _, _ = airy(1.5)
        self.assertAlmostEqual(ai, ref_ai, places=13)
        self.assertAlmostEqual(aip, ref_aip, places=13)

    def test_first_zero(self):
        ai, _ = airy_ai(-2.338107410459767)
        self.assertLess(abs(ai), 1e-13)

    def test_branches_agree_at_the_seam(self):
        for x in (-AIRY_CUTOFF, AIRY_CUTOFF):
            with self.subTest(x=x):
                series_ai, series_aip = airy_series(x)
                asym_ai, asym_aip = airy_asymptotic(x)
                assert_allclose(series_ai, asym_ai, rtol=1e-9, atol=1e-14)
                assert_allclose(series_aip, asym_aip, rtol=1e-9, atol=1e-13)

    def test_mid_range_against_mpmath(self):
        for x in (-7.3, 6.1):
            with self.subTest(x=x):
                ai, aip = airy_ai(x)
                self.assertAlmostEqual(ai, float(mpmath.airyai(x)), places=14)
                self.assertAlmostEqual(aip, float(mpmath.airyai(x, derivative=1)), places=13)

    def test_rejects_non_finite(self):
        with self.assertRaises(DomainError):
            airy_ai(float('nan'))


class TestElliptic(unittest.TestCase):

    def test_against_scipy(self):
        for kappa in (0.0, 0.3, 0.7, 0.99, 1.0 - 1e-8):
            with self.subTest(kappa=kappa):
                pair = elliptic_ke(kappa)
                # complementary parameter formed the same way as the AGM start
                p = (1.0 - kappa) * (1.0 + kappa)
                self.assertFalse(pair.divergent)
                assert_allclose(pair.K, ellipkm1(p), rtol=1e-12)
                assert_allclose(pair.E, ellipe(1.0 - p), rtol=1e-12)

    def test_pole_at_one(self):
        pair = elliptic_ke(1.0)
        self.assertTrue(pair.divergent)
        self.assertEqual(pair.E, 1.0)
        self.assertTrue(math.isinf(pair.K))

    def test_rejects_modulus_outside_unit_interval(self):
        with self.assertRaises(DomainError):
            elliptic_ke(1.5)

    def test_nome(self):
        self.assertEqual(elliptic_nome(0.0), 0.0)
        # kappa = 1/sqrt(2) is self-complementary, so q = exp(-pi)
        assert_allclose(elliptic_nome(math.sqrt(0.5)), math.exp(-math.pi), rtol=1e-13)

    def test_cd_against_ellipj(self):
        for kappa in (0.1, 0.5, 0.9, 0.999):
            for z in (-2.2, 0.3, 1.7, 4.0, 11.0):
                with self.subTest(kappa=kappa, z=z):
                    _, cn, dn, _ = ellipj(z, kappa * kappa)
                    assert_allclose(jacobi_cd(z, kappa), cn / dn, rtol=1e-10, atol=1e-12)

    def test_cd_degenerates_to_cosine(self):
        self.assertEqual(jacobi_cd(0.8, 0.0), math.cos(0.8))

    def test_cd_quarter_period(self):
        K = elliptic_ke(0.6).K
        self.assertAlmostEqual(jacobi_cd(0.0, 0.6), 1.0, places=14)
        self.assertAlmostEqual(jacobi_cd(K, 0.6), 0.0, places=12)

    def test_cd_bounded_on_real_line(self):
        kappa = 0.999
        K = elliptic_ke(kappa).K
        for z in np.linspace(-6.0 * K, 6.0 * K, 241):
            with self.subTest(z=z):
                value = jacobi_cd(float(z), kappa)
                self.assertTrue(math.isfinite(value))
                self.assertLessEqual(abs(value), 1.0 + 1e-12)


class TestBarnes(unittest.TestCase):

    def test_symmetric_combination_against_mpmath(self):
        for v in (0.5, 1.0, 3.0, 6.0):
            with self.subTest(v=v):
                y = v / (2.0 * math.pi)
                reference = mpmath.log(mpmath.barnesg(1 + 1j * y) * mpmath.barnesg(1 - 1j * y)).real
                assert_allclose(barnes_g_sym(v), float(reference), rtol=1e-10, atol=1e-14)

    def test_zero(self):
        self.assertEqual(barnes_g_sym(0.0), 0.0)

    def test_log_g_against_mpmath(self):
        for z in (0.3 + 0.2j, -0.5, 0.8j):
            with self.subTest(z=z):
                reference = complex(mpmath.log(mpmath.barnesg(1 + z)))
                assert_allclose(log_barnes_g(z), reference, rtol=1e-12, atol=1e-14)

    def test_outside_convergence_disc(self):
        with self.assertRaises(RangeError):
            log_barnes_g(1.0)
        with self.assertRaises(RangeError):
            barnes_g_sym(2.0 * math.pi)


class TestQuadrature(unittest.TestCase):

    def test_against_numpy_leggauss(self):
        for order in (2, 5, 40, 200):
            with self.subTest(order=order):
                rule = gauss_legendre(order)
                nodes, weights = np.polynomial.legendre.leggauss(order)
                assert_allclose(rule.nodes, nodes, rtol=0.0, atol=1e-14)
                assert_allclose(rule.weights, weights, rtol=0.0, atol=1e-14)

    def test_polynomial_exactness(self):
        rule = gauss_legendre(6).with_transform(Linear(0.0, 2.0))
        self.assertAlmostEqual(rule.integrate(lambda x: x ** 11), 2.0 ** 12 / 12.0, places=9)

    def test_semi_infinite(self):
        rule = gauss_legendre(120).with_transform(SemiInfiniteRational(1.0, 2.0))
        self.assertAlmostEqual(rule.integrate(lambda x: np.exp(-x)), math.exp(-1.0), places=10)

    def test_real_line(self):
        rule = gauss_legendre(100).with_transform(RealLineTanh(0.5, 1.0))
        self.assertAlmostEqual(rule.integrate(lambda x: np.exp(-x * x)), math.sqrt(math.pi), places=7)

    def test_composite_rule(self):
        x, w = composite_rule([0.0, 1.0, 3.0, 3.5], 8)
        self.assertEqual(x.size, 24)
        self.assertAlmostEqual(float(np.dot(w, np.cos(x))), math.sin(3.5), places=13)

    def test_order_bounds(self):
        with self.assertRaises(DomainError):
            gauss_legendre(1)
        with self.assertRaises(DomainError):
            composite_rule([0.0, 0.0, 1.0], 4)


if __name__ == '__main__':
    unittest.main()
