"""
Tests for special functions, adaptive quadrature and the curvature integrals
"""

import math
import os
import sys
import unittest

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.errors import DomainError, QuadratureError
from src.numerics import (
    adaptive_integrate,
    erfc_scaled_tail,
    gamma_fn,
    gaussian_tail,
    i_k_integral,
    j_integral,
)


class TestSpecialFunctions(unittest.TestCase):
    """Gamma function and Gaussian tail"""

    def test_gamma_values(self):
        self.assertAlmostEqual(gamma_fn(1.0), 1.0, places=13)
        self.assertAlmostEqual(gamma_fn(0.5), math.sqrt(math.pi), places=13)
        self.assertAlmostEqual(gamma_fn(2.5), 0.75 * math.sqrt(math.pi), places=13)

    def test_gamma_domain(self):
        with self.assertRaises(DomainError):
            gamma_fn(0.0)
        with self.assertRaises(DomainError):
            gamma_fn(-1.5)

    def test_tail_values(self):
        self.assertAlmostEqual(erfc_scaled_tail(0.0), math.sqrt(math.pi) / 2, places=14)
        self.assertAlmostEqual(erfc_scaled_tail(-30.0), math.sqrt(math.pi), places=14)
        self.assertAlmostEqual(erfc_scaled_tail(1.0), 0.13940279264, places=10)
        self.assertEqual(erfc_scaled_tail(40.0), 0.0)

    def test_tail_completes_half_gaussian(self):
        for z in np.linspace(0.0, 5.0, 11):
            with self.subTest(z=z):
                head = adaptive_integrate(lambda x: np.exp(-x * x), 0.0, z, tol=1e-13).value
                self.assertLess(abs(erfc_scaled_tail(z) + head - math.sqrt(math.pi) / 2), 1e-12)

    def test_tail_is_vectorized(self):
        values = gaussian_tail(np.array([0.0, 1.0, 50.0]))
        self.assertEqual(values.shape, (3,))
        self.assertEqual(values[2], 0.0)


class TestAdaptiveIntegrate(unittest.TestCase):
    """Adaptive Gauss-Legendre quadrature"""

    def test_inverse_square_tail(self):
        result = adaptive_integrate(lambda x: x ** -2.0, 1.0, np.inf, tol=1e-12)
        self.assertAlmostEqual(result.value, 1.0, places=10)
        self.assertGreaterEqual(result.error_estimate, 0.0)

    def test_half_gaussian(self):
        result = adaptive_integrate(lambda x: np.exp(-x * x), 0.0, np.inf, tol=1e-12)
        self.assertAlmostEqual(result.value, math.sqrt(math.pi) / 2, places=10)

    def test_rational_tail(self):
        result = adaptive_integrate(lambda x: (x * x + 1.0) ** -2.0, 1.0, np.inf, tol=1e-12)
        self.assertAlmostEqual(result.value, math.pi / 8 - 0.25, places=10)

    def test_reversed_limits_change_sign(self):
        forward = adaptive_integrate(np.sin, 0.0, 2.0)
        backward = adaptive_integrate(np.sin, 2.0, 0.0)
        self.assertAlmostEqual(forward.value, 1.0 - math.cos(2.0), places=10)
        self.assertAlmostEqual(backward.value, -forward.value, places=14)

    def test_empty_interval(self):
        self.assertEqual(adaptive_integrate(np.cos, 1.0, 1.0).value, 0.0)

    def test_budget_exhaustion_carries_best_value(self):
        with self.assertRaises(QuadratureError) as context:
            adaptive_integrate(lambda x: np.sqrt(np.abs(x - 0.3)), 0.0, 1.0, tol=1e-15, max_intervals=2)
        self.assertGreater(context.exception.evaluations, 0)
        self.assertTrue(math.isfinite(context.exception.value))

    def test_invalid_tolerance(self):
        with self.assertRaises(DomainError):
            adaptive_integrate(np.cos, 0.0, 1.0, tol=0.0)


class TestCurvatureIntegrals(unittest.TestCase):
    """Closed-form J and the k-fold I_k integrals"""

    def test_j_integral_closed_form(self):
        self.assertAlmostEqual(j_integral(1.0), math.pi / 8 - 0.25, places=14)

    def test_j_integral_matches_quadrature(self):
        for a in (0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 15.0):
            with self.subTest(a=a):
                numeric = adaptive_integrate(lambda x: (x * x + a) ** -2.0, 1.0, np.inf, tol=1e-13)
                self.assertLess(abs(j_integral(a) - numeric.value), 1e-10)

    def test_j_integral_domain(self):
        with self.assertRaises(DomainError):
            j_integral(0.0)

    def test_one_dimensional_cases(self):
        self.assertAlmostEqual(i_k_integral(1, 1.0).value, 1.0, places=14)
        self.assertAlmostEqual(i_k_integral(1, 1.5).value, 0.5, places=14)

    def test_two_dimensional_closed_form(self):
        expected = 2.0 - math.sqrt(2.0)
        self.assertLess(abs(i_k_integral(2, 1.5).value - expected), 1e-8)
        self.assertLess(abs(i_k_integral(2, 1.5, method="tensor").value - expected), 1e-5)

    def test_tensor_agrees_with_reduction(self):
        reduced = i_k_integral(3, 2.0).value
        tensor = i_k_integral(3, 2.0, method="tensor").value
        self.assertLess(abs(tensor - reduced), 1e-3 * reduced)

    def test_sobol_agrees_with_reduction(self):
        reduced = i_k_integral(5, 3.5).value
        sampled = i_k_integral(5, 3.5, method="qmc", seed=3)
        self.assertLess(abs(sampled.value - reduced), 1e-2 * reduced)
        self.assertGreater(sampled.evaluations, 0)

    def test_decreasing_in_exponent(self):
        for k, exponents in ((2, (1.5, 2.0, 2.5, 3.0)), (3, (2.0, 2.5, 3.0, 4.0)), (4, (2.5, 3.0, 4.0))):
            with self.subTest(k=k):
                values = [i_k_integral(k, p).value for p in exponents]
                self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_product_bound(self):
        for k, p in ((2, 1.5), (2, 3.0), (3, 2.0), (3, 4.0), (4, 2.5), (4, 4.0)):
            with self.subTest(k=k, p=p):
                bound = (k / (2.0 * p - k)) ** k
                value = i_k_integral(k, p).value
                self.assertGreater(value, 0.0)
                self.assertLessEqual(value, bound)

    def test_divergent_exponent(self):
        with self.assertRaises(DomainError):
            i_k_integral(2, 1.0)
        with self.assertRaises(DomainError):
            i_k_integral(3, 1.5)


if __name__ == "__main__":
    unittest.main()
