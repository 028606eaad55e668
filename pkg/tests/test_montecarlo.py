"""
Tests for path sampling, sausage coverage and the Monte Carlo volume estimators
"""

import math
import os
import sys
import tempfile
import unittest

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.coefficients import c_coeff
from src.errors import DomainError, PartialResultError, UnsupportedError
from src.geometry import Ball, Orientation, circle
from src.kernels import q_k3_exact
from src.montecarlo import (
    BiasMode,
    PathPolyline,
    bridge_array,
    coverage,
    estimate_Q,
    estimate_Z,
    mc_record,
    motion_array,
    path_stream,
    sample_bridge,
    sample_motion,
    sausage_covers,
    write_records,
)
from src.series_fit import load_samples


class TestPaths(unittest.TestCase):
    """Brownian motion and bridge sampling"""

    def test_streams_are_reproducible(self):
        first = path_stream(3, 1, 2).standard_normal(4)
        again = path_stream(3, 1, 2).standard_normal(4)
        other = path_stream(3, 2, 2).standard_normal(4)
        np.testing.assert_array_equal(first, again)
        self.assertFalse(np.array_equal(first, other))

    def test_bridge_is_pinned(self):
        path = sample_bridge(3, 0.5, 16, path_stream(0, 0, 0))
        self.assertTrue(path.pinned)
        self.assertEqual(path.steps, 16)
        self.assertAlmostEqual(path.t, 0.5)
        np.testing.assert_array_equal(path.points[0], np.zeros(3))
        np.testing.assert_array_equal(path.points[-1], np.zeros(3))

    def test_motion_shape(self):
        path = sample_motion(2, 1.0, 8, path_stream(0, 0, 0))
        self.assertFalse(path.pinned)
        self.assertEqual(path.points.shape, (9, 2))
        self.assertGreater(path.max_norm, 0.0)

    def test_motion_second_moment(self):
        m, t, count = 3, 0.5, 40000
        ends = motion_array(m, t, 4, count, path_stream(1, 0, 0))[:, -1, :]
        squared = np.sum(ends ** 2, axis=1)
        stderr = np.std(squared, ddof=1) / math.sqrt(count)
        self.assertLess(abs(np.mean(squared) - 2.0 * m * t), 4.0 * stderr)

    def test_motion_increments_uncorrelated(self):
        count = 40000
        paths = motion_array(1, 1.0, 2, count, path_stream(2, 0, 0))[:, :, 0]
        first, second = paths[:, 1] - paths[:, 0], paths[:, 2] - paths[:, 1]
        correlation = np.corrcoef(first, second)[0, 1]
        self.assertLess(abs(correlation), 4.0 / math.sqrt(count))

    def test_bridge_midpoint_variance(self):
        count = 100000
        midpoints = bridge_array(1, 1.0, 2, count, path_stream(4, 0, 0))[:, 1, 0]
        variance = np.var(midpoints, ddof=1)
        self.assertLess(abs(variance - 0.5), 4.0 * 0.5 * math.sqrt(2.0 / count))

    def test_bridge_time_reversal(self):
        count = 100000
        paths = bridge_array(1, 1.0, 4, count, path_stream(5, 0, 0))[:, :, 0]
        early, late = np.var(paths[:, 1], ddof=1), np.var(paths[:, 3], ddof=1)
        self.assertLess(abs(early - late), 4.0 * 0.375 * math.sqrt(4.0 / count))

    def test_invalid_grid(self):
        with self.assertRaises(DomainError):
            bridge_array(2, 1.0, 1, 1, path_stream(0, 0, 0))
        with self.assertRaises(DomainError):
            motion_array(2, 0.0, 4, 1, path_stream(0, 0, 0))

    def test_polyline_validation(self):
        times = np.linspace(0.0, 1.0, 3)
        with self.assertRaises(ValueError):
            PathPolyline(dim=1, times=times, points=np.array([[1.0], [0.0], [0.0]]), pinned=False)
        with self.assertRaises(ValueError):
            PathPolyline(dim=1, times=times, points=np.array([[0.0], [0.0], [1.0]]), pinned=True)


class TestCoverage(unittest.TestCase):
    """Sausage membership of points"""

    def setUp(self):
        self.ball = Ball(m=2, r=0.1)
        self.path = sample_bridge(2, 0.01, 16, path_stream(0, 0, 0))

    def test_point_on_path(self):
        point = self.path.points[5]
        self.assertTrue(sausage_covers(self.path, self.ball, point))
        self.assertEqual(sausage_covers(self.path, self.ball, point, BiasMode.BRIDGE_CORRECTED), 1.0)

    def test_far_point(self):
        self.assertFalse(sausage_covers(self.path, self.ball, [10.0, 10.0]))
        self.assertEqual(sausage_covers(self.path, self.ball, [10.0, 10.0], BiasMode.BRIDGE_CORRECTED), 0.0)

    def test_correction_only_adds_coverage(self):
        rng = np.random.default_rng(0)
        x = rng.uniform(-0.5, 0.5, size=(500, 2))
        dt = self.path.t / self.path.steps
        plain = coverage(x, self.path.points, self.ball.r, dt, BiasMode.POLYLINE)
        corrected = coverage(x, self.path.points, self.ball.r, dt, BiasMode.BRIDGE_CORRECTED)
        self.assertTrue(np.all(corrected >= plain))
        self.assertTrue(np.all((corrected >= 0.0) & (corrected <= 1.0)))

    def test_planar_curve_rejected(self):
        with self.assertRaises(UnsupportedError):
            sausage_covers(self.path, circle(1.0), [0.0, 0.0])


class TestEstimators(unittest.TestCase):
    """Hit-or-miss estimates of Z and Q"""

    def test_vanishing_time_gives_volume(self):
        estimate = estimate_Z(1, 2, Ball(m=2, r=1.0), 1e-8, steps=8, points_per_replica=2000,
                              replicas=16, seed=1)
        self.assertEqual(estimate.replicas, 16)
        self.assertGreater(estimate.stderr, 0.0)
        self.assertLess(abs(estimate.mean - math.pi), 4.0 * estimate.stderr + 1e-3)

    def test_deterministic_across_workers(self):
        kwargs = dict(steps=16, points_per_replica=500, replicas=6, seed=9)
        single = estimate_Z(2, 2, Ball(m=2, r=1.0), 0.01, workers=1, **kwargs)
        threaded = estimate_Z(2, 2, Ball(m=2, r=1.0), 0.01, workers=3, **kwargs)
        self.assertEqual(single.mean, threaded.mean)
        self.assertEqual(single.stderr, threaded.stderr)

    def test_stratified_points(self):
        estimate = estimate_Z(1, 2, Ball(m=2, r=1.0), 1e-8, steps=4, points_per_replica=1024,
                              replicas=4, seed=0, stratified=True)
        self.assertLess(abs(estimate.mean - math.pi), 0.1)

    def test_time_budget(self):
        with self.assertRaises(PartialResultError) as context:
            estimate_Q(1, 2, Ball(m=2, r=1.0), 0.01, steps=8, points_per_replica=200,
                       replicas=4, workers=1, time_budget=1e-9)
        self.assertLess(context.exception.completed, 4)
        self.assertEqual(context.exception.estimate.replicas, context.exception.completed)

    def test_invalid_arguments(self):
        with self.assertRaises(UnsupportedError):
            estimate_Z(1, 2, circle(1.0), 0.01, replicas=2)
        with self.assertRaises(DomainError):
            estimate_Z(1, 3, Ball(m=2, r=1.0), 0.01, replicas=2)
        with self.assertRaises(DomainError):
            estimate_Q(1, 2, Ball(m=2, r=1.0), -1.0, replicas=2)


class TestEstimatorAccuracy(unittest.TestCase):
    """Monte Carlo estimates against the exterior-ball quadrature and the pinned coefficients"""

    UNIT_BALL = Ball(m=3, r=1.0)
    UNIT_DISK = Ball(m=2, r=1.0)

    @classmethod
    def setUpClass(cls):
        # coarse paths: the polyline misses excursions between vertices
        cls.t = 0.01
        cls.exact = q_k3_exact(1, cls.t).value
        coarse = dict(points_per_replica=1000, replicas=1024, seed=5, workers=4)
        cls.polyline = estimate_Q(1, 3, cls.UNIT_BALL, cls.t, steps=16, mode=BiasMode.POLYLINE, **coarse)
        cls.corrected = estimate_Q(1, 3, cls.UNIT_BALL, cls.t, steps=16,
                                   mode=BiasMode.BRIDGE_CORRECTED, **coarse)
        cls.finer = estimate_Q(1, 3, cls.UNIT_BALL, cls.t, steps=64, mode=BiasMode.POLYLINE, **coarse)

    def test_single_sausage_against_quadrature(self):
        estimate = estimate_Q(1, 3, self.UNIT_BALL, self.t, steps=512, points_per_replica=4000,
                              replicas=128, seed=2, mode=BiasMode.BRIDGE_CORRECTED, workers=4)
        self.assertLess(abs(estimate.mean - self.exact), 3.0 * estimate.stderr)
        self.assertLess(estimate.stderr / estimate.mean, 0.01)

    def test_polyline_bias_is_negative(self):
        self.assertLess(self.polyline.mean + 3.0 * self.polyline.stderr, self.exact)

    def test_bridge_correction_halves_bias(self):
        polyline_bias = abs(self.polyline.mean - self.exact)
        corrected_bias = abs(self.corrected.mean - self.exact)
        self.assertLess(corrected_bias, 0.5 * polyline_bias)

    def test_polyline_improves_with_steps(self):
        self.assertLess(self.polyline.mean, self.finer.mean)

    def test_monotone_in_time(self):
        means = [
            estimate_Q(1, 3, self.UNIT_BALL, t, steps=32, points_per_replica=1000, replicas=64,
                       seed=8, mode=BiasMode.BRIDGE_CORRECTED, workers=4).mean
            for t in (0.005, 0.01, 0.02)
        ]
        self.assertTrue(all(a < b for a, b in zip(means, means[1:])))

    def test_enlarged_box(self):
        kwargs = dict(steps=16, points_per_replica=100000, replicas=32, seed=6, workers=4)
        base = estimate_Q(1, 3, self.UNIT_BALL, self.t, **kwargs)
        enlarged = estimate_Q(1, 3, self.UNIT_BALL, self.t, box_scale=1.2, **kwargs)
        self.assertLess(abs(enlarged.mean - base.mean), base.stderr)
        with self.assertRaises(DomainError):
            estimate_Q(1, 3, self.UNIT_BALL, self.t, replicas=2, box_scale=0.9)

    def test_stderr_scales_with_replicas(self):
        kwargs = dict(steps=8, points_per_replica=500, seed=7, workers=4)
        small = estimate_Q(1, 3, self.UNIT_BALL, self.t, replicas=256, **kwargs)
        large = estimate_Q(1, 3, self.UNIT_BALL, self.t, replicas=1024, **kwargs)
        ratio = small.stderr / large.stderr
        self.assertGreater(ratio, 2.0 * 0.8)
        self.assertLess(ratio, 2.0 * 1.2)

    def test_two_sausage_identity(self):
        t = 0.02
        combined = 2.0 * q_k3_exact(1, t).value - q_k3_exact(1, 2.0 * t).value
        estimate = estimate_Q(2, 3, self.UNIT_BALL, t, steps=128, points_per_replica=2000,
                              replicas=512, seed=11, mode=BiasMode.BRIDGE_CORRECTED, workers=4)
        self.assertLess(abs(estimate.mean - combined), 3.0 * estimate.stderr)

    def test_pinned_two_term_prediction(self):
        for k in (1, 2):
            c1 = c_coeff(k, 1, self.UNIT_DISK)
            c2 = c_coeff(k, 2, self.UNIT_DISK, Orientation.OUTWARD)
            for t in (0.005, 0.01):
                with self.subTest(k=k, t=t):
                    estimate = estimate_Z(k, 2, self.UNIT_DISK, t, steps=128, points_per_replica=2000,
                                          replicas=160, seed=13, mode=BiasMode.BRIDGE_CORRECTED,
                                          workers=4)
                    root = math.sqrt(t)
                    scaled = (estimate.mean - math.pi) / root
                    self.assertLess(abs(scaled - (c1 + c2 * root)), 3.0 * estimate.stderr / root)


class TestRecords(unittest.TestCase):
    """JSON-lines Monte Carlo records"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_records_load_as_samples(self):
        body = Ball(m=2, r=1.0)
        records = []
        for t in (0.02, 0.01):
            estimate = estimate_Z(1, 2, body, t, steps=8, points_per_replica=200, replicas=3, seed=0)
            records.append(mc_record(estimate, "Z", 1, 2, t, BiasMode.POLYLINE))
        path = write_records(records, os.path.join(self.temp_dir.name, "mc", "z.jsonl"))
        samples = load_samples(path)
        self.assertEqual(list(samples['t']), [0.01, 0.02])
        self.assertAlmostEqual(samples['value'][0], records[1]['mean'], places=12)
        self.assertAlmostEqual(samples['sigma'][1], records[0]['stderr'], places=12)
        self.assertEqual(records[0]['mode'], "polyline")


if __name__ == "__main__":
    unittest.main()
