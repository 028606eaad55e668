"""
Tests for bodies, geometric functionals and the curve file format
"""

import math
import os
import sys
import tempfile
import unittest

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.geometry import (
    Ball,
    Orientation,
    PlanarCurveDomain,
    circle,
    ellipse,
    functionals_constant_f,
    load_curve,
    parse_body,
    reach,
    save_curve,
    surface_measure,
    total_curvature,
    volume,
)


def clockwise_circle(r=1.0):
    return PlanarCurveDomain(
        name="clockwise",
        period=2.0 * math.pi,
        x=lambda s: r * np.cos(s),
        y=lambda s: -r * np.sin(s),
        dx=lambda s: -r * np.sin(s),
        dy=lambda s: -r * np.cos(s),
        kappa=lambda s: np.full_like(np.asarray(s, dtype=float), -1.0 / r),
    )


class TestBallFunctionals(unittest.TestCase):
    """Closed forms for balls"""

    def test_volumes(self):
        self.assertAlmostEqual(volume(Ball(m=2, r=1.0)), math.pi, places=13)
        self.assertAlmostEqual(volume(Ball(m=3, r=1.0)), 4.0 * math.pi / 3.0, places=13)

    def test_surface_and_curvature(self):
        self.assertAlmostEqual(surface_measure(Ball(m=2, r=1.0)), 2.0 * math.pi, places=13)
        self.assertAlmostEqual(surface_measure(Ball(m=3, r=1.0)), 4.0 * math.pi, places=13)
        self.assertAlmostEqual(total_curvature(Ball(m=2, r=1.0)), 2.0 * math.pi, places=13)
        self.assertAlmostEqual(total_curvature(Ball(m=3, r=1.0)), 8.0 * math.pi, places=13)

    def test_outward_orientation_negates(self):
        ball = Ball(m=3, r=2.0)
        self.assertAlmostEqual(
            total_curvature(ball, Orientation.OUTWARD), -total_curvature(ball, Orientation.INWARD)
        )

    def test_constant_weight(self):
        g = functionals_constant_f(Ball(m=3, r=1.0), 2.0)
        self.assertAlmostEqual(g.vol_f, 8.0 * math.pi / 3.0, places=12)
        self.assertEqual(g.vol_ftau, 0.0)
        self.assertAlmostEqual(g.bdy_f, 8.0 * math.pi, places=12)
        self.assertEqual(g.bdy_f1, 0.0)
        self.assertAlmostEqual(g.bdy_fL, 16.0 * math.pi, places=12)

    def test_zero_weight(self):
        g = functionals_constant_f(Ball(m=2, r=1.0), 0.0)
        self.assertEqual((g.vol_f, g.bdy_f, g.bdy_fL), (0.0, 0.0, 0.0))

    def test_scaling(self):
        for m in (2, 3, 4):
            for scale in (0.5, 2.0, 3.0):
                with self.subTest(m=m, scale=scale):
                    unit, scaled = Ball(m=m, r=1.0), Ball(m=m, r=scale)
                    self.assertAlmostEqual(volume(scaled) / volume(unit), scale ** m, places=10)
                    self.assertAlmostEqual(
                        surface_measure(scaled) / surface_measure(unit), scale ** (m - 1), places=10
                    )
                    self.assertAlmostEqual(
                        total_curvature(scaled) / total_curvature(unit), scale ** (m - 2), places=10
                    )

    def test_invalid_ball(self):
        with self.assertRaises(ValueError):
            Ball(m=0, r=1.0)
        with self.assertRaises(ValueError):
            Ball(m=2, r=-1.0)


class TestPlanarDomains(unittest.TestCase):
    """Curve domains integrated numerically"""

    def test_circle_matches_disk(self):
        for r in (1.0, 2.0):
            with self.subTest(r=r):
                disk, ball = circle(r), Ball(m=2, r=r)
                self.assertLess(abs(volume(disk) - volume(ball)), 1e-8)
                self.assertLess(abs(surface_measure(disk) - surface_measure(ball)), 1e-8)
                self.assertLess(abs(total_curvature(disk) - 2.0 * math.pi), 1e-8)

    def test_clockwise_traversal(self):
        body = clockwise_circle()
        self.assertEqual(body.traversal_sign, -1.0)
        self.assertLess(abs(volume(body) - math.pi), 1e-8)
        self.assertLess(abs(total_curvature(body) - 2.0 * math.pi), 1e-8)
        np.testing.assert_allclose(body.inward_curvature(np.array([0.0, 1.0])), [1.0, 1.0])

    def test_ellipse_functionals(self):
        body = ellipse(2.0, 1.0)
        self.assertLess(abs(volume(body) - 2.0 * math.pi), 1e-8)
        self.assertLess(abs(total_curvature(body) - 2.0 * math.pi), 1e-6)
        s = np.linspace(0.0, 2.0 * math.pi, 200000, endpoint=False)
        riemann = float(np.sum(body.speed(s))) * (2.0 * math.pi / s.size)
        self.assertLess(abs(surface_measure(body) - riemann), 1e-8)

    def test_inward_normal_points_inside(self):
        normal = circle(1.0).inward_normal(np.array([0.0]))
        np.testing.assert_allclose(normal, [[-1.0, 0.0]], atol=1e-14)

    def test_reach(self):
        self.assertEqual(reach(Ball(m=3, r=1.5)), 1.5)
        self.assertAlmostEqual(reach(circle(1.0)), 1.0, delta=1e-6)
        self.assertAlmostEqual(reach(ellipse(2.0, 1.0)), 0.5, delta=1e-3)

    def test_open_curve_rejected(self):
        with self.assertRaises(ValueError):
            PlanarCurveDomain(
                period=2.0 * math.pi,
                x=lambda s: np.cos(0.5 * s),
                y=lambda s: np.sin(0.5 * s),
                dx=lambda s: -0.5 * np.sin(0.5 * s),
                dy=lambda s: 0.5 * np.cos(0.5 * s),
                kappa=lambda s: np.full_like(np.asarray(s, dtype=float), 1.0),
            )

    def test_figure_eight_rejected(self):
        # lemniscate of Gerono: total curvature 0
        with self.assertRaises(ValueError):
            PlanarCurveDomain(
                period=2.0 * math.pi,
                x=lambda s: np.cos(s),
                y=lambda s: np.sin(s) * np.cos(s),
                dx=lambda s: -np.sin(s),
                dy=lambda s: np.cos(2.0 * s),
                kappa=lambda s: (2.0 * np.sin(s) * np.sin(2.0 * s) + np.cos(s) * np.cos(2.0 * s))
                / (np.sin(s) ** 2 + np.cos(2.0 * s) ** 2) ** 1.5,
            )


class TestParseBody(unittest.TestCase):
    """Body spec strings"""

    def test_forms(self):
        self.assertEqual(parse_body("ball:3:2"), Ball(m=3, r=2.0))
        self.assertLess(abs(volume(parse_body("disk")) - math.pi), 1e-8)
        self.assertLess(abs(volume(parse_body("circle:2")) - 4.0 * math.pi), 1e-8)
        self.assertLess(abs(volume(parse_body("ellipse:2:1")) - 2.0 * math.pi), 1e-8)

    def test_invalid(self):
        for spec in ("cube:3", "ball:3", "ball:x:1", "ellipse:1"):
            with self.subTest(spec=spec):
                with self.assertRaises(ValueError):
                    parse_body(spec)


class TestCurveFile(unittest.TestCase):
    """Sampled curve files"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_saved_circle_reloads(self):
        path = save_curve(circle(1.0), os.path.join(self.temp_dir.name, "circle.txt"), points=1024)
        body = load_curve(path, curvature_tolerance=1e-6)
        self.assertLess(abs(volume(body) - math.pi), 1e-7)
        self.assertLess(abs(surface_measure(body) - 2.0 * math.pi), 1e-7)
        self.assertLess(abs(total_curvature(body) - 2.0 * math.pi), 1e-6)
        self.assertLess(abs(reach(body) - 1.0), 1e-4)

    def test_parse_body_reads_curve(self):
        path = save_curve(circle(2.0), os.path.join(self.temp_dir.name, "circle2.txt"), points=1024)
        body = parse_body(f"curve:{path}")
        self.assertLess(abs(volume(body) - 4.0 * math.pi), 1e-6)

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            load_curve(os.path.join(self.temp_dir.name, "missing.txt"))

    def test_missing_header(self):
        path = os.path.join(self.temp_dir.name, "bad.txt")
        with open(path, "w", encoding="utf-8") as curve_file:
            curve_file.write("0 1 0 1\n")
        with self.assertRaises(ValueError):
            load_curve(path)

    def test_row_count_mismatch(self):
        path = os.path.join(self.temp_dir.name, "short.txt")
        with open(path, "w", encoding="utf-8") as curve_file:
            curve_file.write("n=10\n0 1 0 1\n")
        with self.assertRaises(ValueError):
            load_curve(path)


if __name__ == "__main__":
    unittest.main()
