"""
Import and export of planar curves in the sampled text format

The file format is:
- A header line "n=<points>"
- Then n rows "s x y kappa" on a uniform parameter grid, whitespace separated.
  The curve is closed: the point following the last row is the first row again,
  one grid step later. kappa is the signed curvature relative to the left-hand
  normal of the traversal direction.
Blank lines and lines starting with "#" are ignored.
"""

import os

import numpy as np
from scipy.interpolate import CubicSpline

from src.geometry.bodies import TOTAL_CURVATURE_TOLERANCE, PlanarCurveDomain


def load_curve(file_path, curvature_tolerance=TOTAL_CURVATURE_TOLERANCE):
    """
    Load a planar curve domain from a sampled curve file

    Args:
        file_path (str): Path to the curve file
        curvature_tolerance (float): Allowed deviation of the total curvature from 2pi

    Returns:
        PlanarCurveDomain: Domain interpolated by periodic cubic splines
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Curve file '{file_path}' not found.")

    declared = None
    rows = []
    with open(file_path, "r", encoding="utf-8") as curve_file:
        for line in curve_file:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if declared is None:
                if not line.startswith("n="):
                    raise ValueError(f"Missing 'n=<points>' header in '{file_path}'.")
                declared = int(line[2:])
                continue
            fields = line.split()
            if len(fields) != 4:
                raise ValueError(f"Expected 's x y kappa', got '{line}'.")
            rows.append([float(value) for value in fields])

    if declared is None:
        raise ValueError(f"Curve file '{file_path}' is empty.")
    if len(rows) != declared:
        raise ValueError(f"Header declares {declared} points but {len(rows)} rows were read.")
    if declared < 8:
        raise ValueError("A curve needs at least 8 points.")

    data = np.array(rows)
    s = data[:, 0]
    step = np.diff(s)
    if np.any(step <= 0) or np.ptp(step) > 1e-9 * max(1.0, abs(step[0])):
        raise ValueError("Parameter values must form a uniform increasing grid.")

    period = s[-1] - s[0] + step[0]
    grid = np.append(s - s[0], period)
    closed = np.vstack((data[:, 1:], data[:1, 1:]))
    x = CubicSpline(grid, closed[:, 0], bc_type="periodic")
    y = CubicSpline(grid, closed[:, 1], bc_type="periodic")
    kappa = CubicSpline(grid, closed[:, 2], bc_type="periodic")

    return PlanarCurveDomain(
        name=os.path.basename(file_path),
        period=float(period),
        x=_wrapped(x, period),
        y=_wrapped(y, period),
        dx=_wrapped(x.derivative(), period),
        dy=_wrapped(y.derivative(), period),
        kappa=_wrapped(kappa, period),
        curvature_tolerance=curvature_tolerance,
    )


def _wrapped(spline, period):
    def evaluate(s):
        return spline(np.mod(s, period))
    return evaluate


def save_curve(body, file_path, points=1024):
    """
    Write a planar curve domain in the sampled text format

    Args:
        body (PlanarCurveDomain): Domain to sample
        file_path (str): Destination path
        points (int): Number of samples

    Returns:
        str: Path to the written file
    """
    s = np.linspace(0.0, body.period, points, endpoint=False)
    table = np.column_stack((s, body.x(s), body.y(s), body.kappa(s)))
    with open(file_path, "w", encoding="utf-8") as curve_file:
        curve_file.write(f"n={points}\n")
        for row in table:
            curve_file.write(" ".join(f"{value:.17g}" for value in row) + "\n")
    return file_path
