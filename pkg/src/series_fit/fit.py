"""
Least-squares extraction of coefficients of t^(j/2) from sampled values
"""

import logging
import math
from typing import List, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.coefficients.series import CoefficientFamily, SeriesCoeffs
from src.errors import DomainError, RankDeficiencyError

logger = logging.getLogger(__name__)

RANK_TOLERANCE = 1e-12
# residuals this close to rounding carry no order information
SATURATION_ULPS = 64


class FitResult(BaseModel):
    """Fitted coefficients with covariance and residual diagnostics"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    coefficients: List[Tuple[int, float]]
    covariance: np.ndarray
    residual_norm: float = Field(ge=0.0)
    t_range: Tuple[float, float]
    weighted: bool = False

    def value(self, j):
        return dict(self.coefficients)[j]

    def stderr(self, j):
        index = [order for order, _ in self.coefficients].index(j)
        return float(math.sqrt(max(self.covariance[index, index], 0.0)))

    def as_series(self, k, m=None, meta="fit"):
        return SeriesCoeffs(family=CoefficientFamily.FITTED, k=k, m=m,
                            entries=self.coefficients, meta=meta)


class OrderCheck(BaseModel):
    """Empirical exponent of the remainder of a truncated series"""
    slope: float
    expected_order: float
    saturated: bool
    consistent: bool
    points: int


def sample_arrays(samples):
    """
    Split samples into t, value and sigma arrays

    Args:
        samples: Sequence of (t, v) or (t, v, sigma), or a DataFrame with columns
            t, value and optionally sigma

    Returns:
        tuple: (t, v, sigma) numpy arrays, sigma zero where absent
    """
    if isinstance(samples, pd.DataFrame):
        t = samples['t'].to_numpy(dtype=float)
        v = samples['value'].to_numpy(dtype=float)
        sigma = samples['sigma'].to_numpy(dtype=float) if 'sigma' in samples else np.zeros_like(t)
        return t, v, sigma
    rows = [tuple(row) + (0.0,) * (3 - len(row)) for row in samples]
    data = np.array(rows, dtype=float).reshape(-1, 3)
    return data[:, 0], data[:, 1], data[:, 2]


def fit_halfpowers(samples, j_max):
    """
    Fit v(t) = sum_(j=0..j_max) xi_j t^(j/2)

    The design matrix is scaled column-wise by t_mid^(j/2) (geometric midpoint of
    the t range) and solved by QR. With all sigma zero the fit is unweighted and
    the covariance uses the residual variance; otherwise rows are weighted by
    1/sigma and the covariance is (A^T W A)^(-1).

    Args:
        samples: (t, v, sigma) triples or a DataFrame, see sample_arrays
        j_max (int): Highest power index

    Returns:
        FitResult: Coefficients for j = 0..j_max

    Raises:
        RankDeficiencyError: If the scaled basis is numerically dependent
    """
    t, v, sigma = sample_arrays(samples)
    columns = j_max + 1
    if len(np.unique(t)) < j_max + 2:
        raise DomainError(f"need at least {j_max + 2} distinct t values, got {len(np.unique(t))}")
    if np.any(t <= 0):
        raise DomainError("sample times must be positive")

    weighted = bool(np.any(sigma > 0))
    if weighted and np.any(sigma <= 0):
        raise DomainError("either all or no samples may carry a sigma")
    weights = 1.0 / sigma if weighted else np.ones_like(t)

    t_mid = math.sqrt(float(t.min()) * float(t.max()))
    orders = np.arange(columns)
    design = (t[:, None] / t_mid) ** (orders[None, :] / 2.0)
    q, r = np.linalg.qr(design * weights[:, None])
    diagonal = np.abs(np.diag(r))
    weak = [int(j) for j in orders if diagonal[j] <= RANK_TOLERANCE * diagonal.max()]
    if weak:
        raise RankDeficiencyError(
            "basis columns " + ", ".join(f"t^({j}/2)" for j in weak) + " are numerically dependent",
            weak,
        )

    scaled = np.linalg.solve(r, q.T @ (v * weights))
    residual = design @ scaled - v
    r_inv = np.linalg.inv(r)
    covariance = r_inv @ r_inv.T
    if not weighted:
        dof = len(t) - columns
        covariance *= float(residual @ residual) / dof if dof > 0 else 0.0

    scale = t_mid ** (orders / 2.0)
    coefficients = scaled / scale
    covariance = covariance / np.outer(scale, scale)
    logger.debug("fit_halfpowers: j_max=%d over t in [%g, %g], residual %.3e",
                 j_max, t.min(), t.max(), float(np.linalg.norm(residual)))
    return FitResult(
        coefficients=[(int(j), float(c)) for j, c in zip(orders, coefficients)],
        covariance=covariance,
        residual_norm=float(np.linalg.norm(residual)),
        t_range=(float(t.min()), float(t.max())),
        weighted=weighted,
    )


def order_check(samples, model, expected_order):
    """
    Empirical exponent of the remainder v(t) - model(t)

    The slope of log|v - model| against log t is fitted over the points whose
    residual stands clear of rounding; with fewer than two such points the check
    is saturated and the slope is nan.

    Args:
        samples: (t, v[, sigma]) samples on a geometric t grid
        model (SeriesCoeffs): Truncated series
        expected_order (float): Exponent the remainder should reach

    Returns:
        OrderCheck: Slope, saturation flag and whether slope >= expected - 0.1
    """
    t, v, _ = sample_arrays(samples)
    if len(t) < 3:
        raise DomainError("order_check needs at least 3 t values")
    residual = np.abs(v - model.evaluate(t))
    floor = SATURATION_ULPS * np.finfo(float).eps * np.maximum(1.0, np.abs(v))
    usable = residual > floor
    saturated = bool(np.count_nonzero(usable) < len(t))
    if np.count_nonzero(usable) < 2:
        logger.warning("order_check: residuals are at the rounding floor")
        return OrderCheck(slope=float("nan"), expected_order=expected_order, saturated=True,
                          consistent=False, points=int(np.count_nonzero(usable)))
    slope = float(np.polyfit(np.log(t[usable]), np.log(residual[usable]), 1)[0])
    return OrderCheck(
        slope=slope,
        expected_order=expected_order,
        saturated=saturated,
        consistent=slope >= expected_order - 0.1,
        points=int(np.count_nonzero(usable)),
    )
