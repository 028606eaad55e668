"""
Closed-form and reduced integrals behind the curvature and exterior-ball coefficients
"""

import logging
import math

import numpy as np
from scipy.special import logsumexp
from scipy.stats import qmc

from src.errors import DomainError
from src.numerics.quadrature import QuadratureResult, adaptive_integrate, gauss_legendre_panels
from src.numerics.special import gamma_fn, gaussian_tail

logger = logging.getLogger(__name__)

# tensor rules: (geometric panels, nodes per panel) for the coarse and fine level
TENSOR_LEVELS = {
    2: ((16, 8), (20, 10)),
    3: ((12, 7), (16, 9)),
    4: ((8, 5), (10, 6)),
}
QMC_LOG2_POINTS = 16
QMC_MIN_DIMENSION = 5


def j_integral(a):
    """
    Integral of (eta^2 + a)^(-2) over [1, infinity), in closed form

    Args:
        a (float): Shift, must be > 0

    Returns:
        float: pi/(4 a^(3/2)) - 1/(2a(1+a)) - arctan(a^(-1/2))/(2 a^(3/2))
    """
    if not a > 0:
        raise DomainError(f"j_integral requires a > 0, got {a}")
    a32 = a ** 1.5
    return math.pi / (4.0 * a32) - 1.0 / (2.0 * a * (1.0 + a)) - math.atan(a ** -0.5) / (2.0 * a32)


def i_k_integral(k, p, tol=1e-12, method="reduced", seed=0):
    """
    k-fold integral of (eta_1^2 + ... + eta_k^2)^(-p) over [1, infinity)^k

    The default method writes |eta|^(-2p) as a Gamma-function integral, which
    factorizes over the coordinates and leaves the one-dimensional integral
    (2/Gamma(p)) * int_0^inf z^(2p-k-1) T(z)^k dz with T the Gaussian tail.
    "tensor" applies a tensorized Gauss-Legendre rule after eta = 1/u (k <= 4)
    and switches to scrambled Sobol sampling from k = 5 on; "qmc" forces sampling.

    Args:
        k (int): Number of coordinates, >= 1
        p (float): Exponent, must exceed k/2
        tol (float): Tolerance for the adaptive one-dimensional rule
        method (str): "reduced", "tensor" or "qmc"
        seed (int): Scrambling seed for the Sobol sequence

    Returns:
        QuadratureResult: Value with error estimate
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not p > k / 2.0:
        raise DomainError(f"integral diverges for p <= k/2 (k={k}, p={p})")

    if k == 1:
        return QuadratureResult(value=1.0 / (2.0 * p - 1.0), error_estimate=0.0, evaluations=0)
    if method == "reduced":
        return _reduced(k, p, tol)
    if method == "tensor" and k < QMC_MIN_DIMENSION:
        return _tensor(k, p)
    if method in ("tensor", "qmc"):
        return _sobol(k, p, seed)
    raise DomainError(f"unknown method '{method}'")


def _reduced(k, p, tol):
    exponent = 2.0 * p - k - 1.0
    scale = 2.0 / gamma_fn(p)
    if exponent >= 0.0:
        def integrand(z):
            return z ** exponent * gaussian_tail(z) ** k
    else:
        # z = w^beta removes the integrable singularity at the origin
        beta = 1.0 / (2.0 * p - k)

        def integrand(w):
            return beta * gaussian_tail(w ** beta) ** k
    result = adaptive_integrate(integrand, 0.0, np.inf, tol=tol)
    return QuadratureResult(
        value=scale * result.value,
        error_estimate=scale * result.error_estimate,
        evaluations=result.evaluations,
    )


def _unit_rule(panels, n):
    edges = np.concatenate(([0.0], 2.0 ** -np.arange(panels, -1, -1, dtype=float)))
    return gauss_legendre_panels(edges, n)


def _tensor_sum(k, p, panels, n):
    nodes, weights = _unit_rule(panels, n)
    inv2 = nodes ** -2.0
    # h(u) = prod u_i^-2 * (sum u_i^-2)^-p, weights folded per axis
    axis_weight = weights * inv2
    rest_sum = np.zeros(())
    rest_weight = np.ones(())
    for _ in range(k - 1):
        rest_sum = np.add.outer(rest_sum, inv2)
        rest_weight = np.multiply.outer(rest_weight, axis_weight)
    rest_sum = rest_sum.ravel()
    rest_weight = rest_weight.ravel()
    partial = [
        w0 * float(np.dot(rest_weight, (s0 + rest_sum) ** -p))
        for s0, w0 in zip(inv2, axis_weight)
    ]
    return math.fsum(partial), nodes.size ** k


def _tensor(k, p):
    (coarse_panels, coarse_n), (fine_panels, fine_n) = TENSOR_LEVELS[k]
    coarse, spent_coarse = _tensor_sum(k, p, coarse_panels, coarse_n)
    fine, spent_fine = _tensor_sum(k, p, fine_panels, fine_n)
    logger.debug("tensor rule k=%d p=%g: %.15g -> %.15g", k, p, coarse, fine)
    return QuadratureResult(
        value=fine, error_estimate=abs(fine - coarse), evaluations=spent_coarse + spent_fine
    )


def _sobol(k, p, seed):
    # eta = u^-gamma keeps the integrand bounded at the corner u -> 0
    gamma = max(1.0, 2.0 * k / (2.0 * p - k))
    sampler = qmc.Sobol(d=k, scramble=True, seed=seed)
    u = sampler.random_base2(m=QMC_LOG2_POINTS)
    u = np.clip(u, np.finfo(float).tiny, 1.0)
    log_u = np.log(u)
    log_sum = logsumexp(-2.0 * gamma * log_u, axis=1)
    log_h = k * math.log(gamma) - (gamma + 1.0) * np.sum(log_u, axis=1) - p * log_sum
    values = np.exp(log_h)
    half = values.size // 2
    first, second = float(np.mean(values[:half])), float(np.mean(values[half:]))
    return QuadratureResult(
        value=0.5 * (first + second),
        error_estimate=0.5 * abs(first - second),
        evaluations=int(values.size),
    )
