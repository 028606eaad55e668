"""
Exact small-time coefficients: half-line alpha, pinned sausage c, weighted heat
kernel norm a, and unpinned sausage b
"""

import logging
import math
from enum import Enum
from fractions import Fraction

import mpmath

from src.coefficients.series import (
    CoefficientFamily,
    SeriesCoeffs,
    alternating_binomial_sum,
    sum_precision,
)
from src.errors import UnsupportedError
from src.geometry.bodies import Ball, Orientation
from src.geometry.functionals import surface_measure, total_curvature, volume
from src.numerics.integrals import i_k_integral, j_integral
from src.numerics.special import gamma_fn

logger = logging.getLogger(__name__)

MAX_ORDER = 2
HARMONIC_TOLERANCE = 1e-10


class Normalization(str, Enum):
    """Constant used for the unpinned coefficients b_(k,1), b_(k,2)"""
    AS_PRINTED = "as_printed"
    PER_PROOF = "per_proof"


def _check_order(j):
    if not 0 <= j <= MAX_ORDER:
        raise UnsupportedError(f"order j={j} is not provided (supported: 0..{MAX_ORDER})")


def _j_integral_mp(a):
    a = mpmath.mpf(a)
    a32 = a ** 1.5
    return mpmath.pi / (4 * a32) - 1 / (2 * a * (1 + a)) - mpmath.atan(a ** -0.5) / (2 * a32)


def alpha_mp(k, j):
    """alpha_(k,j) as an mpmath number at the current working precision"""
    ratio = mpmath.gamma(mpmath.mpf(j) / 2) / mpmath.gamma(j)
    return alternating_binomial_sum(k, lambda l: ratio * mpmath.mpf(l) ** (-mpmath.mpf(j) / 2)) / 2


def alpha_coeff(k, j):
    """
    Half-line coefficient alpha_(k,j)

    alpha_(k,j) = (1/2) sum_l (-1)^l C(k,l) Gamma(j/2)/Gamma(j) l^(-j/2).

    Args:
        k (int): Power of the kernel, >= 1
        j (int): Order, >= 1

    Returns:
        float: alpha_(k,j)
    """
    if k < 1 or j < 1:
        raise UnsupportedError(f"alpha_coeff needs k >= 1 and j >= 1, got k={k}, j={j}")
    with mpmath.workdps(sum_precision(k)):
        return float(alpha_mp(k, j))


def alpha_coeff_exact(k, j):
    """
    alpha_(k,j) in exact rational arithmetic, for even j

    Args:
        k (int): Power of the kernel, >= 1
        j (int): Even order, >= 2

    Returns:
        Fraction: alpha_(k,j)
    """
    if j < 2 or j % 2:
        raise UnsupportedError(f"exact alpha needs an even order j >= 2, got {j}")
    half = j // 2
    ratio = Fraction(math.factorial(half - 1), math.factorial(j - 1))
    return alternating_binomial_sum(k, lambda l: ratio / l ** half, exact=True) / 2


def harmonic_identity_check(k_max):
    """
    Check alpha_(k,2) = -H_k / 2 for k = 1..k_max

    The rational value must match exactly and the floating value to 1e-10.

    Args:
        k_max (int): Largest k checked, >= 1

    Returns:
        bool: True if the identity holds for every k
    """
    if k_max < 1:
        raise UnsupportedError(f"k_max must be >= 1, got {k_max}")
    harmonic = Fraction(0)
    for k in range(1, k_max + 1):
        harmonic += Fraction(1, k)
        if alpha_coeff_exact(k, 2) != -harmonic / 2:
            logger.warning("harmonic identity fails exactly at k=%d", k)
            return False
        if abs(alpha_coeff(k, 2) + float(harmonic) / 2) > HARMONIC_TOLERANCE:
            logger.warning("harmonic identity fails numerically at k=%d", k)
            return False
    return True


def c2_curvature_weight_mp(k):
    """Coefficient of int L_aa in c_(k,2), as an mpmath number"""
    if k == 1:
        return -mpmath.mpf(1) / 3
    return -mpmath.mpf(1) / (2 * k) + mpmath.mpf(k) / 2 * _j_integral_mp(k - 1)


def c2_curvature_weight(k):
    """
    Coefficient of int L_aa in c_(k,2)

    -1/3 for k = 1, and -1/(2k) + (k/2) J(k-1) for k >= 2 with J the closed form
    of int_1^inf (eta^2 + a)^-2 d eta.

    Args:
        k (int): Number of sausages, >= 1

    Returns:
        float: The curvature weight
    """
    if k < 1:
        raise UnsupportedError(f"k must be >= 1, got {k}")
    if k == 1:
        return -1.0 / 3.0
    return -1.0 / (2.0 * k) + k / 2.0 * j_integral(k - 1)


def boundary_curvature_weight_mp(k):
    """Coefficient of int f L_aa in a_(k,2), as an mpmath number"""
    def weight(l):
        return -((k - l) * _j_integral_mp(l) + mpmath.mpf(1) / l)
    # (-1)^(l-1) = -(-1)^l
    return -mpmath.mpf(k) / 6 + alternating_binomial_sum(k, weight) / 2


def boundary_curvature_weight(k):
    """
    Coefficient of int f L_aa dy in a_(k,2)

    -k/6 + (1/2) sum_l C(k,l) (-1)^(l-1) {(k-l) J(l) + 1/l}.

    Args:
        k (int): Power of the kernel, >= 1

    Returns:
        float: The curvature weight (1/3 for k = 1)
    """
    if k < 1:
        raise UnsupportedError(f"k must be >= 1, got {k}")
    with mpmath.workdps(sum_precision(k)):
        return float(boundary_curvature_weight_mp(k))


def c_coeff(k, j, body, orientation=Orientation.INWARD):
    """
    Pinned sausage coefficient c_(k,j) for j = 0, 1, 2

    Args:
        k (int): Number of sausages, >= 1
        j (int): Order
        body (CompactBody): Obstacle K or planar domain D, dimension >= 2
        orientation (Orientation): Normal used for int L_aa

    Returns:
        float: c_(k,j)
    """
    _check_order(j)
    if k < 1:
        raise UnsupportedError(f"k must be >= 1, got {k}")
    if isinstance(body, Ball) and body.m < 2:
        raise UnsupportedError("c_(k,j) needs ambient dimension m >= 2")
    if j == 0:
        return volume(body)
    if j == 1:
        return 0.5 * math.sqrt(math.pi / k) * surface_measure(body)
    return c2_curvature_weight(k) * total_curvature(body, orientation)


def a_coeff(k, j, g):
    """
    Weighted heat kernel norm coefficient a_(k,j) for j = 0, 1, 2

    Args:
        k (int): Power of the kernel, >= 1
        j (int): Order
        g (GeomFunctionals): Integrated geometric data of the weight f

    Returns:
        float: a_(k,j)
    """
    _check_order(j)
    if k < 1:
        raise UnsupportedError(f"k must be >= 1, got {k}")
    if j == 0:
        return g.vol_f
    if j == 1:
        return alpha_coeff(k, 1) * g.bdy_f
    harmonic = math.fsum(1.0 / l for l in range(1, k + 1))
    return (
        k / 6.0 * g.vol_ftau
        - 0.5 * harmonic * g.bdy_f1
        + boundary_curvature_weight(k) * g.bdy_fL
    )


def _b_constant(k, j, normalization):
    # per-unit-boundary-integral constant of b_(k,j)
    p = (k + j) / 2.0
    integral = i_k_integral(k, p).value
    if normalization is Normalization.AS_PRINTED:
        scale = 2.0 ** (2 + k) * math.pi ** ((2.0 - k) / 2.0)
    else:
        scale = 2.0 ** k * math.pi ** (-k / 2.0)
    constant = scale * gamma_fn(p) * integral
    return constant if j == 1 else -(k - 2) * constant


def b_coeff(k, j, body, normalization=Normalization.PER_PROOF):
    """
    Unpinned sausage coefficient b_(k,j) for j = 0, 1, 2

    "per_proof" carries the constants obtained by redoing the exterior-ball
    computation (they reproduce Q_(1,3)(t) = 4pi/3 + 8 sqrt(pi t) + 4 pi t);
    "as_printed" evaluates the stated formulas verbatim. int L_aa is taken with
    the normal pointing into K.

    Args:
        k (int): Number of sausages, >= 1
        j (int): Order
        body (CompactBody): Obstacle K
        normalization (Normalization): Which constants to use

    Returns:
        float: b_(k,j)
    """
    _check_order(j)
    if k < 1:
        raise UnsupportedError(f"k must be >= 1, got {k}")
    if isinstance(body, Ball) and body.m < 2:
        raise UnsupportedError("b_(k,j) needs ambient dimension m >= 2")
    normalization = Normalization(normalization)
    if j == 0:
        return volume(body)
    if j == 2 and k == 2:
        return 0.0
    if j == 1:
        return _b_constant(k, 1, normalization) * surface_measure(body)
    return _b_constant(k, 2, normalization) * total_curvature(body, Orientation.INWARD)


def b_coeff_both(k, j, body):
    """b_(k,j) under both normalizations, keyed by normalization name"""
    return {norm.value: b_coeff(k, j, body, norm) for norm in Normalization}


def b_discrepancy(k, j, body):
    """
    Ratio as_printed / per_proof of b_(k,j)

    Returns:
        float: The ratio, or nan when both vanish
    """
    both = b_coeff_both(k, j, body)
    proof = both[Normalization.PER_PROOF.value]
    if proof == 0.0:
        return float("nan")
    return both[Normalization.AS_PRINTED.value] / proof


def coefficient_series(family, k, body=None, g=None, orientation=Orientation.INWARD,
                       normalization=Normalization.PER_PROOF, orders=(0, 1, 2)):
    """
    Table of one coefficient family for a single k

    Args:
        family (CoefficientFamily): alpha, c, a or b
        k (int): Number of sausages / power of the kernel
        body (CompactBody, optional): Needed for c and b
        g (GeomFunctionals, optional): Needed for a
        orientation (Orientation): Normal used for int L_aa in c
        normalization (Normalization): Constants used for b
        orders (iterable): Orders j to include

    Returns:
        SeriesCoeffs: Table with meta "formula"
    """
    family = CoefficientFamily(family)
    m = None
    if family is CoefficientFamily.ALPHA:
        entries = [(j, alpha_coeff(k, j)) for j in orders]
    elif family is CoefficientFamily.C:
        entries = [(j, c_coeff(k, j, body, orientation)) for j in orders]
        m = body.m if isinstance(body, Ball) else 2
    elif family is CoefficientFamily.B:
        entries = [(j, b_coeff(k, j, body, normalization)) for j in orders]
        m = body.m if isinstance(body, Ball) else 2
    elif family is CoefficientFamily.A:
        entries = [(j, a_coeff(k, j, g)) for j in orders]
        if body is not None:
            m = body.m if isinstance(body, Ball) else 2
    else:
        raise UnsupportedError(f"no formula for family '{family.value}'")
    return SeriesCoeffs(family=family, k=k, m=m, entries=entries, meta="formula")
