"""
Interior coefficients of the weighted heat kernel norm on closed manifolds
"""

import logging
from fractions import Fraction
from numbers import Rational, Real

from pydantic import BaseModel, ConfigDict

from src.errors import UnsupportedError

logger = logging.getLogger(__name__)

INTERIOR_ORDERS = (0, 2, 4)


class InteriorData(BaseModel):
    """
    Integrated interior invariants for the scalar (or traced) case

    tauF = int Tr(F tau), EF = int Tr(F E), tau2F = int Tr(F tau^2),
    tauEF = int Tr(F tau E), E2F = int Tr(F E^2), vol_F = int Tr(F), and
    a14 = a_(1,4)(F, D), which is taken as given. Exact inputs (int, Fraction)
    give exact outputs.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tauF: Real = 0
    EF: Real = 0
    tau2F: Real = 0
    tauEF: Real = 0
    E2F: Real = 0
    vol_F: Real = 0
    a14: Real = 0


class InteriorTerm(BaseModel):
    """An interior coefficient; odd_order marks the orders that vanish without boundary"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    k: int
    j: int
    value: Real
    odd_order: bool = False


def interior_term(k, j, d):
    """
    Interior coefficient a_(k,j)(F, D) with its parity flag

    a_(k,0) = vol_F, a_(k,2) = k (tauF + 6 EF)/6 and
    a_(k,4) = k a14 + k(k-1)/72 (tau2F + 12 tauEF + 36 E2F). Odd orders vanish on
    a closed manifold; they come back as 0 with odd_order set and a logged warning.

    Args:
        k (int): Power of the kernel, >= 1
        j (int): Order
        d (InteriorData): Integrated invariants

    Returns:
        InteriorTerm: a_(k,j), exact when the inputs are exact
    """
    if k < 1:
        raise UnsupportedError(f"k must be >= 1, got {k}")
    if j % 2:
        logger.warning("a_(%d,%d): odd orders vanish without boundary", k, j)
        return InteriorTerm(k=k, j=j, value=0, odd_order=True)
    if j not in INTERIOR_ORDERS:
        raise UnsupportedError(f"interior order j={j} is not provided (supported: 0, 2, 4)")
    if j == 0:
        value = _exact(d.vol_F)
    elif j == 2:
        value = k * (_exact(d.tauF) + 6 * _exact(d.EF)) / 6
    else:
        cross = _exact(d.tau2F) + 12 * _exact(d.tauEF) + 36 * _exact(d.E2F)
        value = k * _exact(d.a14) + k * (k - 1) * cross / 72
    return InteriorTerm(k=k, j=j, value=value)


def interior_a(k, j, d):
    """Value of interior_term(k, j, d)"""
    return interior_term(k, j, d).value


def _exact(value):
    return Fraction(value) if isinstance(value, Rational) else value
