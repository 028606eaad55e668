"""
Coefficient tables and the series algebra shared by all coefficient families
"""

from enum import Enum
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

import mpmath
from pydantic import BaseModel, Field, model_validator


class CoefficientFamily(str, Enum):
    """Which asymptotic series a table belongs to"""
    ALPHA = "alpha"
    C = "c"
    A = "a"
    B = "b"
    FITTED = "fitted"


class SeriesCoeffs(BaseModel):
    """
    Coefficients of the powers t^(j/2) for one family and one k

    meta records the provenance: "formula", "quadrature", "fit" or "mc".
    """
    family: CoefficientFamily
    k: int = Field(ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    entries: List[Tuple[int, float]]
    meta: str = "formula"

    @model_validator(mode="after")
    def _check_entries(self):
        orders = [j for j, _ in self.entries]
        if any(j < 0 for j in orders):
            raise ValueError("orders j must be non-negative")
        if orders != sorted(set(orders)):
            raise ValueError("entries must be sorted by j without duplicates")
        if self.family is CoefficientFamily.ALPHA and self.m is not None:
            raise ValueError("alpha coefficients carry no ambient dimension")
        return self

    def value(self, j):
        """Coefficient of t^(j/2); KeyError if absent"""
        for order, value in self.entries:
            if order == j:
                return value
        raise KeyError(f"no entry for j={j} in {self.family.value} k={self.k}")

    @property
    def orders(self):
        return [j for j, _ in self.entries]

    def evaluate(self, t):
        """Partial sum of the series at t (scalar or numpy array)"""
        return sum(value * t ** (j / 2.0) for j, value in self.entries)


def alternating_binomial_sum(k, weight, exact=False):
    """
    Sum over l = 1..k of (-1)^l C(k, l) weight(l)

    Binomials are exact integers. With exact=True the weights must be Fractions
    and the result is an exact Fraction; otherwise the sum runs in mpmath at
    20 + k significant digits so the alternating cancellation costs nothing, and
    weight(l) must return an mpmath number built inside that precision.

    Args:
        k (int): Upper index
        weight (callable): l -> weight
        exact (bool): Use rational arithmetic

    Returns:
        Fraction or mpmath.mpf: The sum (callers round once)
    """
    if exact:
        return sum((Fraction((-1) ** l * comb(k, l)) * weight(l) for l in range(1, k + 1)),
                   Fraction(0))
    return mpmath.fsum((-1) ** l * comb(k, l) * weight(l) for l in range(1, k + 1))


def sum_precision(k):
    """Working precision (decimal digits) for alternating sums up to index k"""
    return 20 + k


def transform_1d(column, k_max):
    """
    Binomial transform relating the c and a families at fixed order j

    y_k = sum over l = 1..k of (-1)^l C(k, l) x_l. The map is an involution, so the
    same call converts a -> c and c -> a. Arithmetic follows the input type:
    Fractions stay exact, mpmath numbers keep their precision.

    Args:
        column (Mapping[int, number]): x_l for l = 1..k_max
        k_max (int): Largest k to produce

    Returns:
        dict: {k: y_k} for k = 1..k_max
    """
    missing = [l for l in range(1, k_max + 1) if l not in column]
    if missing:
        raise ValueError(f"transform needs all orders l <= {k_max}; missing {missing}")
    result = {}
    for k in range(1, k_max + 1):
        total = 0
        for l in range(1, k + 1):
            total = total + (-1) ** l * comb(k, l) * column[l]
        result[k] = total
    return result


_SWAP = {CoefficientFamily.A: CoefficientFamily.C, CoefficientFamily.C: CoefficientFamily.A}


def transform_family(tables, k_max):
    """
    Apply the binomial transform to whole coefficient tables

    Args:
        tables (list[SeriesCoeffs]): One table per k = 1..k_max, all family a or all c
        k_max (int): Largest k to produce

    Returns:
        list[SeriesCoeffs]: Tables of the other family, one per k
    """
    families = {table.family for table in tables}
    if len(families) != 1 or next(iter(families)) not in _SWAP:
        raise ValueError("transform_family needs tables of a single family, a or c")
    family = _SWAP[next(iter(families))]
    by_k = {table.k: table for table in tables}
    missing = [k for k in range(1, k_max + 1) if k not in by_k]
    if missing:
        raise ValueError(f"missing tables for k in {missing}")
    orders = sorted(set.intersection(*(set(by_k[k].orders) for k in range(1, k_max + 1))))
    columns = {j: transform_1d({k: by_k[k].value(j) for k in by_k}, k_max) for j in orders}
    m = by_k[1].m
    return [
        SeriesCoeffs(
            family=family, k=k, m=m,
            entries=[(j, float(columns[j][k])) for j in orders],
            meta=by_k[1].meta,
        )
        for k in range(1, k_max + 1)
    ]


def series_power_diag(e, k, max_order):
    """
    k-th power of the diagonal expansion sum_nu e_(2 nu) t^nu

    Coefficients are combined with exact arithmetic when the inputs are exact
    (int or Fraction), by repeated truncated Cauchy products.

    Args:
        e (list[tuple]): (order 2nu, value) pairs; order 0 must be present with value 1
        k (int): Power, >= 1
        max_order (int): Highest even order to keep

    Returns:
        list[tuple]: (order, value) for orders 0, 2, ..., max_order
    """
    if k < 1:
        raise ValueError(f"power k must be >= 1, got {k}")
    terms = dict(e)
    if any(order < 0 or order % 2 for order in terms):
        raise ValueError("diagonal expansion orders must be even and non-negative")
    if 0 not in terms:
        raise ValueError("diagonal expansion is missing its order-0 term")
    if terms[0] != 1:
        raise ValueError("order-0 term must equal 1 (identity normalization)")

    size = max_order // 2 + 1
    base = [terms.get(2 * nu, 0) for nu in range(size)]
    power = list(base)
    for _ in range(k - 1):
        power = [
            sum((power[i] * base[n - i] for i in range(n + 1)), 0 * base[0])
            for n in range(size)
        ]
    return [(2 * nu, power[nu]) for nu in range(size)]
