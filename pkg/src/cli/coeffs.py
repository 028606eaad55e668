"""
coeffs command: tables of alpha, c, a and b coefficients
"""

import logging

import pandas as pd

from src.cli.config import load_body
from src.coefficients.boundary import Normalization, coefficient_series
from src.coefficients.export import COLUMNS, coefficient_table
from src.coefficients.series import CoefficientFamily
from src.errors import SausageLabError
from src.geometry.bodies import Ball
from src.geometry.functionals import functionals_constant_f

logger = logging.getLogger(__name__)

DEFAULT_BODY = "ball:2:1"
DEFAULT_ORDERS = {"alpha": [1, 2, 3, 4], "c": [0, 1, 2], "a": [0, 1, 2], "b": [0, 1, 2]}


def _family_rows(family, ks, orders, body, g, orientation, normalization):
    # one table per k; a failing table is retried row by row so errors are reported per row
    tables = []
    failures = []
    for k in ks:
        try:
            tables.append(coefficient_series(family, k, body=body, g=g, orientation=orientation,
                                             normalization=normalization, orders=orders))
            continue
        except SausageLabError:
            pass
        good = []
        for j in orders:
            try:
                good.append(coefficient_series(family, k, body=body, g=g, orientation=orientation,
                                               normalization=normalization, orders=(j,)).entries[0])
            except SausageLabError as e:
                failures.append({'family': family, 'k': k, 'm': _dimension(family, body), 'j': j,
                                 'value': float('nan'), 'meta': f"unsupported: {e}"})
        if good:
            tables.append(coefficient_series(family, k, body=body, g=g, orientation=orientation,
                                             normalization=normalization,
                                             orders=[j for j, _ in good]))
    frame = coefficient_table(tables)
    if failures:
        frame = pd.concat([frame, pd.DataFrame(failures, columns=COLUMNS)], ignore_index=True)
    return frame.sort_values(['k', 'j'], kind='stable', ignore_index=True)


def _dimension(family, body):
    if family == "alpha" or body is None:
        return ''
    return body.m if isinstance(body, Ball) else 2


def coefficient_rows(config):
    """
    Build the coefficient table requested by a coeffs run

    The b family gets one column per normalization plus their ratio.

    Args:
        config (RunConfig): Run configuration

    Returns:
        pandas.DataFrame: The table
    """
    family = config.family or "alpha"
    orders = config.j or DEFAULT_ORDERS[family]
    body = None if family == "alpha" else load_body(config.body or DEFAULT_BODY)
    g = functionals_constant_f(body, 1.0, config.orientation) if family == "a" else None

    if family != CoefficientFamily.B.value or config.normalization is not None:
        normalization = config.normalization or Normalization.PER_PROOF
        return _family_rows(family, config.k, orders, body, g, config.orientation, normalization)

    frames = {
        norm.value: _family_rows(family, config.k, orders, body, g, config.orientation, norm)
        for norm in Normalization
    }
    frame = frames[Normalization.PER_PROOF.value].rename(columns={'value': 'per_proof'})
    frame.insert(frame.columns.get_loc('per_proof'), 'as_printed',
                 frames[Normalization.AS_PRINTED.value]['value'].to_numpy())
    frame['ratio'] = frame['as_printed'] / frame['per_proof'].where(frame['per_proof'] != 0.0)
    return frame


def cmd_coeffs(config):
    """
    Compute and print a coefficient table

    Args:
        config (RunConfig): Run configuration

    Returns:
        tuple: (table, passed), passed is always True
    """
    frame = coefficient_rows(config)
    logger.info("coeffs: %d rows for family %s", len(frame), config.family or "alpha")
    return frame, True
