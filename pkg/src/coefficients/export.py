"""
Coefficient table export module
"""

import os

import pandas as pd

COLUMNS = ["family", "k", "m", "j", "value", "meta"]


def coefficient_table(series_list):
    """
    Flatten coefficient tables into one row per coefficient

    Args:
        series_list (list): SeriesCoeffs tables

    Returns:
        pandas.DataFrame: Columns family, k, m, j, value, meta
    """
    data = []
    for series in series_list:
        for j, value in series.entries:
            data.append({
                'family': series.family.value,
                'k': series.k,
                'm': series.m if series.m is not None else '',
                'j': j,
                'value': value,
                'meta': series.meta,
            })
    return pd.DataFrame(data, columns=COLUMNS)


def export_coefficients(series_list, output_path):
    """
    Export coefficient tables to a CSV file

    Args:
        series_list (list): SeriesCoeffs tables
        output_path (str): Destination CSV path

    Returns:
        str: Path to the exported file
    """
    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    coefficient_table(series_list).to_csv(output_path, index=False, float_format='%.17g')
    return output_path
