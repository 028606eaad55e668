"""
Import module for (t, value, sigma) samples from kernel tables or Monte Carlo runs
"""

import os

import pandas as pd

# first matching column wins; quadrature error estimates are not weights
VALUE_COLUMNS = ('value', 'mean')
SIGMA_COLUMNS = ('sigma', 'stderr')


def load_samples(file_path, use_sigma=True):
    """
    Load samples from a kernel CSV dump or a Monte Carlo JSON-lines file

    The format is chosen by extension: .csv (columns t, value, error_estimate) or
    .jsonl / .json (records with t, mean, stderr).

    Args:
        file_path (str): Path to the samples file
        use_sigma (bool): Keep the error column as weights; False gives sigma = 0

    Returns:
        pandas.DataFrame: Columns t, value, sigma sorted by t
    """
    _, file_extension = os.path.splitext(file_path)
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"Samples file not found: {file_path}")

    if file_extension.lower() == '.csv':
        frame = pd.read_csv(file_path)
    elif file_extension.lower() in ('.jsonl', '.json'):
        frame = pd.read_json(file_path, orient='records', lines=True)
    else:
        raise ValueError(f"Unsupported file format: {file_extension}. Please use .csv or .jsonl files.")

    if 't' not in frame:
        raise ValueError(f"{file_path} has no 't' column")
    value = next((name for name in VALUE_COLUMNS if name in frame), None)
    if value is None:
        raise ValueError(f"{file_path} has none of the value columns {VALUE_COLUMNS}")
    sigma = next((name for name in SIGMA_COLUMNS if name in frame), None)

    samples = pd.DataFrame({
        't': frame['t'].astype(float),
        'value': frame[value].astype(float),
        'sigma': frame[sigma].astype(float) if (use_sigma and sigma) else 0.0,
    })
    return samples.sort_values('t', ignore_index=True)
