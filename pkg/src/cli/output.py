"""
Export module for run tables and summaries
"""

import json
import math
import os

import numpy as np

import src


def run_directory(config, name):
    """
    Output directory of one run, created if missing

    Args:
        config (RunConfig): Run configuration
        name (str): Command or experiment name

    Returns:
        str: Directory path
    """
    directory = os.path.join(config.output_dir, name)
    os.makedirs(directory, exist_ok=True)
    return directory


def write_table(frame, directory, name, output_format='csv'):
    """
    Write a table as CSV or JSON lines

    Args:
        frame (pandas.DataFrame): Table
        directory (str): Output directory
        name (str): File name without extension
        output_format (str): 'csv' or 'json'

    Returns:
        str: Path to the written file
    """
    if output_format == 'json':
        output_path = os.path.join(directory, f"{name}.jsonl")
        frame.to_json(output_path, orient='records', lines=True, double_precision=15)
    else:
        output_path = os.path.join(directory, f"{name}.csv")
        frame.to_csv(output_path, index=False, float_format='%.17g')
    return output_path


def _plain(value):
    # json has no nan/inf or numpy scalars
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def write_summary(config, directory, results, passed):
    """
    Write summary.json with the version, the full configuration and the results

    Args:
        config (RunConfig): Run configuration
        directory (str): Output directory
        results (list): JSON-serializable result records
        passed (bool): Overall outcome of the checks

    Returns:
        str: Path to the summary file
    """
    summary = {
        'version': src.__version__,
        'config': config.model_dump(mode='json'),
        'passed': passed,
        'results': _plain(results),
    }
    output_path = os.path.join(directory, 'summary.json')
    with open(output_path, 'w', encoding='utf-8') as summary_file:
        json.dump(summary, summary_file, indent=2, sort_keys=True)
    return output_path
