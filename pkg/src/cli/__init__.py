"""
Command-line orchestration: run configuration, coefficient tables, the
binomial-transform check and the oracle and Monte Carlo experiments
"""

from src.cli.coeffs import cmd_coeffs, coefficient_rows
from src.cli.config import (
    RunConfig,
    build_config,
    environment_settings,
    load_body,
    parse_int_range,
    parse_tgrid,
    read_config_file,
)
from src.cli.experiments import ExperimentResult, cmd_experiment
from src.cli.output import run_directory, write_summary, write_table
from src.cli.verify import cmd_verify_1d, format_report, hypothesis_orientation

__all__ = [
    "ExperimentResult",
    "RunConfig",
    "build_config",
    "cmd_coeffs",
    "cmd_experiment",
    "cmd_verify_1d",
    "coefficient_rows",
    "environment_settings",
    "format_report",
    "hypothesis_orientation",
    "load_body",
    "parse_int_range",
    "parse_tgrid",
    "read_config_file",
    "run_directory",
    "write_summary",
    "write_table",
]
