"""
Run configuration: flags, config file, environment and defaults
"""

import os
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.coefficients.boundary import Normalization
from src.errors import UsageError
from src.geometry.bodies import Orientation, parse_body
from src.montecarlo.sausage import BiasMode

ENV_THREADS = "SAUSAGE_LAB_THREADS"
ENV_OUTPUT_DIR = "SAUSAGE_LAB_OUTPUT_DIR"

COMMANDS = ("coeffs", "verify-1d", "experiment")
EXPERIMENTS = ("q-exact", "q-mc", "z-mc", "z-planar")


def parse_int_range(text):
    """
    Parse "3", "1..10" or "1,2,5" into a list of integers

    Args:
        text (str): Range expression

    Returns:
        list: The integers, in order
    """
    values = []
    for part in str(text).split(','):
        part = part.strip()
        if not part:
            continue
        if '..' in part:
            lo, hi = part.split('..', 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    if not values:
        raise ValueError(f"empty range '{text}'")
    return values


def parse_tgrid(text):
    """
    Parse "lo:hi:n" (geometric grid) or a comma-separated list of times

    Args:
        text (str): Grid expression

    Returns:
        list: Times in increasing order
    """
    text = str(text).strip()
    if ':' in text:
        lo, hi, count = text.split(':')
        if int(count) < 2:
            raise ValueError("a geometric grid needs at least 2 points")
        return [float(t) for t in np.geomspace(float(lo), float(hi), int(count))]
    return sorted(float(t) for t in text.split(',') if t.strip())


class RunConfig(BaseModel):
    """
    Full parameter set of one run; recorded in every summary file

    Options left as None take the per-command default (for example the body and
    the time grid of each experiment).
    """
    model_config = ConfigDict(extra="forbid")

    command: Literal["coeffs", "verify-1d", "experiment"]
    experiment: Optional[Literal["q-exact", "q-mc", "z-mc", "z-planar"]] = None
    family: Optional[Literal["alpha", "c", "a", "b"]] = None
    k: List[int] = Field(default_factory=lambda: [1])
    j: Optional[List[int]] = None
    j_max: Optional[int] = Field(default=None, ge=0)
    k_max: int = Field(default=8, ge=1, le=12)
    m: Optional[int] = Field(default=None, ge=1)
    body: Optional[str] = None
    orientation: Orientation = Orientation.INWARD
    normalization: Optional[Normalization] = None
    tgrid: Optional[List[float]] = None
    t: Optional[List[float]] = None
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    replicas: int = Field(default=64, ge=2)
    steps: int = Field(default=256, ge=2)
    points: int = Field(default=4096, ge=1)
    mode: BiasMode = BiasMode.POLYLINE
    stratified: bool = False
    tolerance: float = Field(default=1e-13, gt=0.0)
    eps_exponent: Optional[float] = Field(default=None, gt=0.4, lt=0.5)
    threads: int = Field(default=1, ge=1)
    time_budget: Optional[float] = Field(default=None, gt=0.0)
    output_dir: str = "runs"
    output_format: Literal["csv", "json"] = "csv"
    quiet: bool = False

    @field_validator("k", "j", mode="before")
    @classmethod
    def _int_range(cls, value):
        if isinstance(value, (str, int)):
            return parse_int_range(value)
        return value

    @field_validator("tgrid", "t", mode="before")
    @classmethod
    def _time_list(cls, value):
        if isinstance(value, str):
            return parse_tgrid(value)
        if isinstance(value, (int, float)):
            return [float(value)]
        return value

    @field_validator("tgrid", "t")
    @classmethod
    def _positive_times(cls, value):
        if value is not None and any(t <= 0 for t in value):
            raise ValueError("times must be positive")
        return value

    @field_validator("k")
    @classmethod
    def _positive_k(cls, value):
        if any(k < 1 for k in value):
            raise ValueError("k values must be >= 1")
        return value


def read_config_file(file_path):
    """
    Read a key = value configuration file

    Blank lines and lines starting with # are skipped; keys may use dashes or
    underscores.

    Args:
        file_path (str): Path to the config file

    Returns:
        dict: Settings keyed by RunConfig field name
    """
    if not os.path.exists(file_path):
        raise UsageError(f"Config file not found: {file_path}")
    settings = {}
    with open(file_path, 'r', encoding='utf-8') as config_file:
        for number, line in enumerate(config_file, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise UsageError(f"{file_path}:{number}: expected 'key = value'")
            key, value = line.split('=', 1)
            settings[key.strip().lstrip('-').replace('-', '_')] = value.strip()
    return settings


def environment_settings():
    """Defaults taken from SAUSAGE_LAB_* environment variables"""
    settings = {}
    if os.environ.get(ENV_THREADS):
        settings['threads'] = os.environ[ENV_THREADS]
    if os.environ.get(ENV_OUTPUT_DIR):
        settings['output_dir'] = os.environ[ENV_OUTPUT_DIR]
    return settings


def build_config(flags):
    """
    Merge settings with precedence flag > config file > environment > default

    Args:
        flags (dict): Parsed command line options; None means not given

    Returns:
        RunConfig: Validated configuration

    Raises:
        UsageError: If a setting is invalid
    """
    flags = dict(flags)
    config_path = flags.pop('config', None)
    flags.pop('log_level', None)
    settings = environment_settings()
    if config_path:
        settings.update(read_config_file(config_path))
    settings.update({key: value for key, value in flags.items() if value is not None})
    try:
        return RunConfig(**settings)
    except (ValidationError, ValueError) as e:
        raise UsageError(f"invalid configuration: {e}") from e


def load_body(spec):
    """
    Parse a --body option

    Args:
        spec (str): Body description, see parse_body

    Returns:
        CompactBody: The parsed body

    Raises:
        UsageError: If the description is invalid or names a missing curve file
    """
    try:
        return parse_body(spec)
    except (ValueError, OSError) as e:
        raise UsageError(f"invalid --body: {e}") from e
