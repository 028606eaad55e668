"""
Hit-or-miss Monte Carlo estimators of expected sausage intersection volumes

Z_(k,m)(t) uses k independent bridges pinned at the origin, Q_(k,m)(t) uses k
independent free motions. Each replica samples its own paths and points, and the
standard error is taken over replicas.
"""

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor, as_completed

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field
from tqdm import tqdm

from src.errors import DomainError, PartialResultError, UnsupportedError
from src.geometry.bodies import Ball
from src.montecarlo.paths import bridge_array, motion_array, path_stream
from src.montecarlo.sausage import BiasMode, coverage

logger = logging.getLogger(__name__)

RECORD_COLUMNS = ["family", "k", "m", "t", "mean", "stderr", "replicas", "steps", "seed", "mode"]


class MCEstimate(BaseModel):
    """Replica mean and standard error of one volume estimate"""
    mean: float
    stderr: float = Field(ge=0.0)
    replicas: int = Field(ge=1)
    seed: int
    discretization: int = Field(ge=1)


def _sample_points(rng, m, half, count, stratified):
    if not stratified:
        return rng.uniform(-half, half, size=(count, m))
    cells = max(1, int(round(count ** (1.0 / m))))
    grid = np.stack(np.meshgrid(*[np.arange(cells)] * m, indexing="ij"), axis=-1).reshape(-1, m)
    return -half + (grid + rng.uniform(size=grid.shape)) * (2.0 * half / cells)


def replica_volume(k, body, t, steps, points, seed, replica, pinned, mode, stratified=False,
                   box_scale=1.0):
    """
    Volume of the intersection of k sausages estimated from one set of paths

    Path i of the replica draws from stream (seed, replica, i) and the sample
    points from stream (seed, replica, k). The sampling box has half-width
    box_scale * (r + max |path|).

    Returns:
        float: Box volume times the mean coverage of the sampled points
    """
    m = body.m
    sampler = bridge_array if pinned else motion_array
    paths = [sampler(m, t, steps, 1, path_stream(seed, replica, i))[0] for i in range(k)]
    extent = max(float(np.max(np.linalg.norm(p, axis=1))) for p in paths)
    half = box_scale * (body.r + extent)
    x = _sample_points(path_stream(seed, replica, k), m, half, points, stratified)

    dt = t / steps
    covered = np.ones(len(x))
    for p in paths:
        covered *= coverage(x, p, body.r, dt, mode)
    return (2.0 * half) ** m * float(np.mean(covered))


def _combine(volumes, seed, steps):
    values = np.asarray(volumes, dtype=float)
    stderr = float(np.std(values, ddof=1) / np.sqrt(len(values))) if len(values) > 1 else 0.0
    return MCEstimate(mean=float(np.mean(values)), stderr=stderr, replicas=len(values), seed=seed,
                      discretization=steps)


def _estimate(pinned, k, m, body, t, steps, points_per_replica, replicas, seed,
              mode, stratified, workers, time_budget, progress, box_scale):
    if not isinstance(body, Ball):
        raise UnsupportedError("Monte Carlo estimators support balls only")
    if body.m != m:
        raise DomainError(f"body dimension {body.m} does not match m={m}")
    if k < 1 or replicas < 1 or points_per_replica < 1:
        raise DomainError("k, replicas and points_per_replica must be >= 1")
    if not t > 0:
        raise DomainError(f"time must be positive, got {t}")
    if not box_scale >= 1.0:
        raise DomainError(f"box_scale must be >= 1, got {box_scale}")
    mode = BiasMode(mode)
    workers = workers or int(os.environ.get("SAUSAGE_LAB_THREADS", "1"))

    volumes = {}
    start = time.monotonic()
    label = "Z" if pinned else "Q"
    executor = ThreadPoolExecutor(max_workers=max(1, workers))
    try:
        futures = {
            executor.submit(replica_volume, k, body, t, steps, points_per_replica, seed, replica,
                            pinned, mode, stratified, box_scale): replica
            for replica in range(replicas)
        }
        with tqdm(total=replicas, desc=f"   {label}_({k},{m}) t={t:g}", unit=" replica",
                  ncols=100, disable=None if progress else True) as progress_bar:
            for future in as_completed(futures):
                volumes[futures[future]] = future.result()
                progress_bar.update(1)
                if time_budget is not None and time.monotonic() - start > time_budget \
                        and len(volumes) < replicas:
                    ordered = [volumes[i] for i in sorted(volumes)]
                    partial = _combine(ordered, seed, steps)
                    raise PartialResultError(
                        f"time budget of {time_budget:g}s exhausted after {len(volumes)} of "
                        f"{replicas} replicas",
                        partial, len(volumes),
                    )
    finally:
        executor.shutdown(wait=True, cancel_futures=True)

    estimate = _combine([volumes[i] for i in range(replicas)], seed, steps)
    logger.info("%s_(%d,%d)(%g) = %.6g +- %.2g over %d replicas", label, k, m, t,
                estimate.mean, estimate.stderr, replicas)
    return estimate


def estimate_Z(k, m, body, t, steps=256, points_per_replica=4096, replicas=64, seed=0,
               mode=BiasMode.POLYLINE, stratified=False, workers=None, time_budget=None,
               progress=False, box_scale=1.0):
    """
    Expected volume of the intersection of k pinned sausages of a ball

    Args:
        k (int): Number of bridges
        m (int): Dimension, equal to the ball's
        body (Ball): Ball centred at the origin
        t (float): Bridge duration
        steps (int): Segments per path
        points_per_replica (int): Hit-or-miss points per replica
        replicas (int): Independent replicas
        seed (int): Run seed
        mode (BiasMode): Coverage rule
        stratified (bool): One point per cell of a coarse grid
        workers (int, optional): Threads; defaults to SAUSAGE_LAB_THREADS or 1
        time_budget (float, optional): Seconds before stopping with a partial result
        progress (bool): Show a progress bar
        box_scale (float): Factor >= 1 applied to the sampling box half-width

    Returns:
        MCEstimate: Replica mean and standard error

    Raises:
        PartialResultError: If the time budget runs out
    """
    return _estimate(True, k, m, body, t, steps, points_per_replica, replicas, seed,
                     mode, stratified, workers, time_budget, progress, box_scale)


def estimate_Q(k, m, body, t, steps=256, points_per_replica=4096, replicas=64, seed=0,
               mode=BiasMode.POLYLINE, stratified=False, workers=None, time_budget=None,
               progress=False, box_scale=1.0):
    """Expected volume of the intersection of k unpinned sausages; arguments as estimate_Z"""
    return _estimate(False, k, m, body, t, steps, points_per_replica, replicas, seed,
                     mode, stratified, workers, time_budget, progress, box_scale)


def mc_record(estimate, family, k, m, t, mode):
    """One JSON-lines record for an estimate"""
    return {
        'family': family,
        'k': k,
        'm': m,
        't': t,
        'mean': estimate.mean,
        'stderr': estimate.stderr,
        'replicas': estimate.replicas,
        'steps': estimate.discretization,
        'seed': estimate.seed,
        'mode': BiasMode(mode).value,
    }


def write_records(records, output_path):
    """
    Write Monte Carlo records as JSON lines

    Args:
        records (list): Dicts from mc_record
        output_path (str): Destination path

    Returns:
        str: Path to the written file
    """
    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    pd.DataFrame(records, columns=RECORD_COLUMNS).to_json(
        output_path, orient="records", lines=True, double_precision=15
    )
    return output_path
