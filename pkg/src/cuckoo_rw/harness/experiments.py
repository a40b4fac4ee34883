"""Experiment runners.

Every trial draws its randomness from ``mix(config.seed, trial)`` only, and
results are gathered by trial index, so output does not depend on how many
worker processes ran the trials or in which order they finished.
"""

from __future__ import annotations

import math
import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Optional

import numpy as np

from ..analytics import (
    DomainError,
    core_prediction,
    load_threshold,
    phase_length,
    stripping_constant,
    threshold_report,
)
from ..hashspace import HashFamily
from ..hypergraph import (
    Hypergraph,
    check_density,
    check_expansion,
    free_distances,
    h_neighborhood_size,
    is_orientable,
    max_density,
    neighborhood_bound,
    read_hypergraph,
    sample_hypergraph,
    strip_core,
)
from ..table import CuckooTable, default_step_cap
from .config import ExperimentConfig, mix

NEIGHBORHOOD_MAX_T = 12


@dataclass(frozen=True)
class ScanRow:
    k: int
    n: int
    c: float
    trials: int
    orientable_count: int
    orientable_fraction: float
    mean_matching_time_ms: Optional[float]


@dataclass(frozen=True)
class InsertBenchRow:
    k: int
    n: int
    m: int
    seed: int
    success_count: int
    max_steps: int
    p50_steps: int
    p99_steps: int
    total_steps: int
    failures: int


@dataclass(frozen=True)
class CoreRow:
    k: int
    n: int
    c: float
    trial: int
    seed: int
    pred_vertex_fraction: float
    emp_vertex_fraction: float
    vertex_deviation: float
    pred_edge_fraction: float
    emp_edge_fraction: float
    edge_deviation: float
    pred_density: float


@dataclass(frozen=True)
class AuditRow:
    k: int
    n: int
    c: float
    trial: int
    seed: int
    orientable: bool
    delta: float
    density_ok: bool
    max_density: float
    expansion_samples: int
    expansion_ok: bool
    nbhd_probes: int
    nbhd_violations: int
    stripping_C: Optional[int]
    frac_within_C: Optional[float]
    phase_length: Optional[int]


def map_trials(fn: Callable[[int], object], trials: int, workers: int = 1) -> list:
    """``[fn(0), ..., fn(trials-1)]``, optionally across worker processes."""
    if workers <= 1 or trials <= 1:
        return [fn(i) for i in range(trials)]
    with ProcessPoolExecutor(max_workers=min(workers, trials)) as pool:
        return list(pool.map(fn, range(trials)))


def _load_fixture(config: ExperimentConfig) -> Optional[Hypergraph]:
    if config.fixture is None:
        return None
    H = read_hypergraph(config.fixture)
    config.k, config.n = H.k, H.n
    return H


def run_thresholds(config: ExperimentConfig) -> list[dict]:
    return [threshold_report(config.k).as_dict()]


# -- orientability scan -------------------------------------------------------

def _scan_trial(config: ExperimentConfig, loads: tuple, trial: int) -> list[tuple[bool, float]]:
    # one hypergraph per trial; loads use nested prefixes of it
    m_max = math.floor(loads[-1] * config.n)
    H = sample_hypergraph(config.n, m_max, config.k, mix(config.seed, trial))
    out = []
    for c in loads:
        sub = H.prefix(math.floor(c * config.n))
        start = time.perf_counter()
        ok, _ = is_orientable(sub)
        out.append((ok, (time.perf_counter() - start) * 1e3))
    return out


def run_scan(config: ExperimentConfig) -> list[ScanRow]:
    config.validate()
    fixture = _load_fixture(config)
    if fixture is not None:
        start = time.perf_counter()
        ok, _ = is_orientable(fixture)
        ms = (time.perf_counter() - start) * 1e3
        return [ScanRow(fixture.k, fixture.n, fixture.m / fixture.n, 1, int(ok), float(ok),
                        ms if config.timing else None)]
    loads = config.loads()
    results = map_trials(partial(_scan_trial, config, loads), config.trials, config.workers)
    rows = []
    for j, c in enumerate(loads):
        count = sum(1 for r in results if r[j][0])
        ms = sum(r[j][1] for r in results) / config.trials
        rows.append(ScanRow(
            k=config.k, n=config.n, c=c, trials=config.trials,
            orientable_count=count,
            orientable_fraction=count / config.trials,
            mean_matching_time_ms=ms if config.timing else None,
        ))
    return rows


# -- insertion benchmark ------------------------------------------------------

def insert_steps(k: int, n: int, m: int, seed: int, step_cap: Optional[int] = None) -> tuple[list[int], int]:
    """Insert items ``0..m-1`` into a fresh table; return per-insert steps and the failure count."""
    family = HashFamily(k, n, mix(seed, 0))
    table = CuckooTable(family, walk_seed=mix(seed, 1), step_cap=step_cap)
    steps = []
    failures = 0
    for item in range(m):
        outcome = table.insert(item)
        steps.append(outcome.steps)
        failures += not outcome.success
    return steps, failures


def _bench_trial(config: ExperimentConfig, m: int, trial: int) -> InsertBenchRow:
    seed = mix(config.seed, trial)
    cap = config.step_cap if config.step_cap is not None else default_step_cap(config.n)
    steps, failures = insert_steps(config.k, config.n, m, seed, cap)
    if steps:
        arr = np.asarray(steps)
        p50 = int(np.percentile(arr, 50, method="inverted_cdf"))
        p99 = int(np.percentile(arr, 99, method="inverted_cdf"))
        mx, total = int(arr.max()), int(arr.sum())
    else:
        p50 = p99 = mx = total = 0
    return InsertBenchRow(
        k=config.k, n=config.n, m=m, seed=seed,
        success_count=m - failures, max_steps=mx, p50_steps=p50,
        p99_steps=p99, total_steps=total, failures=failures,
    )


def run_insert_bench(config: ExperimentConfig) -> list[InsertBenchRow]:
    config.validate()
    threshold = load_threshold(config.k)
    if config.m is not None:
        sizes = [int(config.m)]
    else:
        sizes = [math.floor(c * config.n) for c in config.loads()]
    rows: list[InsertBenchRow] = []
    for m in sizes:
        if m >= threshold * config.n:
            warnings.warn(
                f"load {m / config.n:.4f} is at or above the threshold {threshold:.4f} for k={config.k}",
                RuntimeWarning,
                stacklevel=2,
            )
        rows.extend(map_trials(partial(_bench_trial, config, m), config.trials, config.workers))
    return rows


# -- core size ----------------------------------------------------------------

def _core_row(config: ExperimentConfig, c: float, trial: int, seed: int, H: Hypergraph) -> CoreRow:
    core = strip_core(H)
    pred = core_prediction(c, config.k)
    ev = len(core.core_vertices) / H.n
    ee = len(core.core_edges) / H.n
    return CoreRow(
        k=config.k, n=H.n, c=c, trial=trial, seed=seed,
        pred_vertex_fraction=pred.vertex_fraction, emp_vertex_fraction=ev,
        vertex_deviation=abs(ev - pred.vertex_fraction),
        pred_edge_fraction=pred.edge_fraction, emp_edge_fraction=ee,
        edge_deviation=abs(ee - pred.edge_fraction),
        pred_density=pred.density,
    )


def _core_trial(config: ExperimentConfig, loads: tuple, trial: int) -> list[CoreRow]:
    seed = mix(config.seed, trial)
    rows = []
    for c in loads:
        H = sample_hypergraph(config.n, math.floor(c * config.n), config.k, seed)
        rows.append(_core_row(config, c, trial, seed, H))
    return rows


def run_core(config: ExperimentConfig) -> list[CoreRow]:
    config.validate()
    fixture = _load_fixture(config)
    if fixture is not None:
        return [_core_row(config, fixture.m / fixture.n, 0, 0, fixture)]
    loads = config.loads()
    per_trial = map_trials(partial(_core_trial, config, loads), config.trials, config.workers)
    # group by load first, then trial
    return [per_trial[t][j] for j in range(len(loads)) for t in range(config.trials)]


# -- structural audit ---------------------------------------------------------

def _audit_instance(config: ExperimentConfig, c: float, trial: int, seed: int, H: Hypergraph) -> list[AuditRow]:
    k, n = H.k, H.n
    density_results = [(d, check_density(H, d)[0]) for d in config.deltas]
    dens = max_density(H)
    expansion_ok, _ = check_expansion(
        H, mode="sampled", samples=config.samples, max_size=config.max_subset, seed=mix(seed, 2)
    )
    ok, orientation = is_orientable(H)
    violations = 0
    probes = 0
    C = frac = plen = None
    if ok:
        rng = random.Random(mix(seed, 3))
        for _ in range(config.probes):
            v = rng.randrange(n)
            t = rng.randint(0, NEIGHBORHOOD_MAX_T)
            probes += 1
            if h_neighborhood_size(H, orientation, v, t) > neighborhood_bound(k, t):
                violations += 1
        delta_est = 1 - float(dens)
        if 0.0 < delta_est < 1.0:
            C = stripping_constant(config.alpha, delta_est)
            dist = free_distances(H, orientation)
            frac = sum(1 for d in dist if d <= C) / n
            try:
                plen = phase_length(n, k, config.zeta, C)
            except DomainError:
                plen = None
    return [
        AuditRow(
            k=k, n=n, c=c, trial=trial, seed=seed, orientable=ok, delta=d,
            density_ok=passed, max_density=float(dens),
            expansion_samples=config.samples, expansion_ok=expansion_ok,
            nbhd_probes=probes, nbhd_violations=violations,
            stripping_C=C, frac_within_C=frac, phase_length=plen,
        )
        for d, passed in density_results
    ]


def _audit_trial(config: ExperimentConfig, loads: tuple, trial: int) -> list[AuditRow]:
    seed = mix(config.seed, trial)
    rows = []
    for c in loads:
        H = sample_hypergraph(config.n, math.floor(c * config.n), config.k, seed)
        rows.extend(_audit_instance(config, c, trial, seed, H))
    return rows


def run_audit(config: ExperimentConfig) -> list[AuditRow]:
    config.validate()
    fixture = _load_fixture(config)
    if fixture is not None:
        return _audit_instance(config, fixture.m / fixture.n, 0, 0, fixture)
    loads = config.loads()
    per_trial = map_trials(partial(_audit_trial, config, loads), config.trials, config.workers)
    return [row for rows in per_trial for row in rows]


RUNNERS = {
    "thresholds": run_thresholds,
    "scan": run_scan,
    "insert-bench": run_insert_bench,
    "core": run_core,
    "audit": run_audit,
}


def run(config: ExperimentConfig) -> list:
    config.validate()
    return RUNNERS[config.kind](config)
