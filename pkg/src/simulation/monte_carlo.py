#!/usr/bin/env python3
"""Monte Carlo estimation of decoding probabilities

Every trial draws from its own stream, derived from (seed, trial index), so
the aggregate is identical for any chunking or number of workers.
"""
import math
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field
from scipy.stats import norm

from src.core.config import Settings
from src.core.constants import Limits
from src.core.errors import InvalidArgumentError
from src.core.logger import get_logger
from src.core.models import DecodeMode, NetworkConfig, Scheme, SimulationResult
from src.simulation.protocol import run_ptp_trial, run_trial

logger = get_logger("monte_carlo")


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for one trial"""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def wilson_interval(successes: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion"""
    if trials <= 0:
        raise InvalidArgumentError("trials must be positive")
    phat = successes / trials
    z = float(norm.ppf(0.5 + confidence / 2.0))
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = phat + z2 / (2.0 * trials)
    margin = z * math.sqrt(phat * (1.0 - phat) / trials + z2 / (4.0 * trials * trials))
    low = (center - margin) / denom
    high = (center + margin) / denom
    # Keep the interval around the estimate despite round-off at 0 and 1
    return min(max(low, 0.0), phat), max(min(high, 1.0), phat)


class Tally(BaseModel):
    """Counts merged associatively across chunks"""
    trials: int = 0
    successes: int = 0
    overheard_1: int = 0
    overheard_2: int = 0
    modes: dict[DecodeMode, int] = Field(default_factory=dict)

    def add_mode(self, mode: DecodeMode, count: int = 1) -> None:
        self.modes[mode] = self.modes.get(mode, 0) + count

    def merge(self, other: "Tally") -> "Tally":
        self.trials += other.trials
        self.successes += other.successes
        self.overheard_1 += other.overheard_1
        self.overheard_2 += other.overheard_2
        for mode, count in other.modes.items():
            self.add_mode(mode, count)
        return self


def _network_chunk(start: int, stop: int, cfg: NetworkConfig, seed: int, shared_generation: bool) -> Tally:
    tally = Tally()
    for index in range(start, stop):
        outcome = run_trial(cfg, trial_rng(seed, index), shared_generation)
        tally.trials += 1
        tally.successes += outcome.dest_decoded_both
        tally.overheard_1 += outcome.shared_1
        tally.overheard_2 += outcome.shared_2
        mode = outcome.mode
        if mode != DecodeMode.FAILED:
            tally.add_mode(mode)
    return tally


def _ptp_chunk(start: int, stop: int, n: int, k: int, p: float, scheme: Scheme, seed: int) -> Tally:
    tally = Tally()
    for index in range(start, stop):
        tally.trials += 1
        tally.successes += run_ptp_trial(n, k, p, scheme, trial_rng(seed, index))
    return tally


def _chunks(trials: int, chunk_size: int) -> Iterator[tuple[int, int]]:
    for start in range(0, trials, chunk_size):
        yield start, min(start + chunk_size, trials)


def _run_chunks(
    chunk_fn: Callable[..., Tally],
    args: tuple,
    trials: int,
    workers: int,
    chunk_size: int,
) -> Tally:
    bounds = list(_chunks(trials, chunk_size))
    total = Tally()

    if workers <= 1 or len(bounds) == 1:
        for start, stop in bounds:
            total.merge(chunk_fn(start, stop, *args))
        return total

    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(chunk_fn, start, stop, *args) for start, stop in bounds]
        for future in futures:
            total.merge(future.result())
    return total


def _check_run(trials: int, seed: int) -> None:
    if trials < 1:
        raise InvalidArgumentError(f"trials must be at least 1, got {trials}")
    if not 0 <= seed <= Limits.MAX_SEED:
        raise InvalidArgumentError(f"seed must be a 64-bit unsigned value, got {seed}")


def _result(tally: Tally, seed: int, shared_generation: bool = True) -> SimulationResult:
    ci_low, ci_high = wilson_interval(tally.successes, tally.trials)
    return SimulationResult(
        trials=tally.trials,
        successes=tally.successes,
        estimate=tally.successes / tally.trials,
        ci_low=ci_low,
        ci_high=ci_high,
        seed=seed,
        shared_generation=shared_generation,
        mode_counts=dict(tally.modes),
        overheard_1=tally.overheard_1,
        overheard_2=tally.overheard_2,
    )


def simulate(
    cfg: NetworkConfig,
    trials: int,
    seed: int,
    workers: Optional[int] = None,
    shared_generation: bool = True,
    settings: Optional[Settings] = None,
) -> SimulationResult:
    """Estimate the probability that D recovers both sources

    Args:
        cfg: Network parameters
        trials: Number of independent protocol runs
        seed: 64-bit master seed
        workers: Worker processes (defaults to settings.workers)
        shared_generation: Faithful overhearing (True) or independent relay receptions
        settings: Source of worker and chunk defaults

    Returns:
        Estimate with a 95% Wilson interval and per-route counts
    """
    _check_run(trials, seed)
    settings = settings or Settings()
    workers = workers or settings.workers

    logger.info(f"Simulating {trials} trials (seed={seed}, workers={workers}) for {cfg}")
    start = time.time()
    tally = _run_chunks(_network_chunk, (cfg, seed, shared_generation), trials, workers, settings.chunk_size)
    logger.info(f"Simulation finished in {time.time() - start:.2f}s: {tally.successes}/{tally.trials}")

    return _result(tally, seed, shared_generation)


def simulate_ptp(
    n: int,
    k: int,
    p: float,
    scheme: Scheme,
    trials: int,
    seed: int,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> SimulationResult:
    """Estimate the point-to-point decoding probability of a single link"""
    _check_run(trials, seed)
    if not 1 <= k <= n:
        raise InvalidArgumentError(f"need 1 <= K <= N, got K={k}, N={n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"erasure probability must lie in [0, 1], got {p}")
    settings = settings or Settings()
    workers = workers or settings.workers

    tally = _run_chunks(_ptp_chunk, (n, k, p, scheme, seed), trials, workers, settings.chunk_size)
    return _result(tally, seed)
