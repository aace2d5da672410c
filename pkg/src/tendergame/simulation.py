"""Seeded Monte Carlo play of a profile: the oracle for every expectation.

Reproducibility contract: replication i reads its own Philox counter block
derived from (seed, i), so results do not depend on how replications are
chunked across worker threads. Per-replication outcomes are reduced to
integer class counts before any floating-point arithmetic, which makes the
reduction exact and schedule-independent.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from math import sqrt

import numpy as np
from numpy.random import Generator, Philox

from . import _kernels
from .model import (
    BenchmarkSignal,
    GameVariant,
    GovAction,
    MarketType,
    Message,
    ParamSet,
    benchmark_signal_dist,
    terminal_payoffs,
)
from .strategies import StrategyProfile

GENERATOR_ID = "numpy-philox4x64/counter-block-per-replication/words[0:2]"

# Outcome classes, index = 2 * able + says_able (canonical enum order).
_CLASSES = (
    (MarketType.UNABLE, BenchmarkSignal.SAYS_UNABLE),
    (MarketType.UNABLE, BenchmarkSignal.SAYS_ABLE),
    (MarketType.ABLE, BenchmarkSignal.SAYS_UNABLE),
    (MarketType.ABLE, BenchmarkSignal.SAYS_ABLE),
)


@dataclass(frozen=True)
class SimConfig:
    profile: StrategyProfile
    variant: GameVariant
    params: ParamSet
    n: int
    seed: int

    def check(self) -> list[str]:
        problems = []
        if self.n < 1:
            problems.append(f"replications n must be >= 1, got {self.n}")
        if not (isinstance(self.seed, int) and 0 <= self.seed < 2 ** 64):
            problems.append(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        return problems


@dataclass(frozen=True)
class SimResult:
    mean_market: float
    mean_gov: float
    overrun_frequency: float
    mean_overrun: float
    se_market: float
    se_gov: float
    se_overrun: float
    n: int
    seed: int
    generator: str


def _class_values(config: SimConfig):
    """Per-class payoffs and overrun-event indicator; constants of the run."""
    market = np.empty(4)
    gov = np.empty(4)
    event = np.zeros(4)
    observes = config.profile.receiver.observes_signal
    for c, (mtype, signal) in enumerate(_CLASSES):
        msg = config.profile.sender.message_for(mtype)
        act = config.profile.receiver.action_for(msg, signal if observes else None)
        market[c], gov[c] = terminal_payoffs(config.variant, config.params,
                                             mtype, msg, act)
        if mtype == MarketType.UNABLE and msg == Message.LOW \
                and act == GovAction.ACCEPT:
            event[c] = 1.0
    return market, gov, event


def _signal_probs(config: SimConfig) -> tuple[float, float]:
    if config.variant.observes_signal:
        return (benchmark_signal_dist(config.variant, MarketType.ABLE),
                benchmark_signal_dist(config.variant, MarketType.UNABLE))
    # No signal in play: every draw lands in the says-unable classes, whose
    # payoffs equal the signal-free ones.
    return (0.0, 0.0)


def _count_chunk(seed: int, start: int, stop: int, gamma: float,
                 p_able: float, p_unable: float, kernel) -> np.ndarray:
    gen = Generator(Philox(key=seed).advance(start))
    u = gen.random((stop - start, 4))[:, :2]
    return kernel(np.ascontiguousarray(u), gamma, p_able, p_unable)


def _mean_and_se(counts: np.ndarray, values: np.ndarray, n: int) -> tuple[float, float]:
    total = 0.0
    sumsq = 0.0
    for c in range(4):
        total += int(counts[c]) * float(values[c])
        sumsq += int(counts[c]) * float(values[c]) * float(values[c])
    mean = total / n
    if n < 2:
        return mean, 0.0
    var = (sumsq - n * mean * mean) / (n - 1)
    if var < 0.0:  # rounding guard; variance is 0 in exact arithmetic then
        var = 0.0
    return mean, sqrt(var / n)


def simulate(config: SimConfig, threads: int = 1,
             backend: str | None = None) -> SimResult:
    """Play the profile ``config.n`` times and summarise the outcomes.

    Each replication draws the bidder type and (benchmark variant only) the
    signal from its own counter-indexed substream, applies the strategy
    profile and records the terminal payoffs plus any overrun event (unable
    bidder's low bid accepted).  Identical configs give bit-identical
    results for every ``threads`` value and for both kernels (``backend``
    overrides the TENDERGAME_BACKEND env flag; see :mod:`tendergame._kernels`).
    """
    problems = config.check()
    if problems:
        raise ValueError("; ".join(problems))
    kernel, kernel_name = _kernels.get_kernel(backend)
    gamma = config.params.gamma
    p_able, p_unable = _signal_probs(config)

    n = config.n
    workers = max(1, min(threads, n))
    if workers == 1:
        counts = _count_chunk(config.seed, 0, n, gamma, p_able, p_unable, kernel)
    else:
        bounds = [n * w // workers for w in range(workers + 1)]
        counts = np.zeros(4, dtype=np.int64)
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            jobs = [pool.submit(_count_chunk, config.seed, bounds[w], bounds[w + 1],
                                gamma, p_able, p_unable, kernel)
                    for w in range(workers)]
            for job in jobs:
                counts += job.result()

    v_market, v_gov, v_event = _class_values(config)
    mean_market, se_market = _mean_and_se(counts, v_market, n)
    mean_gov, se_gov = _mean_and_se(counts, v_gov, n)
    _, se_overrun = _mean_and_se(counts, config.params.C * v_event, n)
    overrun_events = int(sum(int(counts[c]) for c in range(4) if v_event[c] > 0.0))
    frequency = overrun_events / n
    return SimResult(
        mean_market=mean_market,
        mean_gov=mean_gov,
        overrun_frequency=frequency,
        mean_overrun=config.params.C * frequency,
        se_market=se_market,
        se_gov=se_gov,
        se_overrun=se_overrun,
        n=n,
        seed=config.seed,
        generator=f"{GENERATOR_ID}#{kernel_name}",
    )
