"""Shared fixtures and independent oracles used across the test suite.

The oracles here deliberately re-derive results by brute force (exhaustive
deviation scans, belief grids, direct enumeration) so that library code is
always checked against a second, independent route.
"""

from __future__ import annotations

import numpy as np
import pytest

from tendergame import (
    GameVariant,
    GovAction,
    MarketType,
    Message,
    ParamSet,
    PayoffMatrix,
    StrategyProfile,
    benchmark_signal_dist,
    terminal_payoffs,
)

TOL = 1e-9


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_params(rng, gamma_interior: bool = False, lam: bool = False) -> ParamSet:
    H = float(rng.uniform(0.5, 20.0))
    gamma = float(rng.uniform(0.05, 0.95)) if gamma_interior else float(rng.uniform(0.0, 1.0))
    if lam:
        return ParamSet.from_lambda(
            I=float(rng.uniform(0.0, 25.0)), lam=float(rng.uniform(0.0, 1.0)),
            H=H, C=float(rng.uniform(0.0, 15.0)), R=float(rng.uniform(0.1, 5.0)),
            gamma=gamma)
    return ParamSet(
        I=float(rng.uniform(0.0, 25.0)), L=float(rng.uniform(0.0, H)), H=H,
        C=float(rng.uniform(0.0, 15.0)), R=float(rng.uniform(0.1, 5.0)),
        gamma=gamma)


def random_variant(rng, kind: str) -> GameVariant:
    if kind == "base":
        return GameVariant.base()
    if kind == "accountability":
        return GameVariant.accountability(float(rng.uniform(0.0, 1.0)))
    return GameVariant.benchmark(float(rng.uniform(0.0, 1.0)),
                                 float(rng.uniform(0.0, 1.0)))


def nash_by_deviation_scan(matrix: PayoffMatrix, tol: float = TOL):
    """Independent equilibrium oracle: scan every unilateral deviation."""
    found = []
    for i in range(matrix.n_rows):
        for j in range(matrix.n_cols):
            if any(matrix.market[i2, j] > matrix.market[i, j] + tol
                   for i2 in range(matrix.n_rows)):
                continue
            if any(matrix.gov[i, j2] > matrix.gov[i, j] + tol
                   for j2 in range(matrix.n_cols)):
                continue
            found.append((matrix.rows[i].label, matrix.cols[j].label))
    return found


def _obs_weights(sender, variant, params):
    """P(type, observation) table, re-derived from first principles."""
    weights = {}
    types = ((MarketType.UNABLE, 1.0 - params.gamma), (MarketType.ABLE, params.gamma))
    for mtype, p_type in types:
        msg = sender.message_for(mtype)
        if variant.observes_signal:
            pa = benchmark_signal_dist(variant, mtype)
            for sig, p_sig in ((0, 1.0 - pa), (1, pa)):
                weights[(mtype, (msg, sig))] = p_type * p_sig
        else:
            weights[(mtype, (msg, None))] = p_type
    return weights


def pbe_by_belief_grid(profile: StrategyProfile, variant, params,
                       grid: int = 4001, tol: float = TOL) -> bool:
    """Independent PBE oracle: search beliefs on a grid instead of thresholds.

    On-path observations pin the belief to the Bayes posterior; off-path
    observations may take any grid belief.  The sender check compares each
    type's expected payoff from its own message with the alternative.
    """
    from tendergame import BenchmarkSignal

    # Sender: every type weakly prefers its prescribed message.
    for mtype in (MarketType.UNABLE, MarketType.ABLE):
        payoff = {}
        for msg in (Message.LOW, Message.HIGH):
            if variant.observes_signal:
                pa = benchmark_signal_dist(variant, mtype)
                total = 0.0
                for sig, p_sig in ((BenchmarkSignal.SAYS_UNABLE, 1.0 - pa),
                                   (BenchmarkSignal.SAYS_ABLE, pa)):
                    act = profile.receiver.action_for(msg, sig)
                    total += p_sig * terminal_payoffs(variant, params, mtype, msg, act)[0]
                payoff[msg] = total
            else:
                act = profile.receiver.action_for(msg)
                payoff[msg] = terminal_payoffs(variant, params, mtype, msg, act)[0]
        chosen = profile.sender.message_for(mtype)
        other = Message.HIGH if chosen == Message.LOW else Message.LOW
        if payoff[other] > payoff[chosen] + tol:
            return False

    # Receiver: at every observation some admissible belief must make the
    # prescribed action optimal.
    weights = _obs_weights(profile.sender, variant, params)
    if variant.observes_signal:
        observations = [(msg, sig) for msg in (Message.LOW, Message.HIGH)
                        for sig in (0, 1)]
    else:
        observations = [(Message.LOW, None), (Message.HIGH, None)]
    for obs in observations:
        w_able = weights.get((MarketType.ABLE, obs), 0.0)
        w_unable = weights.get((MarketType.UNABLE, obs), 0.0)
        total = w_able + w_unable
        if total > 0.0:
            candidates = [w_able / total]
        else:
            candidates = list(np.linspace(0.0, 1.0, grid))
        msg = obs[0]
        action = profile.receiver.action_for(msg, obs[1])
        def gov_value(mu, act):
            if act == GovAction.REJECT:
                return 0.0
            a = terminal_payoffs(variant, params, MarketType.ABLE, msg, act)[1]
            u = terminal_payoffs(variant, params, MarketType.UNABLE, msg, act)[1]
            return mu * a + (1.0 - mu) * u
        other = GovAction.REJECT if action == GovAction.ACCEPT else GovAction.ACCEPT
        if not any(gov_value(mu, action) >= gov_value(mu, other) - tol
                   for mu in candidates):
            return False
    return True


@pytest.fixture
def base_variant():
    return GameVariant.base()


@pytest.fixture
def textbook_params():
    """The worked numeric example used throughout: I=10 L=4 H=6 C=5 R=1 g=0.5."""
    return ParamSet(I=10.0, L=4.0, H=6.0, C=5.0, R=1.0, gamma=0.5)
