"""Reduction of the extensive game to its expected-payoff strategic form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (
    BenchmarkSignal,
    GameVariant,
    MarketType,
    ParamSet,
    benchmark_signal_dist,
    chance_weights,
    terminal_payoffs,
)
from .strategies import (
    ReceiverStrategy,
    SenderStrategy,
    StrategyProfile,
    receiver_strategies,
    sender_strategies,
)

# Global tie tolerance: payoffs within this of each other count as equal.
TIE_TOL = 1e-9


def expected_payoffs(profile: StrategyProfile, variant: GameVariant,
                     params: ParamSet) -> tuple[float, float]:
    """Ex-ante (market, government) payoff of a profile.

    The expectation runs over the bidder type (weights 1-gamma, gamma) and,
    in the benchmark game, over the competence signal.  Every strategic-form
    matrix entry is produced by this single function.
    """
    return _expected(profile.sender, profile.receiver, variant, params)


def _expected(sender: SenderStrategy, receiver: ReceiverStrategy,
              variant: GameVariant, params: ParamSet) -> tuple[float, float]:
    market = 0.0
    gov = 0.0
    for mtype, signal, w in chance_weights(variant, params):
        msg = sender.message_for(mtype)
        act = receiver.action_for(msg, signal)
        m, g = terminal_payoffs(variant, params, mtype, msg, act)
        market += w * m
        gov += w * g
    return (market, gov)


def interim_payoffs(profile: StrategyProfile, variant: GameVariant,
                    params: ParamSet) -> dict[MarketType, tuple[float, float]]:
    """Per-type payoff view: expectation over the signal only.

    Diagnostic companion to :func:`expected_payoffs`; the gamma-weighted
    combination of its values equals the ex-ante pair.  Defined for
    zero-probability types too.
    """
    out = {}
    for mtype in (MarketType.UNABLE, MarketType.ABLE):
        msg = profile.sender.message_for(mtype)
        if variant.observes_signal:
            p = benchmark_signal_dist(variant, mtype)
            market = gov = 0.0
            for sig, w in ((BenchmarkSignal.SAYS_UNABLE, 1.0 - p),
                           (BenchmarkSignal.SAYS_ABLE, p)):
                m, g = terminal_payoffs(variant, params, mtype, msg,
                                        profile.receiver.action_for(msg, sig))
                market += w * m
                gov += w * g
            out[mtype] = (market, gov)
        else:
            out[mtype] = terminal_payoffs(variant, params, mtype, msg,
                                          profile.receiver.action_for(msg))
    return out


@dataclass(frozen=True)
class PayoffMatrix:
    """Strategic form: 4 sender rows x 4 or 16 receiver columns.

    ``market`` and ``gov`` are read-only float arrays of shape
    (4, n_receiver); entry (i, j) is the ex-ante payoff of profile
    (rows[i], cols[j]).
    """

    variant: GameVariant
    params: ParamSet
    rows: tuple[SenderStrategy, ...]
    cols: tuple[ReceiverStrategy, ...]
    market: np.ndarray
    gov: np.ndarray

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.cols)

    def entry(self, i: int, j: int) -> tuple[float, float]:
        return (float(self.market[i, j]), float(self.gov[i, j]))

    def profile(self, i: int, j: int) -> StrategyProfile:
        return StrategyProfile(self.rows[i], self.cols[j])

    def profile_id(self, i: int, j: int) -> int:
        """Row-major ordinal of profile (i, j) in canonical order."""
        return i * self.n_cols + j

    def row_index(self, sender: SenderStrategy | str) -> int:
        label = sender if isinstance(sender, str) else sender.label
        for i, s in enumerate(self.rows):
            if s.label == label:
                return i
        raise ValueError(f"sender strategy {label!r} is not a row of this matrix")

    def col_index(self, receiver: ReceiverStrategy | str) -> int:
        label = receiver if isinstance(receiver, str) else receiver.label
        for j, r in enumerate(self.cols):
            if r.label == label:
                return j
        raise ValueError(f"receiver strategy {label!r} is not a column of this matrix")


def strategic_form(variant: GameVariant, params: ParamSet) -> PayoffMatrix:
    """Build the full expected-payoff matrix for a variant at given params."""
    rows = sender_strategies()
    cols = receiver_strategies(variant)
    market = np.empty((len(rows), len(cols)))
    gov = np.empty((len(rows), len(cols)))
    for i, s in enumerate(rows):
        for j, r in enumerate(cols):
            market[i, j], gov[i, j] = _expected(s, r, variant, params)
    market.flags.writeable = False
    gov.flags.writeable = False
    return PayoffMatrix(variant, params, rows, cols, market, gov)


def onpath_equivalent(rs1: ReceiverStrategy, rs2: ReceiverStrategy,
                      sender: SenderStrategy, variant: GameVariant,
                      params: ParamSet, tol: float = TIE_TOL) -> bool:
    """True when rs1 and rs2 give identical payoff pairs against ``sender``.

    Receiver strategies differing only at observations the sender strategy
    never produces are indistinguishable on the path of play.
    """
    m1, g1 = _expected(sender, rs1, variant, params)
    m2, g2 = _expected(sender, rs2, variant, params)
    return abs(m1 - m2) <= tol and abs(g1 - g2) <= tol
