"""Best responses, pure-strategy Nash equilibria and their diagnostics.

Equilibrium here means *weak* mutual best response under the global tie
tolerance: these games are tie-rich by construction (whole columns of equal
market payoffs), so strict best responses would miss most outcomes.  Each
record also carries an overrun diagnosis and whether sequentially rational
beliefs can support the profile.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    ACCOUNTABILITY,
    BENCHMARK,
    BenchmarkSignal,
    Beliefs,
    DegenerateParamsError,
    GameVariant,
    GovAction,
    MarketType,
    Message,
    ParamSet,
    SIGNAL_LETTER,
    MESSAGE_LETTER,
    benchmark_signal_dist,
    chance_weights,
    terminal_payoffs,
)
from .strategic_form import TIE_TOL, PayoffMatrix
from .strategies import ReceiverStrategy, SenderStrategy, StrategyProfile

CLASSIFICATION = {
    "LL": "pooling-low",
    "HH": "pooling-high",
    "HL": "separating-truthful",
    "LH": "separating-inverted",
}


@dataclass(frozen=True)
class OverrunStats:
    probability: float
    expected_total: float
    market_share: float
    gov_share: float


@dataclass(frozen=True)
class BeliefSupport:
    """Belief requirement at one receiver observation.

    ``interval`` is the set of beliefs P(able | observation) under which the
    prescribed action is optimal (None when empty).  On-path observations
    additionally pin the belief to the Bayes ``posterior``, which must then
    lie inside the interval for the profile to be supportable.
    """

    observation: str
    on_path: bool
    posterior: float | None
    interval: tuple[float, float] | None

    @property
    def ok(self) -> bool:
        if self.interval is None:
            return False
        if not self.on_path:
            return True
        lo, hi = self.interval
        return lo <= self.posterior <= hi


@dataclass(frozen=True)
class EquilibriumRecord:
    id: int
    profile: StrategyProfile
    payoffs: tuple[float, float]
    strict: bool
    classification: str
    overrun_probability: float
    expected_overrun_total: float
    overrun_split: tuple[float, float]
    pbe_supportable: bool
    supporting_beliefs: tuple[BeliefSupport, ...]
    contract_failure: bool

    @property
    def sender_label(self) -> str:
        return self.profile.sender.label

    @property
    def receiver_label(self) -> str:
        return self.profile.receiver.label


def acceptance_probability(profile: StrategyProfile, variant: GameVariant,
                           params: ParamSet) -> float:
    """Ex-ante probability that a submitted bid is accepted.

    Zero means failure to contract: every bid that is actually submitted
    gets rejected and both players keep the fall-back payoff.
    """
    total = 0.0
    for mtype, signal, w in chance_weights(variant, params):
        msg = profile.sender.message_for(mtype)
        if profile.receiver.action_for(msg, signal) == GovAction.ACCEPT:
            total += w
    return total


def sender_best_responses(matrix: PayoffMatrix, rs: ReceiverStrategy | str,
                          tol: float = TIE_TOL) -> set[SenderStrategy]:
    """Sender rows within ``tol`` of the best market payoff against ``rs``."""
    j = matrix.col_index(rs)
    col = matrix.market[:, j]
    best = col.max()
    return {matrix.rows[i] for i in range(matrix.n_rows) if col[i] >= best - tol}


def receiver_best_responses(matrix: PayoffMatrix, ss: SenderStrategy | str,
                            tol: float = TIE_TOL) -> set[ReceiverStrategy]:
    """Receiver columns within ``tol`` of the best government payoff vs ``ss``."""
    i = matrix.row_index(ss)
    row = matrix.gov[i, :]
    best = row.max()
    return {matrix.cols[j] for j in range(matrix.n_cols) if row[j] >= best - tol}


def overrun_stats(profile: StrategyProfile, variant: GameVariant,
                  params: ParamSet) -> OverrunStats:
    """Cost-overrun exposure of one profile.

    An overrun happens exactly when the unable bidder's message is low and
    gets accepted; in the benchmark game acceptance may depend on the signal,
    so the event probability carries the signal distribution of the unable
    type.
    """
    p_accept = 0.0
    if profile.sender.msg_unable == Message.LOW:
        if profile.receiver.observes_signal:
            r = benchmark_signal_dist(variant, MarketType.UNABLE)
            if profile.receiver.action_for(Message.LOW, BenchmarkSignal.SAYS_UNABLE) == GovAction.ACCEPT:
                p_accept += 1.0 - r
            if profile.receiver.action_for(Message.LOW, BenchmarkSignal.SAYS_ABLE) == GovAction.ACCEPT:
                p_accept += r
        elif profile.receiver.action_for(Message.LOW) == GovAction.ACCEPT:
            p_accept = 1.0
    probability = (1.0 - params.gamma) * p_accept
    expected = params.C * probability
    f = variant.overrun_market_share
    return OverrunStats(probability, expected, f * expected, (1.0 - f) * expected)


def _observations(variant: GameVariant):
    if variant.kind == BENCHMARK:
        return tuple(
            (msg, sig)
            for msg in (Message.LOW, Message.HIGH)
            for sig in (BenchmarkSignal.SAYS_UNABLE, BenchmarkSignal.SAYS_ABLE)
        )
    return ((Message.LOW, None), (Message.HIGH, None))


def _observation_label(msg: Message, sig: BenchmarkSignal | None) -> str:
    if sig is None:
        return MESSAGE_LETTER[msg]
    return MESSAGE_LETTER[msg] + SIGNAL_LETTER[sig]


def bayes_beliefs(sender: SenderStrategy, variant: GameVariant,
                  params: ParamSet) -> Beliefs:
    """Posterior P(able | observation) under ``sender``; None off path."""
    g = params.gamma
    out = {}
    for msg, sig in _observations(variant):
        w_able = g * (1.0 if sender.msg_able == msg else 0.0)
        w_unable = (1.0 - g) * (1.0 if sender.msg_unable == msg else 0.0)
        if sig is not None:
            pa = benchmark_signal_dist(variant, MarketType.ABLE)
            pu = benchmark_signal_dist(variant, MarketType.UNABLE)
            w_able *= pa if sig == BenchmarkSignal.SAYS_ABLE else 1.0 - pa
            w_unable *= pu if sig == BenchmarkSignal.SAYS_ABLE else 1.0 - pu
        total = w_able + w_unable
        out[(msg, sig)] = (w_able / total) if total > 0.0 else None
    return Beliefs(out)


def _action_belief_interval(action: GovAction, msg: Message, variant: GameVariant,
                            params: ParamSet, tol: float) -> tuple[float, float] | None:
    """Beliefs mu = P(able | obs) under which ``action`` is optimal at ``msg``.

    Accepting pays I - budget - (1 - mu) * c_gov on a low bid (c_gov is the
    government's share of the overrun) and the belief-free I - H on a high
    bid; rejecting pays 0.  Payoffs are affine in mu, so the optimal set is
    a closed interval.
    """
    if msg == Message.HIGH:
        margin = params.I - params.H
        if action == GovAction.ACCEPT:
            return (0.0, 1.0) if margin >= -tol else None
        return (0.0, 1.0) if margin <= tol else None

    c_gov = (1.0 - variant.overrun_market_share) * params.C
    base_margin = params.I - params.L
    if c_gov <= 0.0:
        if action == GovAction.ACCEPT:
            return (0.0, 1.0) if base_margin >= -tol else None
        return (0.0, 1.0) if base_margin <= tol else None
    if action == GovAction.ACCEPT:
        # I - L - (1 - mu) * c_gov >= -tol  <=>  mu >= 1 - (I - L + tol) / c_gov
        lo = 1.0 - (base_margin + tol) / c_gov
        if lo > 1.0:
            return None
        return (max(0.0, lo), 1.0)
    hi = 1.0 - (base_margin - tol) / c_gov
    if hi < 0.0:
        return None
    return (0.0, min(1.0, hi))


def _sender_interim_ok(profile: StrategyProfile, variant: GameVariant,
                       params: ParamSet, tol: float) -> bool:
    """Each bidder type (even a zero-probability one) must prefer its message."""
    for mtype in (MarketType.UNABLE, MarketType.ABLE):
        chosen = profile.sender.message_for(mtype)
        other = Message.HIGH if chosen == Message.LOW else Message.LOW
        if _interim_market(mtype, other, profile.receiver, variant, params) \
                > _interim_market(mtype, chosen, profile.receiver, variant, params) + tol:
            return False
    return True


def _interim_market(mtype: MarketType, msg: Message, receiver: ReceiverStrategy,
                    variant: GameVariant, params: ParamSet) -> float:
    if not receiver.observes_signal:
        return terminal_payoffs(variant, params, mtype, msg,
                                receiver.action_for(msg))[0]
    p = benchmark_signal_dist(variant, mtype)
    total = 0.0
    for sig, w in ((BenchmarkSignal.SAYS_UNABLE, 1.0 - p),
                   (BenchmarkSignal.SAYS_ABLE, p)):
        total += w * terminal_payoffs(variant, params, mtype, msg,
                                      receiver.action_for(msg, sig))[0]
    return total


def pbe_supportable(profile: StrategyProfile, variant: GameVariant,
                    params: ParamSet, tol: float = TIE_TOL
                    ) -> tuple[bool, tuple[BeliefSupport, ...]]:
    """Can beliefs make this profile a perfect Bayesian equilibrium?

    Requirements checked: on-path beliefs equal the Bayes posterior; at
    every observation the prescribed action maximises belief-weighted
    government payoff (a closed-form threshold test, since that payoff is
    affine in the belief); and each bidder type weakly prefers its own
    message.  Off-path beliefs are free in [0, 1], so those observations
    only need a non-empty supporting interval.
    """
    beliefs = bayes_beliefs(profile.sender, variant, params)
    supports = []
    ok = _sender_interim_ok(profile, variant, params, tol)
    for msg, sig in _observations(variant):
        action = profile.receiver.action_for(msg, sig)
        interval = _action_belief_interval(action, msg, variant, params, tol)
        posterior = beliefs.by_observation[(msg, sig)]
        support = BeliefSupport(
            observation=_observation_label(msg, sig),
            on_path=posterior is not None,
            posterior=posterior,
            interval=interval,
        )
        supports.append(support)
        ok = ok and support.ok
    return ok, tuple(supports)


def pure_nash(matrix: PayoffMatrix, tol: float = TIE_TOL) -> list[EquilibriumRecord]:
    """All weak pure-strategy Nash profiles, fully annotated, in id order."""
    market, gov = matrix.market, matrix.gov
    col_best = market.max(axis=0)
    row_best = gov.max(axis=1)
    sender_ok = market >= col_best[None, :] - tol
    recv_ok = gov >= row_best[:, None] - tol
    sender_unique = sender_ok.sum(axis=0) == 1
    recv_unique = recv_ok.sum(axis=1) == 1

    records = []
    for i in range(matrix.n_rows):
        for j in range(matrix.n_cols):
            if not (sender_ok[i, j] and recv_ok[i, j]):
                continue
            profile = matrix.profile(i, j)
            stats = overrun_stats(profile, matrix.variant, matrix.params)
            pbe_ok, supports = pbe_supportable(profile, matrix.variant,
                                               matrix.params, tol)
            records.append(EquilibriumRecord(
                id=matrix.profile_id(i, j),
                profile=profile,
                payoffs=matrix.entry(i, j),
                strict=bool(sender_unique[j] and recv_unique[i]),
                classification=CLASSIFICATION[profile.sender.label],
                overrun_probability=stats.probability,
                expected_overrun_total=stats.expected_total,
                overrun_split=(stats.market_share, stats.gov_share),
                pbe_supportable=pbe_ok,
                supporting_beliefs=supports,
                contract_failure=acceptance_probability(
                    profile, matrix.variant, matrix.params) == 0.0,
            ))
    return records


@dataclass(frozen=True)
class CovenantResult:
    credible: bool
    threshold: float


@dataclass(frozen=True)
class CovenantComparison:
    """The literal accept-all vs accept-low-only payoff comparison.

    Against a truthful sender the government's gain from accepting all bids
    rather than only low ones reduces to (I - H) * (1 - gamma); its sign is
    what the comparison decides.
    """

    delta: float
    accept_all_weakly_better: bool


def covenant_credible(params: ParamSet) -> CovenantResult:
    """Published credibility test for the accept-everything promise.

    The promise (accept all bids provided the unable bidder reveals itself
    with a high bid) is credible when the infrastructure is worth contracting
    at all (I > L) and market competence clears gamma > (H - I) / (H - L).
    """
    if params.H == params.L:
        raise DegenerateParamsError("covenant threshold undefined when H == L")
    threshold = (params.H - params.I) / (params.H - params.L)
    credible = params.I > params.L and params.gamma > threshold
    return CovenantResult(credible, threshold)


def covenant_comparison(params: ParamSet) -> CovenantComparison:
    delta = (params.I - params.H) * (1.0 - params.gamma)
    return CovenantComparison(delta, delta >= -TIE_TOL)


# Outcome classes of the pure equilibria, as numbered in reports.  Profiles
# grouped together differ only off the path of play (their payoff pairs
# coincide whenever both are equilibria), so they count as one outcome.
BASE_EQUILIBRIUM_OUTCOMES: tuple[frozenset[tuple[str, str]], ...] = (
    frozenset({("LL", "aa"), ("LL", "ar")}),
    frozenset({("LL", "rr")}),
    frozenset({("LH", "aa")}),
    frozenset({("LH", "rr")}),
    frozenset({("HL", "aa")}),
    frozenset({("HL", "rr")}),
    frozenset({("HH", "aa"), ("HH", "ra")}),
    frozenset({("HH", "rr")}),
)

ACCOUNTABILITY_EQUILIBRIUM_OUTCOMES: tuple[frozenset[tuple[str, str]], ...] = (
    frozenset({("LL", "rr")}),
    frozenset({("LH", "rr")}),
    frozenset({("HL", "aa")}),
    frozenset({("HL", "ar")}),
    frozenset({("HL", "rr")}),
    frozenset({("HH", "aa"), ("HH", "ra")}),
    frozenset({("HH", "rr")}),
)


def outcome_class(sender_label: str, receiver_label: str, kind: str) -> int | None:
    """1-based outcome number of a profile, or None if it is never one."""
    table = (ACCOUNTABILITY_EQUILIBRIUM_OUTCOMES if kind == ACCOUNTABILITY
             else BASE_EQUILIBRIUM_OUTCOMES)
    for n, group in enumerate(table, start=1):
        if (sender_label, receiver_label) in group:
            return n
    return None
