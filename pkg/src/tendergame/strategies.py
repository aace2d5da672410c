"""Pure strategies of both players and their canonical orderings.

Labels follow the two conventions used throughout: a sender label gives the
unable bidder's message first ("LH" = unable bids low, able bids high); a
receiver label lists accept/reject letters per observation, low bid first,
and -- in the benchmark game -- the says-unable signal before the says-able
signal within each bid height.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import (
    ACTION_LETTER,
    BENCHMARK,
    MESSAGE_LETTER,
    BenchmarkSignal,
    GameVariant,
    GovAction,
    MarketType,
    Message,
)


@dataclass(frozen=True)
class SenderStrategy:
    """A message for each bidder type."""

    msg_unable: Message
    msg_able: Message

    @property
    def label(self) -> str:
        return MESSAGE_LETTER[self.msg_unable] + MESSAGE_LETTER[self.msg_able]

    def message_for(self, mtype: MarketType) -> Message:
        return self.msg_able if mtype == MarketType.ABLE else self.msg_unable

    @property
    def is_pooling(self) -> bool:
        return self.msg_unable == self.msg_able

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ReceiverStrategy:
    """An accept/reject action per observation.

    ``actions`` has two entries (per message) in the base and accountability
    games and four (per message x signal, in canonical observation order) in
    the benchmark game.
    """

    actions: tuple[GovAction, ...]

    @property
    def label(self) -> str:
        return "".join(ACTION_LETTER[a] for a in self.actions)

    @property
    def observes_signal(self) -> bool:
        return len(self.actions) == 4

    def action_for(self, msg: Message, signal: BenchmarkSignal | None = None) -> GovAction:
        if len(self.actions) == 2:
            return self.actions[msg]
        if signal is None:
            raise ValueError("benchmark receiver strategy needs a signal")
        return self.actions[2 * msg + signal]

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class StrategyProfile:
    sender: SenderStrategy
    receiver: ReceiverStrategy

    @property
    def label(self) -> str:
        return "{%s, %s}" % (self.sender.label, self.receiver.label)


_MSGS = (Message.LOW, Message.HIGH)
_ACTS = (GovAction.ACCEPT, GovAction.REJECT)

SENDER_STRATEGIES: tuple[SenderStrategy, ...] = tuple(
    SenderStrategy(u, a) for u, a in itertools.product(_MSGS, _MSGS)
)
# Canonical order LL, LH, HL, HH.

BASE_RECEIVER_STRATEGIES: tuple[ReceiverStrategy, ...] = tuple(
    ReceiverStrategy(acts) for acts in itertools.product(_ACTS, repeat=2)
)
# Canonical order aa, ar, ra, rr.

BENCHMARK_RECEIVER_STRATEGIES: tuple[ReceiverStrategy, ...] = tuple(
    ReceiverStrategy(acts) for acts in itertools.product(_ACTS, repeat=4)
)
# Lexicographic with a < r: aaaa, aaar, ..., rrrr (16 strategies).


def sender_strategies() -> tuple[SenderStrategy, ...]:
    """The four sender strategies in canonical order LL, LH, HL, HH."""
    return SENDER_STRATEGIES


def receiver_strategies(variant: GameVariant) -> tuple[ReceiverStrategy, ...]:
    """Receiver strategies in canonical order: 4 without a signal, 16 with."""
    if variant.kind == BENCHMARK:
        return BENCHMARK_RECEIVER_STRATEGIES
    return BASE_RECEIVER_STRATEGIES


_SENDER_BY_LABEL = {s.label: s for s in SENDER_STRATEGIES}
_RECEIVER_BY_LABEL = {
    r.label: r
    for r in BASE_RECEIVER_STRATEGIES + BENCHMARK_RECEIVER_STRATEGIES
}


def sender_from_label(label: str) -> SenderStrategy:
    try:
        return _SENDER_BY_LABEL[label]
    except KeyError:
        raise ValueError(f"unknown sender strategy label {label!r}") from None


def receiver_from_label(label: str, variant: GameVariant) -> ReceiverStrategy:
    want = 4 if variant.kind == BENCHMARK else 2
    rs = _RECEIVER_BY_LABEL.get(label)
    if rs is None or len(rs.actions) != want:
        raise ValueError(
            f"receiver strategy label {label!r} is not a {want}-letter encoding"
        )
    return rs
