"""Players, parameters and terminal payoffs of the tender signalling game.

A market party (the bidder) privately knows whether it can deliver the
project at the low budget; it bids low or high.  The government observes
the bid -- and, in the benchmark variant, a noisy competence signal -- and
accepts or rejects.  All values here are immutable and every function is
pure, so the module is safe to call from any number of threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum


class MarketType(IntEnum):
    """Private type of the bidder.  Canonical order: (UNABLE, ABLE)."""

    UNABLE = 0
    ABLE = 1


class Message(IntEnum):
    """Bid height.  Canonical order: (LOW, HIGH)."""

    LOW = 0
    HIGH = 1


class GovAction(IntEnum):
    """Government move on a tender.  Canonical order: (ACCEPT, REJECT)."""

    ACCEPT = 0
    REJECT = 1


class BenchmarkSignal(IntEnum):
    """Outcome of the competence benchmark.  Canonical order: (SAYS_UNABLE, SAYS_ABLE)."""

    SAYS_UNABLE = 0
    SAYS_ABLE = 1


MESSAGE_LETTER = {Message.LOW: "L", Message.HIGH: "H"}
ACTION_LETTER = {GovAction.ACCEPT: "a", GovAction.REJECT: "r"}
SIGNAL_LETTER = {BenchmarkSignal.SAYS_UNABLE: "u", BenchmarkSignal.SAYS_ABLE: "a"}

BASE = "base"
ACCOUNTABILITY = "accountability"
BENCHMARK = "benchmark"
VARIANT_KINDS = (BASE, ACCOUNTABILITY, BENCHMARK)


class VariantError(ValueError):
    """An operation was asked of a game variant that does not support it."""


class DegenerateParamsError(ValueError):
    """Parameters make the requested quantity undefined (e.g. H == L)."""


@dataclass(frozen=True)
class ParamSet:
    """Economic parameters of one game instance.

    I      value of the infrastructure to the government
    L, H   low / high bid budget, L <= H
    C      cost overrun incurred when an unable bidder's low bid is accepted
    R      commission / reputation benefit to the bidder on acceptance
    gamma  prior probability that the bidder is able
    lam    optional ratio L/H used by region scans; set by :meth:`from_lambda`
    """

    I: float
    L: float
    H: float
    C: float
    R: float
    gamma: float
    lam: float | None = None

    @classmethod
    def from_lambda(cls, I, lam, H, C, R, gamma) -> "ParamSet":
        """Build a ParamSet with L tied to H as L = lam * H (exactly)."""
        return cls(I=I, L=lam * H, H=H, C=C, R=R, gamma=gamma, lam=lam)

    def replace_gamma(self, gamma: float) -> "ParamSet":
        return ParamSet(self.I, self.L, self.H, self.C, self.R, gamma, self.lam)

    def scaled(self, k: float) -> "ParamSet":
        """Multiply every money field by k; probabilities are untouched."""
        return ParamSet(self.I * k, self.L * k, self.H * k, self.C * k,
                        self.R * k, self.gamma, self.lam)


@dataclass(frozen=True)
class GameVariant:
    """Which rules are in force.

    kind  "base", "accountability" or "benchmark"
    f     share of an overrun borne by the bidder (accountability only)
    q     P(benchmark says able | able)           (benchmark only)
    r     P(benchmark says able | unable)         (benchmark only)
    """

    kind: str
    f: float | None = None
    q: float | None = None
    r: float | None = None

    @classmethod
    def base(cls) -> "GameVariant":
        return cls(BASE)

    @classmethod
    def accountability(cls, f: float) -> "GameVariant":
        return cls(ACCOUNTABILITY, f=f)

    @classmethod
    def benchmark(cls, q: float, r: float) -> "GameVariant":
        return cls(BENCHMARK, q=q, r=r)

    @property
    def observes_signal(self) -> bool:
        return self.kind == BENCHMARK

    @property
    def overrun_market_share(self) -> float:
        """Fraction of C charged to the bidder; 0 outside accountability."""
        return self.f if self.kind == ACCOUNTABILITY and self.f is not None else 0.0


@dataclass(frozen=True)
class Beliefs:
    """Government posterior P(able | observation).

    Base/accountability observations are messages; benchmark observations are
    (message, signal) pairs.  A value of None marks an observation that has
    zero probability under the sender strategy (off the equilibrium path).
    """

    by_observation: dict = field(default_factory=dict)

    @property
    def s(self) -> float | None:
        """P(able | low bid observed), base-game convenience accessor."""
        return self.by_observation.get((Message.LOW, None))

    @property
    def t(self) -> float | None:
        """P(able | high bid observed), base-game convenience accessor."""
        return self.by_observation.get((Message.HIGH, None))


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]
    warnings: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_prob(x) -> bool:
    return isinstance(x, (int, float)) and 0.0 <= x <= 1.0


def validate(params: ParamSet, variant: GameVariant) -> ValidationReport:
    """Check every structural invariant; returns violations and soft warnings.

    Violations are hard errors (e.g. L > H).  A benchmark whose error rates
    make the signal misleading (q <= 0.5 or r >= 0.5) is legal but earns a
    warning because such a benchmark cannot help the government.
    """
    violations: list[str] = []
    warnings: list[str] = []

    for name in ("I", "L", "H", "C", "R"):
        v = getattr(params, name)
        if not (isinstance(v, (int, float)) and v >= 0.0):
            violations.append(f"{name} must be a nonnegative amount, got {v!r}")
    if not _is_prob(params.gamma):
        violations.append(f"gamma must lie in [0, 1], got {params.gamma!r}")
    if params.lam is not None and not _is_prob(params.lam):
        violations.append(f"lambda must lie in [0, 1], got {params.lam!r}")
    if isinstance(params.L, (int, float)) and isinstance(params.H, (int, float)) \
            and params.L > params.H:
        violations.append(f"L > H (L={params.L!r}, H={params.H!r})")

    if variant.kind not in VARIANT_KINDS:
        violations.append(f"unknown variant kind {variant.kind!r}")
    if variant.kind == ACCOUNTABILITY:
        if variant.f is None:
            violations.append("accountability variant requires f")
        elif not _is_prob(variant.f):
            violations.append(f"f must lie in [0, 1], got {variant.f!r}")
    elif variant.f is not None:
        violations.append(f"f is only valid for the accountability variant, got f={variant.f!r}")
    if variant.kind == BENCHMARK:
        for name in ("q", "r"):
            v = getattr(variant, name)
            if v is None:
                violations.append(f"benchmark variant requires {name}")
            elif not _is_prob(v):
                violations.append(f"{name} must lie in [0, 1], got {v!r}")
        if variant.q is not None and _is_prob(variant.q) and variant.q <= 0.5:
            warnings.append(f"benchmark is misleading: q={variant.q!r} <= 0.5")
        if variant.r is not None and _is_prob(variant.r) and variant.r >= 0.5:
            warnings.append(f"benchmark is misleading: r={variant.r!r} >= 0.5")
    else:
        if variant.q is not None or variant.r is not None:
            violations.append("q/r are only valid for the benchmark variant")

    return ValidationReport(tuple(violations), tuple(warnings))


def terminal_payoffs(variant: GameVariant, params: ParamSet,
                     mtype: MarketType, msg: Message,
                     act: GovAction) -> tuple[float, float]:
    """(market, government) payoff at one terminal node.

    Rejection pays the fall-back (0, 0).  An accepted bid pays the bidder R
    and the government I minus the granted budget; an accepted low bid from
    an unable bidder additionally costs the overrun C, split f / (1 - f)
    between bidder and government (f = 0 outside the accountability
    variant).  The benchmark signal never changes terminal payoffs.
    """
    if act == GovAction.REJECT:
        return (0.0, 0.0)
    market = params.R
    gov = params.I - (params.L if msg == Message.LOW else params.H)
    if msg == Message.LOW and mtype == MarketType.UNABLE:
        f = variant.overrun_market_share
        market -= f * params.C
        gov -= (1.0 - f) * params.C
    return (market, gov)


def benchmark_signal_dist(variant: GameVariant, mtype: MarketType) -> float:
    """P(signal says able | type).  Only defined for the benchmark variant."""
    if variant.kind != BENCHMARK:
        raise VariantError(f"variant {variant.kind!r} has no benchmark signal")
    return variant.q if mtype == MarketType.ABLE else variant.r


def chance_weights(variant: GameVariant, params: ParamSet):
    """Joint distribution of the chance moves the bidder cannot influence.

    Returns (type, signal, weight) triples; signal is None outside the
    benchmark variant.  Types with prior weight zero are still listed
    (weight 0.0) so strategy encodings stay four-valued at gamma in {0, 1}.
    """
    g = params.gamma
    if variant.kind != BENCHMARK:
        return (
            (MarketType.UNABLE, None, 1.0 - g),
            (MarketType.ABLE, None, g),
        )
    q, r = variant.q, variant.r
    return (
        (MarketType.UNABLE, BenchmarkSignal.SAYS_UNABLE, (1.0 - g) * (1.0 - r)),
        (MarketType.UNABLE, BenchmarkSignal.SAYS_ABLE, (1.0 - g) * r),
        (MarketType.ABLE, BenchmarkSignal.SAYS_UNABLE, g * (1.0 - q)),
        (MarketType.ABLE, BenchmarkSignal.SAYS_ABLE, g * q),
    )
