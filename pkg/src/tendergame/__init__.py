"""Tender signalling game toolkit.

Models the tender process between a bidder with private competence and a
government that screens bids: payoff construction, strategic-form
reduction, pure-strategy equilibrium analysis with belief support, policy
variants (overrun accountability, competence benchmarking), parameter-space
scans and a reproducible Monte Carlo oracle.
"""

from .model import (
    ACCOUNTABILITY,
    BASE,
    BENCHMARK,
    Beliefs,
    BenchmarkSignal,
    DegenerateParamsError,
    GameVariant,
    GovAction,
    MarketType,
    Message,
    ParamSet,
    ValidationReport,
    VariantError,
    benchmark_signal_dist,
    chance_weights,
    terminal_payoffs,
    validate,
)
from .strategies import (
    ReceiverStrategy,
    SenderStrategy,
    StrategyProfile,
    receiver_from_label,
    receiver_strategies,
    sender_from_label,
    sender_strategies,
)
from .strategic_form import (
    TIE_TOL,
    PayoffMatrix,
    expected_payoffs,
    interim_payoffs,
    onpath_equivalent,
    strategic_form,
)
from .equilibrium import (
    ACCOUNTABILITY_EQUILIBRIUM_OUTCOMES,
    BASE_EQUILIBRIUM_OUTCOMES,
    BeliefSupport,
    CovenantComparison,
    CovenantResult,
    EquilibriumRecord,
    OverrunStats,
    acceptance_probability,
    bayes_beliefs,
    covenant_comparison,
    covenant_credible,
    outcome_class,
    overrun_stats,
    pbe_supportable,
    pure_nash,
    receiver_best_responses,
    sender_best_responses,
)
from .regions import (
    ExtremaReport,
    MixtureScanResult,
    PhasePoint,
    RegionCell,
    ScanSpec,
    extrema_report,
    mixture_scan,
    phase_sweep,
    simplex_cells,
    switch_points,
)
from .simulation import GENERATOR_ID, SimConfig, SimResult, simulate

__version__ = "0.1.0"

__all__ = [
    "ACCOUNTABILITY",
    "ACCOUNTABILITY_EQUILIBRIUM_OUTCOMES",
    "BASE",
    "BASE_EQUILIBRIUM_OUTCOMES",
    "BENCHMARK",
    "Beliefs",
    "BeliefSupport",
    "BenchmarkSignal",
    "CovenantComparison",
    "CovenantResult",
    "DegenerateParamsError",
    "EquilibriumRecord",
    "ExtremaReport",
    "GENERATOR_ID",
    "GameVariant",
    "GovAction",
    "MarketType",
    "Message",
    "MixtureScanResult",
    "OverrunStats",
    "ParamSet",
    "PayoffMatrix",
    "PhasePoint",
    "ReceiverStrategy",
    "RegionCell",
    "ScanSpec",
    "SenderStrategy",
    "SimConfig",
    "SimResult",
    "StrategyProfile",
    "TIE_TOL",
    "ValidationReport",
    "VariantError",
    "acceptance_probability",
    "bayes_beliefs",
    "benchmark_signal_dist",
    "chance_weights",
    "covenant_comparison",
    "covenant_credible",
    "expected_payoffs",
    "extrema_report",
    "interim_payoffs",
    "mixture_scan",
    "onpath_equivalent",
    "outcome_class",
    "overrun_stats",
    "pbe_supportable",
    "phase_sweep",
    "pure_nash",
    "receiver_best_responses",
    "receiver_from_label",
    "receiver_strategies",
    "sender_best_responses",
    "sender_from_label",
    "sender_strategies",
    "simplex_cells",
    "simulate",
    "strategic_form",
    "switch_points",
    "terminal_payoffs",
    "validate",
]
