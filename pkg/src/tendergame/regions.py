"""Parameter-space scans: mixture (simplex) diagrams and competence sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field

from .equilibrium import EquilibriumRecord, pure_nash, receiver_best_responses
from .model import BASE, GameVariant, ParamSet
from .strategic_form import strategic_form
from .strategies import sender_strategies

SWITCH_REFINE_TOL = 1e-6
DEFAULT_LAMBDA = 0.5


@dataclass(frozen=True)
class ScanSpec:
    """What to sweep.

    mode "mixture": walk the I + H + C = 1 simplex at resolution ``n`` with
    L = lam * H; R and gamma come from ``params``.  mode "gamma": sweep
    gamma over [gamma_from, gamma_to] in ``steps`` points with all money
    parameters fixed from ``params``.
    """

    variant: GameVariant
    params: ParamSet
    mode: str
    n: int = 0
    gamma_from: float = 0.0
    gamma_to: float = 1.0
    steps: int = 1
    lam: float = DEFAULT_LAMBDA

    def check(self) -> list[str]:
        problems = []
        if self.mode not in ("mixture", "gamma"):
            problems.append(f"unknown scan mode {self.mode!r}")
        if self.mode == "mixture":
            if self.n < 1:
                problems.append(f"simplex resolution n must be >= 1, got {self.n}")
            if not 0.0 <= self.lam <= 1.0:
                problems.append(f"lambda must lie in [0, 1], got {self.lam!r}")
        if self.mode == "gamma":
            if not 0.0 <= self.gamma_from <= self.gamma_to <= 1.0:
                problems.append(
                    f"need 0 <= from <= to <= 1, got [{self.gamma_from!r}, {self.gamma_to!r}]")
            if self.steps < 1:
                problems.append(f"steps must be >= 1, got {self.steps}")
        return problems


@dataclass(frozen=True)
class RegionCell:
    """One simplex cell: its centre coordinates and the equilibria found there.

    ``signature`` is the sorted tuple of equilibrium profile ids; two cells
    belong to the same region exactly when their signatures are equal.
    ``contract_failure`` is set when every equilibrium of the cell is a
    failure to contract (all bids rejected).
    """

    I: float
    H: float
    C: float
    L: float
    signature: tuple[int, ...]
    has_overrun_eq: bool
    contract_failure: bool
    equilibria: tuple[EquilibriumRecord, ...]


@dataclass(frozen=True)
class MixtureScanResult:
    spec: ScanSpec
    cells: tuple[RegionCell, ...]
    signature_counts: dict[tuple[int, ...], int]

    @property
    def distinct_signatures(self) -> int:
        return len(self.signature_counts)

    @property
    def overrun_cells(self) -> int:
        return sum(1 for c in self.cells if c.has_overrun_eq)

    @property
    def failure_only_cells(self) -> int:
        return sum(1 for c in self.cells if c.contract_failure)


def simplex_cells(n: int):
    """Centres of the n^2 triangles subdividing the I + H + C = 1 simplex.

    Every centre is strictly interior.  Order: upward triangles first, then
    downward, each block lexicographic in (i, j); n = 1 yields the single
    point (1/3, 1/3, 1/3).
    """
    d = 3.0 * n
    cells = []
    for i in range(n):
        for j in range(n - i):
            k = n - 1 - i - j
            cells.append(((3 * i + 1) / d, (3 * j + 1) / d, (3 * k + 1) / d))
    for i in range(n - 1):
        for j in range(n - 1 - i):
            k = n - 2 - i - j
            cells.append(((3 * i + 2) / d, (3 * j + 2) / d, (3 * k + 2) / d))
    return cells


def mixture_scan(spec: ScanSpec) -> MixtureScanResult:
    """Equilibrium signature at every cell of the (I, H, C) simplex.

    Each cell is evaluated independently (a pure function of its
    coordinates), so the scan parallelises trivially; output order is the
    fixed cell order of :func:`simplex_cells` regardless of schedule.
    """
    problems = spec.check()
    if problems or spec.mode != "mixture":
        raise ValueError("; ".join(problems) or "mixture_scan needs mode='mixture'")
    cells = []
    counts: dict[tuple[int, ...], int] = {}
    for ci, ch, cc in simplex_cells(spec.n):
        params = ParamSet.from_lambda(I=ci, lam=spec.lam, H=ch, C=cc,
                                      R=spec.params.R, gamma=spec.params.gamma)
        records = pure_nash(strategic_form(spec.variant, params))
        signature = tuple(rec.id for rec in records)
        failure_only = bool(records) and all(r.contract_failure for r in records)
        cell = RegionCell(
            I=ci, H=ch, C=cc, L=params.L,
            signature=signature,
            has_overrun_eq=any(r.overrun_probability > 0.0 for r in records),
            contract_failure=failure_only,
            equilibria=tuple(records),
        )
        cells.append(cell)
        counts[signature] = counts.get(signature, 0) + 1
    return MixtureScanResult(spec, tuple(cells), counts)


@dataclass(frozen=True)
class PhasePoint:
    """Receiver best responses at one competence level.

    ``switches`` holds, per sender label, the refined gamma at which the
    best-response set changed between the previous grid point and this one
    (None when it did not change).  ``benchmark_gain`` compares the best
    achievable government payoff with and without the benchmark signal.
    """

    gamma: float
    best_responses: dict[str, tuple[str, ...]]
    dominant: dict[str, str]
    gov_value: dict[str, float]
    benchmark_gain: dict[str, float] | None
    switches: dict[str, float | None] = field(default_factory=dict)


def _best_response_state(variant: GameVariant, params: ParamSet, gamma: float):
    p = params.replace_gamma(gamma)
    matrix = strategic_form(variant, p)
    best = {}
    value = {}
    for s in sender_strategies():
        labels = tuple(sorted(r.label for r in receiver_best_responses(matrix, s)))
        best[s.label] = labels
        value[s.label] = float(matrix.gov[matrix.row_index(s), :].max())
    return best, value


def _refine_switch(variant: GameVariant, params: ParamSet, sender_label: str,
                   lo: float, hi: float, lo_set: tuple[str, ...]) -> float:
    while hi - lo > SWITCH_REFINE_TOL:
        mid = 0.5 * (lo + hi)
        best, _ = _best_response_state(variant, params, mid)
        if best[sender_label] == lo_set:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def phase_sweep(spec: ScanSpec) -> list[PhasePoint]:
    """Best-response trace over a gamma grid, with switch points bisected.

    A switch point is reported on the grid point *after* the change and is
    located to within SWITCH_REFINE_TOL; grids should be fine enough that at
    most one change falls between adjacent points.
    """
    problems = spec.check()
    if problems or spec.mode != "gamma":
        raise ValueError("; ".join(problems) or "phase_sweep needs mode='gamma'")
    if spec.steps == 1:
        grid = [spec.gamma_from]
    else:
        span = spec.gamma_to - spec.gamma_from
        grid = [spec.gamma_from + span * i / (spec.steps - 1) for i in range(spec.steps)]

    base_variant = GameVariant.base() if spec.variant.kind != BASE else None
    points: list[PhasePoint] = []
    prev_best = None
    prev_gamma = None
    for gamma in grid:
        best, value = _best_response_state(spec.variant, spec.params, gamma)
        gain = None
        if base_variant is not None:
            _, base_value = _best_response_state(base_variant, spec.params, gamma)
            gain = {lbl: value[lbl] - base_value[lbl] for lbl in value}
        switches: dict[str, float | None] = {}
        for lbl, br in best.items():
            if prev_best is None or prev_best[lbl] == br:
                switches[lbl] = None
            else:
                switches[lbl] = _refine_switch(spec.variant, spec.params, lbl,
                                               prev_gamma, gamma, prev_best[lbl])
        points.append(PhasePoint(
            gamma=gamma,
            best_responses=best,
            dominant={lbl: br[0] for lbl, br in best.items()},
            gov_value=value,
            benchmark_gain=gain,
            switches=switches,
        ))
        prev_best, prev_gamma = best, gamma
    return points


def switch_points(points: list[PhasePoint]) -> dict[str, tuple[float, ...]]:
    """Refined switch gammas per sender label, in increasing order."""
    out: dict[str, list[float]] = {}
    for pt in points:
        for lbl, sw in pt.switches.items():
            if sw is not None:
                out.setdefault(lbl, []).append(sw)
    return {lbl: tuple(v) for lbl, v in out.items()}


@dataclass(frozen=True)
class ExtremaReport:
    """Equilibria at the competence extremes plus the row-collapse checks.

    At gamma = 1 only the able type exists, so sender strategies that agree
    on the able message give identical matrix rows (LL = HL, LH = HH); at
    gamma = 0 the collapse pairs are LL = LH and HL = HH.  ``max_row_gap``
    records the largest entrywise deviation seen for each claimed identity.
    """

    at_gamma0: tuple[EquilibriumRecord, ...]
    at_gamma1: tuple[EquilibriumRecord, ...]
    max_row_gap: dict[tuple[float, str, str], float]

    @property
    def collapse_ok(self) -> bool:
        return all(gap <= 1e-12 for gap in self.max_row_gap.values())


_COLLAPSE_PAIRS = {0.0: (("LL", "LH"), ("HL", "HH")),
                   1.0: (("LL", "HL"), ("LH", "HH"))}


def extrema_report(variant: GameVariant, params: ParamSet) -> ExtremaReport:
    records = {}
    gaps = {}
    for gamma in (0.0, 1.0):
        matrix = strategic_form(variant, params.replace_gamma(gamma))
        records[gamma] = tuple(pure_nash(matrix))
        for a, b in _COLLAPSE_PAIRS[gamma]:
            ia, ib = matrix.row_index(a), matrix.row_index(b)
            gap = max(
                float(abs(matrix.market[ia] - matrix.market[ib]).max()),
                float(abs(matrix.gov[ia] - matrix.gov[ib]).max()),
            )
            gaps[(gamma, a, b)] = gap
    return ExtremaReport(records[0.0], records[1.0], gaps)
