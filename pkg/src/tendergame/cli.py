"""Command-line interface: CSV tables and SVG diagrams for every analysis.

Exit codes: 0 success, 2 configuration/validation error, 1 internal error.
Standard output carries data; diagnostics and warnings go to standard error.
"""

from __future__ import annotations

import argparse
import sys
import traceback

from .config import ConfigError, RunConfig, load_config
from .equilibrium import covenant_comparison, covenant_credible, pure_nash
from .model import DegenerateParamsError
from .regions import mixture_scan, phase_sweep
from .simulation import simulate
from .strategic_form import strategic_form
from .strategies import sender_strategies
from . import svg


def _fmt(x: float) -> str:
    """Numbers carry exactly 9 decimal digits; -0.0 normalises to 0.0."""
    if x == 0.0:
        x = 0.0
    return f"{x:.9f}"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _emit(lines: list[str], out_path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _write_svg(text: str, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_table(cfg: RunConfig, args) -> list[str]:
    matrix = strategic_form(cfg.variant, cfg.params)
    lines = ["sender,receiver,market_payoff,gov_payoff"]
    for i in range(matrix.n_rows):
        for j in range(matrix.n_cols):
            m, g = matrix.entry(i, j)
            lines.append(f"{matrix.rows[i].label},{matrix.cols[j].label},"
                         f"{_fmt(m)},{_fmt(g)}")
    return lines


def cmd_equilibria(cfg: RunConfig, args) -> list[str]:
    records = pure_nash(strategic_form(cfg.variant, cfg.params))
    lines = ["id,sender,receiver,market_payoff,gov_payoff,strict,"
             "classification,overrun_prob,expected_overrun,pbe"]
    for rec in records:
        lines.append(",".join([
            str(rec.id), rec.sender_label, rec.receiver_label,
            _fmt(rec.payoffs[0]), _fmt(rec.payoffs[1]),
            _fmt_bool(rec.strict), rec.classification,
            _fmt(rec.overrun_probability), _fmt(rec.expected_overrun_total),
            _fmt_bool(rec.pbe_supportable),
        ]))
    return lines


def cmd_regions(cfg: RunConfig, args) -> list[str]:
    if cfg.scan is None or cfg.scan.mode != "mixture":
        raise ConfigError('regions needs a "scan" section with mode "mixture"')
    result = mixture_scan(cfg.scan)
    if args.svg:
        _write_svg(svg.ternary_svg(result), args.svg)
    lines = ["I,H,C,L,signature,has_overrun_eq,contract_failure"]
    for cell in result.cells:
        sig = "|".join(str(i) for i in cell.signature)
        lines.append(f"{_fmt(cell.I)},{_fmt(cell.H)},{_fmt(cell.C)},{_fmt(cell.L)},"
                     f"{sig},{_fmt_bool(cell.has_overrun_eq)},"
                     f"{_fmt_bool(cell.contract_failure)}")
    print(f"distinct signatures: {result.distinct_signatures}", file=sys.stderr)
    return lines


def cmd_phase(cfg: RunConfig, args) -> list[str]:
    if cfg.scan is None or cfg.scan.mode != "gamma":
        raise ConfigError('phase needs a "scan" section with mode "gamma"')
    points = phase_sweep(cfg.scan)
    if args.svg:
        _write_svg(svg.phase_svg(points), args.svg)
    lines = ["gamma,sender,best_responses,switch"]
    order = [s.label for s in sender_strategies()]
    for pt in points:
        for lbl in order:
            sw = pt.switches.get(lbl)
            lines.append(f"{_fmt(pt.gamma)},{lbl},"
                         f"{'|'.join(pt.best_responses[lbl])},"
                         f"{_fmt(sw) if sw is not None else ''}")
    return lines


def cmd_covenant(cfg: RunConfig, args) -> list[str]:
    try:
        result = covenant_credible(cfg.params)
    except DegenerateParamsError as exc:
        raise ConfigError(str(exc)) from None
    literal = covenant_comparison(cfg.params)
    return [
        "credible,threshold",
        f"{_fmt_bool(result.credible)},{_fmt(result.threshold)}",
        "",
        "accept_all_vs_accept_low_delta,accept_all_weakly_better",
        f"{_fmt(literal.delta)},{_fmt_bool(literal.accept_all_weakly_better)}",
    ]


def cmd_simulate(cfg: RunConfig, args) -> list[str]:
    if cfg.sim is None:
        raise ConfigError('simulate needs a "sim" section')
    res = simulate(cfg.sim)
    header = ("sender,receiver,n,seed,mean_market,mean_gov,overrun_freq,"
              "mean_overrun,se_market,se_gov,se_overrun,generator")
    row = ",".join([
        cfg.sim.profile.sender.label, cfg.sim.profile.receiver.label,
        str(res.n), str(res.seed),
        _fmt(res.mean_market), _fmt(res.mean_gov), _fmt(res.overrun_frequency),
        _fmt(res.mean_overrun), _fmt(res.se_market), _fmt(res.se_gov),
        _fmt(res.se_overrun), res.generator,
    ])
    return [header, row]


_COMMANDS = {
    "table": cmd_table,
    "equilibria": cmd_equilibria,
    "regions": cmd_regions,
    "phase": cmd_phase,
    "covenant": cmd_covenant,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tendergame",
        description="Analyse the tender signalling game: strategic forms, "
                    "equilibria, parameter scans, covenant checks and "
                    "Monte Carlo simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    svg_commands = {"regions", "phase"}
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="path to a JSON run config")
        p.add_argument("--out", default=None, help="write CSV here instead of stdout")
        p.add_argument("--format", default="csv", choices=["csv"])
        if name in svg_commands:
            p.add_argument("--svg", default=None, help="also render an SVG diagram")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        for warning in cfg.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        lines = _COMMANDS[args.command](cfg, args)
        _emit(lines, args.out)
        return 0
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"error: {problem}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
