"""Run-configuration files: a strict JSON schema shared by every command.

Top-level keys: "variant" (required), "params" (required), "scan" and "sim"
(optional).  Unknown keys are rejected everywhere; "L" and "lambda" are
mutually exclusive ways to fix the low bid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .model import (
    ACCOUNTABILITY,
    BASE,
    BENCHMARK,
    GameVariant,
    ParamSet,
    validate,
)
from .regions import DEFAULT_LAMBDA, ScanSpec
from .simulation import SimConfig
from .strategies import (
    StrategyProfile,
    receiver_from_label,
    sender_from_label,
)


class ConfigError(ValueError):
    """Configuration or validation failure; maps to CLI exit code 2."""

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass(frozen=True)
class RunConfig:
    variant: GameVariant
    params: ParamSet
    scan: ScanSpec | None
    sim: SimConfig | None
    warnings: tuple[str, ...]


def _require_keys(obj: dict, where: str, required: set[str], optional: set[str],
                  problems: list[str]) -> None:
    unknown = set(obj) - required - optional
    for key in sorted(unknown):
        problems.append(f"{where}: unknown key {key!r}")
    for key in sorted(required - set(obj)):
        problems.append(f"{where}: missing key {key!r}")


def _number(obj: dict, where: str, key: str, problems: list[str]):
    v = obj.get(key)
    if v is None or isinstance(v, bool) or not isinstance(v, (int, float)):
        problems.append(f"{where}: {key!r} must be a number, got {v!r}")
        return None
    return float(v)


def _parse_variant(obj, problems: list[str]) -> GameVariant | None:
    if not isinstance(obj, dict):
        problems.append('"variant" must be an object')
        return None
    kind = obj.get("kind")
    if kind == BASE:
        _require_keys(obj, "variant", {"kind"}, set(), problems)
        return GameVariant.base()
    if kind == ACCOUNTABILITY:
        _require_keys(obj, "variant", {"kind", "f"}, set(), problems)
        f = _number(obj, "variant", "f", problems)
        return GameVariant.accountability(f) if f is not None else None
    if kind == BENCHMARK:
        _require_keys(obj, "variant", {"kind", "q", "r"}, set(), problems)
        q = _number(obj, "variant", "q", problems)
        r = _number(obj, "variant", "r", problems)
        if q is None or r is None:
            return None
        return GameVariant.benchmark(q, r)
    problems.append(f'variant: "kind" must be "base", "accountability" or '
                    f'"benchmark", got {kind!r}')
    return None


def _parse_params(obj, problems: list[str]) -> ParamSet | None:
    if not isinstance(obj, dict):
        problems.append('"params" must be an object')
        return None
    if "L" in obj and "lambda" in obj:
        problems.append('params: "L" and "lambda" are mutually exclusive')
        return None
    before = len(problems)
    use_lambda = "lambda" in obj
    budget_key = "lambda" if use_lambda else "L"
    _require_keys(obj, "params", {"I", budget_key, "H", "C", "R", "gamma"},
                  set(), problems)
    values = {}
    for key in ("I", budget_key, "H", "C", "R", "gamma"):
        if key in obj:
            values[key] = _number(obj, "params", key, problems)
    if len(problems) > before or len(values) < 6 \
            or any(v is None for v in values.values()):
        return None
    if use_lambda:
        return ParamSet.from_lambda(I=values["I"], lam=values["lambda"],
                                    H=values["H"], C=values["C"],
                                    R=values["R"], gamma=values["gamma"])
    return ParamSet(I=values["I"], L=values["L"], H=values["H"], C=values["C"],
                    R=values["R"], gamma=values["gamma"])


def _parse_scan(obj, variant: GameVariant, params: ParamSet,
                problems: list[str]) -> ScanSpec | None:
    if not isinstance(obj, dict):
        problems.append('"scan" must be an object')
        return None
    before = len(problems)
    mode = obj.get("mode")
    if mode == "mixture":
        _require_keys(obj, "scan", {"mode", "n"}, {"lambda"}, problems)
        n = obj.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            problems.append(f'scan: "n" must be an integer, got {n!r}')
            return None
        lam = params.lam if params.lam is not None else DEFAULT_LAMBDA
        if "lambda" in obj:
            lam_v = _number(obj, "scan", "lambda", problems)
            if lam_v is None:
                return None
            lam = lam_v
        spec = ScanSpec(variant=variant, params=params, mode="mixture", n=n, lam=lam)
    elif mode == "gamma":
        _require_keys(obj, "scan", {"mode", "from", "to", "steps"}, set(), problems)
        g0 = _number(obj, "scan", "from", problems)
        g1 = _number(obj, "scan", "to", problems)
        steps = obj.get("steps")
        if not isinstance(steps, int) or isinstance(steps, bool):
            problems.append(f'scan: "steps" must be an integer, got {steps!r}')
            return None
        if g0 is None or g1 is None:
            return None
        spec = ScanSpec(variant=variant, params=params, mode="gamma",
                        gamma_from=g0, gamma_to=g1, steps=steps)
    else:
        problems.append(f'scan: "mode" must be "mixture" or "gamma", got {mode!r}')
        return None
    problems.extend(f"scan: {p}" for p in spec.check())
    return spec if len(problems) == before else None


def _parse_sim(obj, variant: GameVariant, params: ParamSet,
               problems: list[str]) -> SimConfig | None:
    if not isinstance(obj, dict):
        problems.append('"sim" must be an object')
        return None
    before = len(problems)
    _require_keys(obj, "sim", {"n", "seed", "sender", "receiver"}, set(), problems)
    n, seed = obj.get("n"), obj.get("seed")
    if not isinstance(n, int) or isinstance(n, bool):
        problems.append(f'sim: "n" must be an integer, got {n!r}')
    if not isinstance(seed, int) or isinstance(seed, bool):
        problems.append(f'sim: "seed" must be an integer, got {seed!r}')
    profile = None
    try:
        sender = sender_from_label(str(obj.get("sender")))
        receiver = receiver_from_label(str(obj.get("receiver")), variant)
        profile = StrategyProfile(sender, receiver)
    except ValueError as exc:
        problems.append(f"sim: {exc}")
    if len(problems) > before or profile is None:
        return None
    sim = SimConfig(profile=profile, variant=variant, params=params, n=n, seed=seed)
    problems.extend(f"sim: {p}" for p in sim.check())
    return sim if len(problems) == before else None


def parse_config(text: str) -> RunConfig:
    """Parse and fully validate a config document; raises ConfigError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a JSON object")

    problems: list[str] = []
    _require_keys(doc, "config", {"variant", "params"}, {"scan", "sim"}, problems)
    variant = _parse_variant(doc.get("variant", {}), problems) \
        if "variant" in doc else None
    params = _parse_params(doc.get("params", {}), problems) \
        if "params" in doc else None
    if problems or variant is None or params is None:
        raise ConfigError(problems or ["invalid configuration"])

    report = validate(params, variant)
    if not report.ok:
        raise ConfigError(list(report.violations))

    scan = sim = None
    if "scan" in doc:
        scan = _parse_scan(doc["scan"], variant, params, problems)
    if "sim" in doc:
        sim = _parse_sim(doc["sim"], variant, params, problems)
    if problems:
        raise ConfigError(problems)
    return RunConfig(variant=variant, params=params, scan=scan, sim=sim,
                     warnings=report.warnings)


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from None
    return parse_config(text)
