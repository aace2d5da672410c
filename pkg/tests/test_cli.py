"""Config-file schema and the command-line surface (CSV/SVG, exit codes)."""

import csv
import io
import json
import subprocess
import sys

import pytest

from tendergame.cli import main
from tendergame.config import ConfigError, parse_config

BASE_DOC = {
    "variant": {"kind": "base"},
    "params": {"I": 10, "L": 4, "H": 6, "C": 5, "R": 1, "gamma": 0.5},
}


def write_config(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


# ------------------------------------------------------------------ config

def test_parse_config_minimal():
    cfg = parse_config(json.dumps(BASE_DOC))
    assert cfg.variant.kind == "base"
    assert cfg.params.I == 10 and cfg.params.gamma == 0.5
    assert cfg.scan is None and cfg.sim is None


def test_parse_config_rejects_unknown_keys():
    doc = dict(BASE_DOC, extra=1)
    with pytest.raises(ConfigError, match="unknown key 'extra'"):
        parse_config(json.dumps(doc))
    doc = {"variant": {"kind": "base", "zzz": 1}, "params": BASE_DOC["params"]}
    with pytest.raises(ConfigError, match="zzz"):
        parse_config(json.dumps(doc))
    doc = {"variant": BASE_DOC["variant"],
           "params": dict(BASE_DOC["params"], bogus=3)}
    with pytest.raises(ConfigError, match="bogus"):
        parse_config(json.dumps(doc))


def test_parse_config_L_lambda_exclusive():
    params = dict(BASE_DOC["params"])
    params["lambda"] = 0.5
    with pytest.raises(ConfigError, match="mutually exclusive"):
        parse_config(json.dumps({"variant": {"kind": "base"}, "params": params}))
    del params["L"]
    cfg = parse_config(json.dumps({"variant": {"kind": "base"}, "params": params}))
    assert cfg.params.L == 0.5 * 6
    assert cfg.params.lam == 0.5


def test_parse_config_variant_fields():
    with pytest.raises(ConfigError):
        parse_config(json.dumps({"variant": {"kind": "accountability"},
                                 "params": BASE_DOC["params"]}))
    with pytest.raises(ConfigError):
        parse_config(json.dumps({"variant": {"kind": "base", "f": 0.5},
                                 "params": BASE_DOC["params"]}))
    cfg = parse_config(json.dumps({"variant": {"kind": "benchmark",
                                               "q": 0.9, "r": 0.2},
                                   "params": BASE_DOC["params"]}))
    assert cfg.variant.q == 0.9


def test_parse_config_validation_violations_surface():
    doc = {"variant": {"kind": "base"},
           "params": {"I": 10, "L": 7, "H": 6, "C": 5, "R": 1, "gamma": 0.5}}
    with pytest.raises(ConfigError, match="L > H"):
        parse_config(json.dumps(doc))


def test_parse_config_strategy_labels_checked():
    doc = dict(BASE_DOC)
    doc["sim"] = {"n": 10, "seed": 1, "sender": "LL", "receiver": "aaaa"}
    with pytest.raises(ConfigError, match="receiver"):
        parse_config(json.dumps(doc))


# --------------------------------------------------------------- commands

def test_cmd_table_base(tmp_path, capsys):
    code, out, err = run_cli(capsys, ["table", "--config",
                                      write_config(tmp_path, BASE_DOC)])
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["sender", "receiver", "market_payoff", "gov_payoff"]
    assert len(rows) == 1 + 16
    hl_ar = next(r for r in rows if r[:2] == ["HL", "ar"])
    assert hl_ar[2] == "0.500000000"  # R * gamma
    assert hl_ar[3] == "3.000000000"  # (I - L) * gamma


def test_cmd_table_benchmark_row_count(tmp_path, capsys):
    doc = {"variant": {"kind": "benchmark", "q": 0.9, "r": 0.2},
           "params": BASE_DOC["params"]}
    code, out, err = run_cli(capsys, ["table", "--config",
                                      write_config(tmp_path, doc)])
    assert code == 0
    assert len(parse_csv(out)) == 1 + 64


def test_cmd_table_out_file(tmp_path, capsys):
    out_path = tmp_path / "table.csv"
    code, out, _ = run_cli(capsys, ["table", "--config",
                                    write_config(tmp_path, BASE_DOC),
                                    "--out", str(out_path)])
    assert code == 0
    assert out == ""
    assert out_path.read_text().startswith("sender,receiver,")


def test_cmd_equilibria(tmp_path, capsys):
    code, out, _ = run_cli(capsys, ["equilibria", "--config",
                                    write_config(tmp_path, BASE_DOC)])
    assert code == 0
    rows = parse_csv(out)
    header = rows[0]
    assert header == ["id", "sender", "receiver", "market_payoff", "gov_payoff",
                      "strict", "classification", "overrun_prob",
                      "expected_overrun", "pbe"]
    ids = [int(r[0]) for r in rows[1:]]
    assert ids == sorted(ids)
    ll_aa = next(r for r in rows[1:] if r[1:3] == ["LL", "aa"])
    assert ll_aa[6] == "pooling-low"
    assert ll_aa[7] == "0.500000000"
    assert ll_aa[9] == "true"

    code2, out2, _ = run_cli(capsys, ["equilibria", "--config",
                                      write_config(tmp_path, BASE_DOC)])
    assert out2 == out  # byte-identical rerun


def test_cmd_equilibria_accountability_large_f(tmp_path, capsys):
    doc = {"variant": {"kind": "accountability", "f": 0.9},
           "params": {"I": 5, "L": 3, "H": 8, "C": 5, "R": 1, "gamma": 0.4}}
    code, out, _ = run_cli(capsys, ["equilibria", "--config",
                                    write_config(tmp_path, doc)])
    assert code == 0
    rows = parse_csv(out)[1:]
    assert all(float(r[7]) == 0.0 for r in rows)
    assert any(r[1:3] == ["HL", "ar"] for r in rows)


def test_cmd_equilibria_benchmark_screening(tmp_path, capsys):
    doc = {"variant": {"kind": "benchmark", "q": 1.0, "r": 0.0},
           "params": {"I": 7, "L": 4, "H": 9, "C": 5, "R": 1, "gamma": 0.5}}
    code, out, _ = run_cli(capsys, ["equilibria", "--config",
                                    write_config(tmp_path, doc)])
    assert code == 0
    rows = parse_csv(out)[1:]
    # A perfect benchmark lets the government screen low bids: accepting
    # only signal-approved low bids is in equilibrium with zero overruns.
    screening = [r for r in rows if r[1] == "LL" and r[2].startswith("ra")]
    assert screening
    assert all(float(r[7]) == 0.0 for r in screening)


def test_cmd_regions_with_svg(tmp_path, capsys):
    doc = dict(BASE_DOC)
    doc["scan"] = {"mode": "mixture", "n": 6, "lambda": 0.5}
    svg_path = tmp_path / "regions.svg"
    code, out, err = run_cli(capsys, ["regions", "--config",
                                      write_config(tmp_path, doc),
                                      "--svg", str(svg_path)])
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["I", "H", "C", "L", "signature", "has_overrun_eq",
                       "contract_failure"]
    assert len(rows) == 1 + 36
    for row in rows[1:]:
        assert abs(float(row[0]) + float(row[1]) + float(row[2]) - 1) < 1e-6
        assert row[5] in ("true", "false") and row[6] in ("true", "false")
        assert row[4]  # non-empty signature
    text = svg_path.read_text()
    assert text.startswith("<svg") and "<polygon" in text
    assert "distinct signatures" in err


def test_cmd_regions_benchmark_variant(tmp_path, capsys):
    doc = {"variant": {"kind": "benchmark", "q": 0.9, "r": 0.2},
           "params": BASE_DOC["params"],
           "scan": {"mode": "mixture", "n": 3}}
    code, out, _ = run_cli(capsys, ["regions", "--config",
                                    write_config(tmp_path, doc)])
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 1 + 9
    for row in rows[1:]:
        assert all(0 <= int(pid) < 64 for pid in row[4].split("|"))


def test_cmd_regions_output_is_byte_stable(tmp_path, capsys):
    doc = dict(BASE_DOC)
    doc["scan"] = {"mode": "mixture", "n": 7}
    cfg = write_config(tmp_path, doc)
    _, out1, _ = run_cli(capsys, ["regions", "--config", cfg])
    _, out2, _ = run_cli(capsys, ["regions", "--config", cfg])
    assert out1 == out2


def test_cmd_regions_requires_mixture_scan(tmp_path, capsys):
    code, _, err = run_cli(capsys, ["regions", "--config",
                                    write_config(tmp_path, BASE_DOC)])
    assert code == 2
    assert "mixture" in err


def test_cmd_phase_with_svg(tmp_path, capsys):
    doc = {"variant": {"kind": "benchmark", "q": 0.9, "r": 0.2},
           "params": {"I": 10, "L": 5, "H": 9, "C": 8, "R": 1, "gamma": 0.5},
           "scan": {"mode": "gamma", "from": 0.0, "to": 1.0, "steps": 21}}
    svg_path = tmp_path / "phase.svg"
    code, out, _ = run_cli(capsys, ["phase", "--config",
                                    write_config(tmp_path, doc),
                                    "--svg", str(svg_path)])
    assert code == 0
    rows = parse_csv(out)
    assert rows[0] == ["gamma", "sender", "best_responses", "switch"]
    assert len(rows) == 1 + 21 * 4
    assert any("rarr" in r[2] for r in rows[1:] if r[1] == "LL")
    switches = [r[3] for r in rows[1:] if r[3]]
    assert switches  # the case has genuine switch points
    assert svg_path.read_text().startswith("<svg")


def test_cmd_covenant(tmp_path, capsys):
    doc = {"variant": {"kind": "base"},
           "params": {"I": 10, "L": 6, "H": 12, "C": 5, "R": 1, "gamma": 0.5}}
    code, out, _ = run_cli(capsys, ["covenant", "--config",
                                    write_config(tmp_path, doc)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "credible,threshold"
    assert lines[1] == "true,0.333333333"
    assert lines[3] == "accept_all_vs_accept_low_delta,accept_all_weakly_better"
    assert lines[4] == "-1.000000000,false"  # (I - H)(1 - gamma) = -1


def test_cmd_covenant_degenerate_exits_2(tmp_path, capsys):
    doc = {"variant": {"kind": "base"},
           "params": {"I": 10, "L": 6, "H": 6, "C": 5, "R": 1, "gamma": 0.5}}
    code, _, err = run_cli(capsys, ["covenant", "--config",
                                    write_config(tmp_path, doc)])
    assert code == 2
    assert "H == L" in err


def test_cmd_simulate(tmp_path, capsys):
    doc = dict(BASE_DOC)
    doc["sim"] = {"n": 2000, "seed": 7, "sender": "HH", "receiver": "rr"}
    code, out, _ = run_cli(capsys, ["simulate", "--config",
                                    write_config(tmp_path, doc)])
    assert code == 0
    rows = parse_csv(out)
    row = dict(zip(rows[0], rows[1]))
    assert row["sender"] == "HH" and row["receiver"] == "rr"
    assert row["mean_market"] == "0.000000000"
    assert row["mean_gov"] == "0.000000000"
    assert row["overrun_freq"] == "0.000000000"
    assert row["n"] == "2000" and row["seed"] == "7"


def test_benchmark_warning_goes_to_stderr(tmp_path, capsys):
    doc = {"variant": {"kind": "benchmark", "q": 0.4, "r": 0.2},
           "params": BASE_DOC["params"]}
    code, out, err = run_cli(capsys, ["table", "--config",
                                      write_config(tmp_path, doc)])
    assert code == 0
    assert "warning" in err and "q=0.4" in err
    assert "warning" not in out


def test_exit_code_2_on_bad_config(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, ["table", "--config", str(bad)])
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, ["table", "--config",
                                    str(tmp_path / "missing.json")])
    assert code == 2


def test_csv_round_trip_at_stated_precision(tmp_path, capsys):
    _, out, _ = run_cli(capsys, ["table", "--config",
                                 write_config(tmp_path, BASE_DOC)])
    for row in parse_csv(out)[1:]:
        for cell in row[2:]:
            assert f"{float(cell):.9f}" == cell


def test_console_module_entrypoint(tmp_path):
    cfg = write_config(tmp_path, BASE_DOC)
    proc = subprocess.run([sys.executable, "-m", "tendergame.cli",
                           "table", "--config", cfg],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("sender,receiver,")
