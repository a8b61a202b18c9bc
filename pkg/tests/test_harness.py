import json
import math
from fractions import Fraction

import pytest

from oracles import window_event_probability
from randpoly.dist_compare import alpha
from randpoly.errors import ConfigError, UsageError
from randpoly.harness import (DEFAULT_SEED, build_config, read_config_file, run, run_det_square,
                              run_experiment, run_tv_distance)
from randpoly.harness.cli import certify_lines, main
from randpoly.harness.experiments import longest_run, table1_violations
from randpoly.harness.report import SummaryReport, render
from randpoly.harness.stats import linear_fit, log_abs, mean_var, significantly_greater


# --- config -----------------------------------------------------------------

def test_defaults_and_overrides():
    cfg = build_config("det_square", {"degrees": "1..3"})
    assert cfg.master_seed == DEFAULT_SEED and cfg.workers == 1
    assert cfg.params == {"degrees": (1, 2, 3), "trials": 100000}
    cfg = build_config("irreducibility_rate", {"degrees": "10", "L": "5"})
    assert cfg.params["model"] == "uniform:1:5" and cfg.params["primes"] == (2, 3, 5, 7)


@pytest.mark.parametrize("values", [
    {"degrees": "2", "bogus": "1"},
    {"degrees": "2", "trials": "0"},
    {"degrees": "2", "seed": "-1"},
    {"degrees": "2", "workers": "0"},
    {"degrees": "x"},
    {},
])
def test_bad_det_square_configs(values):
    with pytest.raises(ConfigError):
        build_config("det_square", values)


def test_other_bad_configs():
    with pytest.raises(ConfigError):
        build_config("cycle_events", {"n": "10", "k": "5"})  # k must stay below n/2
    with pytest.raises(ConfigError):
        build_config("table1_scan", {"degrees": "11"})
    with pytest.raises(ConfigError):
        build_config("irreducibility_rate", {"degrees": "5", "L": "10", "primes": "2,4"})
    with pytest.raises(ConfigError):
        build_config("tv_distance", {"n": "5", "r": "7"})
    with pytest.raises(ConfigError):
        build_config("nope", {})
    with pytest.raises(ConfigError):
        build_config("det_square", {"degrees": "2", "experiment": "disc_stats"})
    assert issubclass(ConfigError, UsageError)


def test_config_file(tmp_path):
    path = tmp_path / "c.cfg"
    path.write_text("# demo\nexperiment = det_square\ndegrees = 1, 2  # inline\ntrials=10\n")
    values = read_config_file(path)
    assert values == {"experiment": "det_square", "degrees": "1, 2", "trials": "10"}
    cfg = build_config("det_square", values)
    assert cfg.params["degrees"] == (1, 2)
    path.write_text("trials = 1\ntrials = 2\n")
    with pytest.raises(ConfigError):
        read_config_file(path)
    path.write_text("trials 1\n")
    with pytest.raises(ConfigError):
        read_config_file(path)


# --- report -----------------------------------------------------------------

def test_render_values():
    assert render(Fraction(0)) == "0/1"
    assert render(Fraction(3, 6)) == "1/2"
    assert render(None) == ""
    assert render(True) == "1"
    assert render(1 / 3) == "0.333333333333"


def test_csv_and_json_shapes():
    rep = run("det_square", degrees="1,2", trials=50)
    csv_text = rep.to_csv()
    assert "\r" not in csv_text and csv_text.endswith("\n")
    header, *rows = csv_text.strip().split("\n")
    assert header.split(",") == rep.columns and len(rows) == 2
    obj = json.loads(rep.to_json())
    assert set(obj) == {"config", "cells", "runtime_ms", "version"}
    assert obj["config"]["degrees"] == [1, 2] and "workers" not in obj["config"]
    assert obj["cells"][0]["trials"] == 50
    with pytest.raises(ValueError):
        rep.render("xml")


# --- determinism ------------------------------------------------------------

@pytest.mark.parametrize("experiment,params", [
    ("det_square", {"degrees": "1..4", "trials": 300}),
    ("irreducibility_rate", {"degrees": "6,9", "L": 20, "trials": 200}),
    ("cycle_events", {"n": 20, "k": "2,4", "trials": 150}),
])
def test_workers_do_not_change_output(experiment, params):
    one = run(experiment, seed=17, workers=1, **params).to_csv()
    four = run(experiment, seed=17, workers=4, **params).to_csv()
    assert one == four
    assert run(experiment, seed=18, workers=1, **params).to_csv() != one


def test_named_runner_checks_experiment():
    cfg = build_config("det_square", {"degrees": "1", "trials": "5"})
    assert run_det_square(cfg).cells[0]["trials"] == 5
    with pytest.raises(ConfigError):
        run_tv_distance(cfg)


# --- exact experiments ---------------------------------------------------------

def test_tv_rows():
    rep = run("tv_distance", q=2, n=12)
    assert render(rep.cells[-1]["tv"]) == "0/1" and rep.cells[-1]["r"] == 13
    rep = run("tv_distance", q=2, n=20, r="20")
    assert rep.cells[0]["tv"] == Fraction(1, 20) - alpha(2, 20, 1)
    rep = run("tv_distance", q=2, n=20, r="1..10")
    assert rep.cells[0]["argmax_r"] == 2


def test_audit_has_no_mismatches():
    rep = run("distribution_audit", q=3, degrees="1..5")
    assert all(c["mismatches"] == 0 for c in rep.cells)
    assert all(c["formula_total"] == 1 == c["exhaustive_total"] for c in rep.cells)


# --- Monte Carlo experiments --------------------------------------------------

def test_small_divisor_rates():
    rep = run("small_divisor_rate", degrees="6,12", L=210, d="0,1,3", trials=300)
    for c in rep.cells:
        if c["d"] == 0:
            assert c["witness_hits"] == 0
        if c["n"] <= 10:
            assert c["oracle_hits"] <= c["witness_hits"]
        else:
            assert c["oracle_hits"] is None


def test_more_primes_certify_more():
    one = run("irreducibility_rate", degrees="8", L=210, primes="2", trials=400)
    four = run("irreducibility_rate", degrees="8", L=210, trials=400)
    assert one.cells[0]["certified"] <= four.cells[0]["certified"]
    # x^2 + x + 1 is the only polynomial of the model uniform:1:1 at n = 2
    assert run("irreducibility_rate", degrees="2", L=1, trials=50).cells[0]["rate"] == 1.0


def test_cycle_events_small_n_matches_enumeration():
    trials = 4000
    rep = run("cycle_events", n=4, k="1", trials=trials, seed=5)
    exact = float(window_event_probability(4, 1))
    sigma = math.sqrt(exact * (1 - exact) / trials)
    assert abs(rep.cells[0]["window_frequency"] - exact) < 4 * sigma
    assert rep.cells[0]["slack_hits"] >= rep.cells[0]["window_hits"]


def test_disc_stats_parity():
    rep = run("disc_stats", degrees="4..9", trials=200)
    for c in rep.cells:
        if c["n"] % 2 == 0:
            assert c["v2_min"] == c["v2_max"] == 0
        else:
            assert c["v2_min"] >= c["n"] - 1
    assert rep.cells[0]["mean_slope"] is not None


def test_table1_helpers():
    assert longest_run([1, 2, 3, 5, 6]) == 3
    assert longest_run([]) == 0
    assert table1_violations(9, [8, 12, 16]) == 0
    assert table1_violations(9, [8, 10]) == 1
    assert table1_violations(37, [36, 38]) == 1
    rep = run("table1_scan", degrees="9", trials=300)
    assert rep.cells[0]["violations"] == 0 and rep.cells[0]["table_jump"] == 4


# --- stats ------------------------------------------------------------------

def test_stats_helpers():
    assert log_abs(-(3**200)) == pytest.approx(200 * math.log(3), rel=1e-14)
    assert mean_var([1.0, 2.0, 3.0]) == (2.0, 1.0)
    assert mean_var([]) == (None, None)
    assert linear_fit([1, 2, 3], [3, 5, 7]) == pytest.approx((2.0, 1.0))
    assert linear_fit([1, 1], [0, 1]) is None
    assert significantly_greater(0.5, 0.01, 0.4, 0.01)
    assert not significantly_greater(0.42, 0.01, 0.4, 0.015)


# --- CLI ---------------------------------------------------------------------

def test_cli_csv_and_json(capsys, tmp_path):
    assert main(["det_square", "--degrees", "1,2", "--trials", "20"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n,trials,square_count")
    path = tmp_path / "r.json"
    assert main(["tv_distance", "--n", "4", "--format", "json", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["cells"][-1]["tv"] == "0/1"


def test_cli_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("degrees = 1\ntrials = 30\nseed = 9\n")
    assert main(["det_square", "--config", str(cfg), "--trials", "40"]) == 0
    assert capsys.readouterr().out.split("\n")[1].split(",")[1] == "40"


def test_cli_exit_codes(capsys, tmp_path):
    assert main(["det_square", "--degrees", "0"]) == 2
    assert main(["cycle_events", "--n", "10", "--k", "6"]) == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("unknown_key = 1\n")
    assert main(["det_square", "--config", str(bad), "--degrees", "2"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no_such_experiment"])
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_cli_capacity_exit_code(capsys):
    # q^n beyond the exhaustive enumeration cap
    assert main(["distribution_audit", "--q", "7", "--degrees", "40"]) == 3


def test_certify(tmp_path, capsys):
    src = tmp_path / "polys.txt"
    src.write_text("1 0 1\n# comment\n\n-1 0 1\n1 1 1 1 1\n")
    assert main(["certify", str(src), "--primes", "3"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "line,degree,status,witness,primes_used"
    assert lines[1] == "1,2,Irreducible,0;2,3"
    assert lines[2].startswith("4,2,Unknown,0;1;2")
    text = certify_lines(["1 0 1"], (2, 3, 5), early_exit=False)
    assert text.strip().split("\n")[1].endswith("2;3;5")
    src.write_text("1 x\n")
    assert main(["certify", str(src)]) == 2
    assert main(["certify", str(tmp_path / "missing.txt")]) == 2
