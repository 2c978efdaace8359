"""Command-line behavior: formats, exit codes, round trips, determinism."""

import json
import math

import pytest

from nbscope.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_rudin_shapiro_csv(capsys, tmp_path):
    out = tmp_path / "rs.csv"
    code, _, _ = run(capsys, "generate", "--family", "rudin-shapiro",
                     "--count", "16", "--out", str(out))
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n,re,im"
    values = [int(float(line.split(",")[1])) for line in lines[1:]]
    assert values == [1, 1, 1, -1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1, 1, -1]


def test_missing_input_exits_2_without_output(capsys, tmp_path):
    out = tmp_path / "never.json"
    code, _, err = run(capsys, "certificate",
                       "--input", str(tmp_path / "notexist.csv"),
                       "--out", str(out))
    assert code == 2
    assert not out.exists()
    assert err


def test_verdict_gap_factorial(capsys):
    code, out, _ = run(capsys, "verdict", "--family", "gap-factorial",
                       "--horizon", "100000", "--window", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["report"]["kind"] == "StrongNaturalBoundaryEvidence"
    assert payload["report"]["certificate"]["kind"] == "GapZeroFlank"


def test_verdict_periodic(capsys):
    code, out, _ = run(capsys, "verdict", "--family", "periodic",
                       "--pattern", "1,1,0", "--horizon", "2000")
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["kind"] == "EventuallyPeriodic"
    assert payload["report"]["periodicity"] == [0, 3]


def test_certificate_no_finding_exits_1(capsys):
    code, out, _ = run(capsys, "certificate", "--family", "periodic",
                       "--pattern", "1,0", "--horizon", "2000",
                       "--eps", "0", "--delta", "0.5")
    assert code == 1
    assert json.loads(out)["report"]["certificates"] == []


def test_round_trip_generate_then_ingest(capsys, tmp_path):
    path = tmp_path / "rs.csv"
    code, _, _ = run(capsys, "generate", "--family", "rudin-shapiro",
                     "--count", "2048", "--out", str(path))
    assert code == 0
    code, from_file, _ = run(capsys, "certificate", "--input", str(path),
                             "--window", "4", "--eps", "0", "--delta", "2",
                             "--horizon", "2047", "--kind", "pair")
    assert code == 0
    code, in_memory, _ = run(capsys, "certificate", "--family", "rudin-shapiro",
                             "--window", "4", "--eps", "0", "--delta", "2",
                             "--horizon", "2047", "--kind", "pair")
    assert code == 0
    assert (json.loads(from_file)["report"]
            == json.loads(in_memory)["report"])


def test_szego_subcommand(capsys):
    code, out, _ = run(capsys, "szego", "--family", "periodic",
                       "--pattern", "1,0,0", "--pmax", "3",
                       "--horizon", "1500")
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["overall"] == "eventually-periodic"
    assert rep["periodicity"] == [0, 3]


def test_periodicity_subcommand_exit_codes(capsys):
    code, out, _ = run(capsys, "periodicity", "--family", "periodic",
                       "--pattern", "1,0", "--horizon", "1000")
    assert code == 0
    assert json.loads(out)["report"]["found"] == {"preperiod": 0, "period": 2}
    code, out, _ = run(capsys, "periodicity", "--family", "rudin-shapiro",
                       "--horizon", "4000")
    assert code == 1


def test_probe_csv_output(capsys):
    code, out, _ = run(capsys, "probe", "--family", "periodic",
                       "--pattern", "1", "--full",
                       "--radii", "0.5,0.9", "--quad-points", "256",
                       "--tol", "1e-8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,integral,quad_err,trunc_err"
    assert len(lines) == 3


def test_probe_arc_json_envelope(capsys, tmp_path):
    jpath = tmp_path / "probe.json"
    code, _, _ = run(capsys, "probe", "--family", "gap-factorial",
                     "--arc", "-0.25", "0.25", "--radii", "0.9,0.99",
                     "--quad-points", "256", "--json", str(jpath),
                     "--out", str(tmp_path / "probe.csv"))
    assert code == 0
    payload = json.loads(jpath.read_text())
    assert payload["report"]["growth_fit"] is not None


def test_reflectionless_periodic_modes(capsys):
    code, out, _ = run(capsys, "reflectionless", "--pattern", "1",
                       "--arc", "0.1", str(2 * math.pi - 0.1))
    assert code == 0
    assert json.loads(out)["report"]["passed"] is True
    code, out, _ = run(capsys, "reflectionless", "--pattern", "1,0",
                       "--arc", "-0.5", "0.5")
    assert code == 1
    assert json.loads(out)["report"]["passed"] is False


def test_reflectionless_decay_mode(capsys, tmp_path):
    win = tmp_path / "win.csv"
    win.write_text("n,re,im\n-1,1,0\n0,0,0\n1,0,0\n")
    code, out, _ = run(capsys, "reflectionless", "--window-csv", str(win),
                       "--decay-side", "positive", "--decay-c", "1",
                       "--decay-d", "1", "--delta", "0.5")
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["outcome"] == "not-reflectionless" and rep["witness"] == -1


def test_montecarlo_deterministic(capsys):
    argv = ["montecarlo", "--process", "iid", "--values", "0,1",
            "--probs", "0.5,0.5", "--trials", "3", "--window", "3",
            "--horizon", "3000", "--eps", "0", "--delta", "1",
            "--seed", "5"]
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    code, out2, _ = run(capsys, *argv)
    assert out1 == out2
    rep = json.loads(out1)["report"]
    assert rep["found_count"] == 3


def test_montecarlo_constant_refuses(capsys):
    code, _, err = run(capsys, "montecarlo", "--process", "iid",
                       "--values", "1", "--probs", "1.0",
                       "--trials", "2", "--horizon", "500",
                       "--eps", "0", "--delta", "0.5")
    assert code == 2
    assert "unsatisfiable" in err


def test_rightlimits_subcommand(capsys):
    code, out, _ = run(capsys, "rightlimits", "--family", "periodic",
                       "--pattern", "1,0", "--window", "2", "--eps", "0",
                       "--horizon", "1000")
    assert code == 0
    rep = json.loads(out)["report"]
    assert len(rep["candidates"]) == 2


def test_usage_error_without_source(capsys):
    code, _, err = run(capsys, "verdict", "--horizon", "1000")
    assert code == 2
    assert "family" in err


def test_montecarlo_markov_process(capsys):
    code, out, _ = run(capsys, "montecarlo", "--process", "markov",
                       "--values", "0,1",
                       "--transition", "0.5,0.5;0.5,0.5",
                       "--trials", "2", "--window", "3",
                       "--horizon", "3000", "--eps", "0", "--delta", "0.9",
                       "--seed", "3")
    assert code == 0
    assert json.loads(out)["report"]["found_count"] == 2


def test_probe_all_radii_over_cap_exits_3(capsys):
    code, _, err = run(capsys, "probe", "--family", "periodic",
                       "--pattern", "1", "--full",
                       "--radii", "0.999999", "--quad-points", "64",
                       "--tol", "1e-300")
    assert code == 3
    assert "cap" in err


def test_probe_requires_arc_or_full(capsys):
    code, _, err = run(capsys, "probe", "--family", "periodic",
                       "--pattern", "1", "--radii", "0.5")
    assert code == 2
    assert "--arc" in err
