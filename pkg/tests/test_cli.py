import json
import subprocess
import sys

import pytest

from multiway_qubit.cli import EXIT_CAP, EXIT_IO, EXIT_OK, EXIT_USAGE, cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_template(capsys):
    code, out, _ = run(capsys, "template", "--K", "2", "--k", "2", "--algo", "closedform")
    assert code == EXIT_OK
    assert json.loads(out) == {"K": 2, "k": 2, "c0": ["3", "0"], "c1": ["0", "-4"]}


@pytest.mark.parametrize("algo", ["bruteforce", "recurrence", "closedform"])
def test_template_algorithms_agree(capsys, oracle, algo):
    _, out, _ = run(capsys, "template", "--K", "3", "--k", "5", "--algo", algo, "--init", "03")
    c0, c1 = oracle(3, 5, (0, 3))
    assert json.loads(out)["c0"] == [str(c0.re), str(c0.im)]
    assert json.loads(out)["c1"] == [str(c1.re), str(c1.im)]


def test_wave(capsys):
    code, out, _ = run(capsys, "wave", "--t", "0")
    assert code == EXIT_OK
    assert json.loads(out) == {"t": 0.0, "c0": [1.0, 0.0], "c1": [0.0, 0.0]}


def test_converge(capsys, tmp_path):
    out_csv = tmp_path / "out.csv"
    code, out, _ = run(capsys, "converge", "--t-list", "1", "--K-list", "25,50,100",
                       "--algo", "closedform", "--out", str(out_csv))
    assert code == EXIT_OK
    lines = out_csv.read_text().splitlines()
    assert lines[0] == "K,t,k,err_l2,norm_defect,algo"
    assert len(lines) == 4
    slope_lines = [l for l in out.splitlines() if "slope=" in l]
    assert len(slope_lines) == 1
    assert -1.2 <= float(slope_lines[0].split("slope=")[1]) <= -0.8


def test_converge_lowercase_alias_and_undefined_slope(capsys, tmp_path):
    code, out, _ = run(capsys, "converge", "--t-list", "0,1", "--k-list", "2,3",
                       "--out", str(tmp_path / "x.csv"))
    assert code == EXIT_OK
    assert out.count("slope=undefined") == 2


def test_expm_check(capsys):
    code, out, _ = run(capsys, "expm-check", "--t", "1", "--n-list", "1000,2000")
    assert code == EXIT_OK
    rows = out.splitlines()
    assert rows[0] == "n,max_abs_error,ratio_to_previous"
    assert 0.4 <= float(rows[2].split(",")[2]) <= 0.6


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--K", "2", "--depth", "1")
    assert code == EXIT_OK
    assert out.count("->") == 3


def test_graph_to_file(capsys, tmp_path):
    target = tmp_path / "g.dot"
    assert run(capsys, "graph", "--depth", "2", "--renormalized", "--out", str(target))[0] == EXIT_OK
    assert target.read_text().startswith("digraph renormalized {")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["template", "--K", "2"],
        ["template", "--K", "2", "--k", "2", "--frobnicate"],
        ["converge", "--t-list", "1", "--K-list", "a,b", "--out", "x.csv"],
        ["template", "--K", "0", "--k", "1"],
        ["graph", "--init", "7"],
        ["expm-check", "--n-list", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_cap_exit(capsys):
    code, _, err = run(capsys, "template", "--K", "100", "--k", "100000", "--algo", "bruteforce")
    assert code == EXIT_CAP
    assert "closedform" in err
    assert run(capsys, "graph", "--K", "9", "--depth", "8")[0] == EXIT_CAP


def test_io_exit(capsys, tmp_path):
    code, _, err = run(capsys, "converge", "--t-list", "1", "--K-list", "2",
                       "--out", str(tmp_path / "no" / "such.csv"))
    assert code == EXIT_IO
    assert "such.csv" in err
    assert run(capsys, "template", "--config", str(tmp_path / "missing.cfg"), "--K", "2", "--k", "1")[0] == EXIT_IO


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# template settings\nK = 2\nk = 2\nalgo = recurrence\n")
    code, out, _ = run(capsys, "template", "--config", str(cfg))
    assert code == EXIT_OK
    assert json.loads(out)["c1"] == ["0", "-4"]
    code, out, _ = run(capsys, "template", "--config", str(cfg), "--K", "3")
    assert json.loads(out)["c0"] == ["8", "0"]


def test_config_file_flags(capsys, tmp_path):
    cfg = tmp_path / "graph.cfg"
    cfg.write_text("depth = 1\nrenormalized = true\nparallel_edges = false\n")
    code, out, _ = run(capsys, "graph", "--config", str(cfg))
    assert code == EXIT_OK
    assert out.startswith("digraph renormalized")
    assert out.count("->") == 2


def test_byte_stable_outputs(capsys, tmp_path):
    cases = [
        ["graph", "--K", "3", "--depth", "2", "--renormalized"],
        ["template", "--K", "7", "--k", "40"],
        ["wave", "--t", "0.7"],
        ["expm-check"],
    ]
    for argv in cases:
        assert run(capsys, *argv) == run(capsys, *argv)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "converge", "--t-list", "1,0.5", "--K-list", "4,8,16", "--out", str(a))
    run(capsys, "converge", "--t-list", "1,0.5", "--K-list", "4,8,16", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "multiway_qubit", "wave", "--t", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["c0"] == [1.0, 0.0]
