import csv
import io
import json
import subprocess
import sys

import pytest


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "tricount", *args],
                          capture_output=True, text=True)


@pytest.fixture(scope="module")
def k4_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "k4.el"
    r = run_cli("gen", "complete", "--n", "4", "--out", str(path))
    assert r.returncode == 0
    return str(path)


@pytest.fixture(scope="module")
def planted_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "planted.el"
    r = run_cli("gen", "planted", "--m", "300", "--t", "25", "--seed", "5",
                "--out", str(path))
    assert r.returncode == 0
    return str(path)


def test_gen_complete(k4_file):
    lines = [ln for ln in open(k4_file) if ln.strip()]
    assert len(lines) == 6


def test_gen_summary_counts(tmp_path):
    out = tmp_path / "d.el"
    r = run_cli("gen", "disj", "--n", "8", "--T", "4", "--intersecting",
                "--out", str(out))
    assert r.returncode == 0
    assert "t=4" in r.stdout
    r = run_cli("gen", "disj", "--n", "8", "--T", "4", "--out", str(out))
    assert "t=0" in r.stdout


def test_gen_blowup(tmp_path, k4_file):
    k3 = tmp_path / "k3.el"
    r = run_cli("gen", "complete", "--n", "3", "--out", str(k3))
    assert r.returncode == 0
    out = tmp_path / "b.el"
    r = run_cli("gen", "blowup", "--input", str(k3), "--T", "2", "--out", str(out))
    assert r.returncode == 0
    assert "m=12" in r.stdout and "t=8" in r.stdout
    assert len(open(out).readlines()) == 12


def test_gen_shuffle_is_a_permutation(tmp_path):
    a = tmp_path / "a.el"
    b = tmp_path / "b.el"
    c = tmp_path / "c.el"
    run_cli("gen", "complete", "--n", "6", "--out", str(a))
    run_cli("gen", "complete", "--n", "6", "--out", str(b), "--shuffle", "3")
    run_cli("gen", "complete", "--n", "6", "--out", str(c), "--shuffle", "3")
    assert sorted(open(a).readlines()) == sorted(open(b).readlines())
    assert open(a).read() != open(b).read()
    assert open(b).read() == open(c).read()


def test_gen_invalid_params(tmp_path):
    r = run_cli("gen", "planted", "--m", "3", "--t", "2",
                "--out", str(tmp_path / "x.el"))
    assert r.returncode == 2
    assert "error" in r.stderr


def test_exact(k4_file):
    r = run_cli("exact", "--input", k4_file, "--stats")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    assert d == {"n": 4, "m": 6, "t": 4, "J": 2, "K": 3}


def test_exact_missing_file():
    r = run_cli("exact", "--input", "/nonexistent/g.el")
    assert r.returncode == 1


def test_exact_parse_error(tmp_path):
    f = tmp_path / "bad.el"
    f.write_text("0 1\nnot an edge\n")
    r = run_cli("exact", "--input", str(f))
    assert r.returncode == 1
    assert "line 2" in r.stderr


def test_exact_duplicate_edge(tmp_path):
    f = tmp_path / "dup.el"
    f.write_text("0 1\n1 0\n")
    r = run_cli("exact", "--input", str(f))
    assert r.returncode == 1
    assert "duplicate" in r.stderr


def test_estimate_exact_at_p1(k4_file):
    r = run_cli("estimate", "alg2", "--input", k4_file, "--p", "1", "--l", "1")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    assert d["estimate"] == 4.0
    assert d["degenerate"] is True
    assert d["passes"] == 2


def test_estimate_triangle_free(tmp_path):
    f = tmp_path / "path.el"
    f.write_text("0 1\n1 2\n2 3\n")
    r = run_cli("estimate", "alg1", "--input", str(f), "--p", "0.5", "--seed", "7")
    assert r.returncode == 0
    assert json.loads(r.stdout)["estimate"] == 0.0


def test_estimate_field_order(planted_file):
    r = run_cli("estimate", "alg1", "--input", planted_file, "--p", "0.3")
    d = json.loads(r.stdout, object_pairs_hook=list)
    assert [k for k, _ in d] == ["algorithm", "estimate", "p", "epsilon", "T",
                                 "l", "seed", "max_stored_edges", "passes",
                                 "per_trial_estimates"]


def test_estimate_derives_p_from_promise(planted_file):
    r = run_cli("estimate", "alg2", "--input", planted_file,
                "--T", "25", "--epsilon", "0.5", "--seed", "1")
    assert r.returncode == 0
    d = json.loads(r.stdout)
    # 320 / (0.5^3.5 * 5) = 724, clamped
    assert d["p"] == 1.0
    assert d["l"] == 32
    assert d["degenerate"] is True
    assert d["estimate"] == 25.0
    assert "cap" in r.stderr


def test_estimate_needs_p_or_promise(k4_file):
    r = run_cli("estimate", "alg1", "--input", k4_file)
    assert r.returncode == 2
    assert "--T" in r.stderr


def test_estimate_order_incompatibility(k4_file):
    r = run_cli("estimate", "alg1-rand", "--input", k4_file, "--p", "0.5",
                "--order", "given")
    assert r.returncode == 2


def test_estimate_rand_defaults_to_random_order(k4_file):
    r = run_cli("estimate", "alg2-rand", "--input", k4_file, "--p", "1",
                "--l", "2")
    assert r.returncode == 0
    assert json.loads(r.stdout)["estimate"] == 4.0


def test_estimate_invalid_p(k4_file):
    r = run_cli("estimate", "alg1", "--input", k4_file, "--p", "0")
    assert r.returncode == 2
    r = run_cli("estimate", "alg1", "--input", k4_file, "--p", "1")
    assert r.returncode == 2
    r = run_cli("estimate", "alg2", "--input", k4_file, "--p", "1.2")
    assert r.returncode == 2


def test_estimate_negative_seed(k4_file):
    r = run_cli("estimate", "alg1", "--input", k4_file, "--p", "0.5",
                "--seed", "-3")
    assert r.returncode == 2


def test_repeat_invocations_byte_identical(planted_file):
    args = ("estimate", "alg2", "--input", planted_file, "--p", "0.4",
            "--l", "6", "--seed", "9")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_bench_row_contract(planted_file):
    r = run_cli("bench", "alg1", "--input", planted_file,
                "--sweep", "p=0.2,0.4", "--trials", "5", "--seed", "3")
    assert r.returncode == 0
    rows = list(csv.DictReader(io.StringIO(r.stdout)))
    assert len(rows) == 10
    header = r.stdout.splitlines()[0]
    assert header == ("algorithm,m,n,t_true,T,epsilon,p,l,seed,estimate,"
                      "relative_error,max_stored_edges,wall_time_ms")
    for row in rows:
        assert row["algorithm"] == "alg1"
        assert row["m"] == "300" and row["t_true"] == "25"
        est = float(row["estimate"])
        rel = float(row["relative_error"])
        assert rel == pytest.approx(abs(est - 25) / 25)
        assert int(row["max_stored_edges"]) <= 300
        float(row["wall_time_ms"])


def test_bench_gen_spec_and_determinism():
    args = ("bench", "alg2", "--gen", "planted:m=120,t=10,seed=2",
            "--sweep", "p=0.3,0.5", "--trials", "4", "--seed", "1", "--l", "4")
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == 0

    def mask(text):
        rows = [ln.split(",") for ln in text.strip().splitlines()]
        return [r[:-1] for r in rows]

    assert mask(a.stdout) == mask(b.stdout)


def test_bench_one_pass(planted_file):
    r = run_cli("bench", "alg1-rand", "--input", planted_file, "--p", "0.5",
                "--trials", "3")
    assert r.returncode == 0
    assert len(r.stdout.strip().splitlines()) == 4


def test_bench_oracle_budget(planted_file):
    r = run_cli("bench", "alg1", "--input", planted_file, "--p", "0.5",
                "--oracle-budget", "0.0000001")
    assert r.returncode == 2
    assert "budget" in r.stderr


def test_bench_needs_one_input(planted_file):
    r = run_cli("bench", "alg1", "--p", "0.5")
    assert r.returncode == 2
    r = run_cli("bench", "alg1", "--input", planted_file,
                "--gen", "complete:n=4", "--p", "0.5")
    assert r.returncode == 2


def test_bench_bad_sweep(planted_file):
    r = run_cli("bench", "alg1", "--input", planted_file, "--sweep", "q=1,2")
    assert r.returncode == 2


def test_unknown_subcommand_exits_2():
    r = run_cli("frobnicate")
    assert r.returncode == 2
