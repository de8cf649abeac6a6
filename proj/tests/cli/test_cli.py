import json
import os
import subprocess

import pytest

CLI = os.environ.get("GRIDWLP_CLI", "gridwlp")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def run_json(*args):
    proc = run(*args, "--format", "json")
    return proc.returncode, json.loads(proc.stdout)


def test_wlp_square_holds():
    rc, doc = run_json("wlp", "--a", "3", "--b", "3", "--d", "4")
    assert rc == 0
    assert doc["verdict"] is True
    assert doc["failing"] == []
    assert doc["prime"] == 2147483647
    assert doc["trials"] == 3


def test_wlp_square_fails_in_degree_three():
    rc, doc = run_json("wlp", "--a", "3", "--d", "3")
    assert rc == 0
    assert doc["verdict"] is False
    assert doc["failing"] == [3]


def test_wlp_nonsquare():
    rc, doc = run_json("wlp", "--a", "3", "--b", "6", "--d", "5")
    assert rc == 0
    assert doc["failing"] == [5, 6]
    by_t = {m["t"]: m for m in doc["degrees"]}
    assert by_t[6]["dimTo"] - by_t[6]["dimFrom"] == -11
    assert by_t[6]["coker"] == 1


def test_hilbert_function():
    rc, doc = run_json("hf", "--a", "3", "--b", "6", "--d", "5")
    assert rc == 0
    dims = [row["dim"] for row in doc["hilbert"]["rows"]]
    assert dims == [1, 4, 10, 20, 35, 38, 27, 8, 1, 0]


@pytest.mark.parametrize("a,b,d,t,coker", [(3, 3, 3, 3, 2), (3, 6, 5, 6, 1), (3, 3, 4, 5, 0)])
def test_coker_matches_formula(a, b, d, t, coker):
    rc, doc = run_json("coker", "--a", str(a), "--b", str(b), "--d", str(d), "--t", str(t))
    assert rc == 0
    assert doc["measured"] == coker
    assert doc["predicted"] == coker


def test_coker_mismatch_in_tiny_characteristic():
    assert run("coker", "--a", "3", "--prime", "5", "--d", "4", "--t", "5").returncode == 2


def test_bx_sequences():
    assert run_json("bx", "--a", "3", "--dmax", "6")[1]["bits"] == "110101"
    rc, doc = run_json("bx", "--a", "3", "--b", "4", "--dmax", "4")
    assert rc == 0
    assert doc["conjecturalFrom"] == 3


def test_nll_chord():
    rc, doc = run_json("nll", "--a", "3", "--d", "4", "--locus", "chord:1,2,2,1")
    assert rc == 0
    assert doc["inLocus"] is True
    assert 5 in doc["failing"]


def test_explicit_grid_and_rational_mode_agree():
    grid = "u=2,5,11;v=3,7,13"
    _, fp = run_json("wlp", "--params", grid, "--d", "3")
    _, qq = run_json("wlp", "--params", grid, "--d", "3", "--rational")
    assert [m["rank"] for m in fp["degrees"]] == [m["rank"] for m in qq["degrees"]]
    assert qq["prime"] == 0


def test_csv_and_out(tmp_path):
    out = tmp_path / "r.csv"
    assert run("wlp", "--a", "2", "--d", "2", "--format", "csv", "--out", str(out)).returncode == 0
    assert out.read_text().splitlines()[0] == "t,dimFrom,dimTo,rank,ker,coker,maximal"


def test_reruns_are_identical():
    args = ("wlp", "--a", "3", "--b", "4", "--d", "4", "--seed", "0x1234", "--format", "json")
    assert run(*args).stdout == run(*args).stdout


@pytest.mark.parametrize(
    "args",
    [
        (),
        ("wlp", "--a", "3"),
        ("frobnicate",),
        ("wlp", "--a", "3", "--d", "3", "--format", "xml"),
        ("wlp", "--params", "u=1,2", "--d", "2"),
        ("nll", "--a", "3", "--d", "4", "--locus", "cone:1"),
    ],
)
def test_usage_errors(args):
    assert run(*args).returncode == 1


def test_guards():
    assert run("verify-paper", "--prime", "101").returncode == 3
    assert run("wlp", "--a", "2", "--d", "60").returncode == 3
