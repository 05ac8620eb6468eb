"""End-to-end smoke tests for the Python surface and the CLI binary."""

import json
import os
import subprocess

import pytest

import medianlab as ml


def test_schema_constant():
    assert ml.SCHEMA == "median-lab/1"


def test_median_checks():
    good = ml.check_median(ml.hypercube(3))
    assert good["schema"] == ml.SCHEMA
    assert good["kind"] == "median_check"
    assert good["is_median"] is True
    assert good["witness"] is None

    bad = ml.check_median(ml.cycle(6))
    assert bad["is_median"] is False
    assert bad["witness"] == [0, 2, 4]
    assert bad["witness_medians"] == []


def test_frontier_quasi_line():
    report = ml.almost_median_frontier(ml.quasi_line(2, 0, 20), 1)
    entries = report["entries"]
    assert entries[0]["feasible"] is False
    assert entries[1]["feasible"] is True
    assert entries[1]["Delta"] == 1


def test_hyperplanes():
    report = ml.hyperplanes(ml.hypercube(3))
    assert report["count"] == 3
    assert report["dimension"] == 3
    assert all(row["halfspace_sizes"] == [4, 4] for row in report["classes"])


def test_group_surface():
    zk = ml.group("zk:2")
    assert zk.name == "zk:2"
    ball = zk.ball(2)
    assert ball["size"] == 13
    assert ball["sphere_sizes"] == [1, 4, 8]
    assert zk.word_length(zk.parse("(3,4)")) == 7

    e = zk.parse("(1,2)")
    assert zk.mul(e, zk.inv(e)) == zk.identity()
    assert str(zk.power(e, 3)) == "(3,6)"

    t = ml.group("T")
    assert t.order(t.parse("rot:1/2"), bound=16) == 2


def test_graph_roundtrip():
    g = ml.grid(2, 3)
    text = ml.serialize_graph(g, "json")
    back = ml.parse_graph(text)
    assert back.vertex_count == 6
    assert back.edge_count == 7
    assert back.name == g.name


def test_hom_counts():
    assert ml.count_homs("GI:I={}", "Z2")["count"] == 4
    assert ml.count_homs("GI:I={}", "Z2", naive=True)["count"] == 4
    assert ml.count_homs("GI:I=all", "Z2")["count"] == 8

    verdict = ml.separate("GI:I={}", "GI:I=all", ["Z2"])
    assert verdict["separated"] is True
    assert verdict["target"] == "Z2"
    assert verdict["count_a"] == 4 and verdict["count_b"] == 8


def test_relators():
    report = ml.check_relators("lamplighter", "lamplighter")
    assert report["pass"] is True
    assert report["checked"] == 21


def test_cocycles():
    ok = ml.cocycle_check("heisenberg", samples=300, seed=5)
    assert ok["pass"] is True and ok["bound_ok"] is True

    bad = ml.cocycle_check("corrupted", samples=300, seed=5)
    assert bad["pass"] is False
    assert len(bad["witness"]) == 3

    assert ml.euler_value("rot:1/2", "rot:1/2") == 1

    d = ml.defect("heisenberg", radius=2)
    assert d["defect"] == 4
    assert d["defect"] == d["max_abs_cocycle"]

    t = ml.translation_number("euler:T", "z^0 | rot:1/2", n=64)
    assert t["value"] == "1/2"
    assert t["phi_n"] == 32


def test_errors_are_typed():
    with pytest.raises(ml.MedianLabError):
        ml.group("nosuch")
    with pytest.raises(ml.MedianLabError):
        ml.parse_graph("n 2\n0 3\n")


CLI = os.environ.get("MEDIANLAB_CLI")


def run_cli(*args, stdin=""):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=120
    )


@pytest.mark.skipif(not CLI, reason="MEDIANLAB_CLI not set")
def test_cli_determinism():
    args = ["--seed", "7", "cocycle", "check", "--name", "euler:T", "--samples", "200"]
    first, second = run_cli(*args), run_cli(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["schema"] == ml.SCHEMA and report["pass"] is True

    one = run_cli("--workers", "1", "present", "homcount", "--target", "Z2")
    four = run_cli("--workers", "4", "present", "homcount", "--target", "Z2")
    assert one.returncode == 0
    assert one.stdout == four.stdout
    assert json.loads(one.stdout)["count"] == 4


@pytest.mark.skipif(not CLI, reason="MEDIANLAB_CLI not set")
def test_cli_exit_codes():
    c6 = ml.serialize_graph(ml.cycle(6), "edgelist")
    failed = run_cli("graph", "analyze", "--expect", "median", stdin=c6)
    assert failed.returncode == 1  # analysis ran, answer is "no"

    q3 = ml.serialize_graph(ml.hypercube(3), "edgelist")
    passed = run_cli("graph", "analyze", "--expect", "median", stdin=q3)
    assert passed.returncode == 0

    usage = run_cli("no-such-command")
    assert usage.returncode == 2

    capped = run_cli("--cap", "10", "group", "ball", "--model", "free:2", "--radius", "4")
    assert capped.returncode == 3  # resource cap
