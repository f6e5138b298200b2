from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from anngraph.cli import main
from anngraph.specfile import parse_spec


@pytest.fixture
def runner():
    return CliRunner()


SPEC = """\
ring "Z4" zn 4
ring "Z2" zn 2
ring "P" product Z2 Z4
ring "AN" algebra base=4 gens=x:2,y:2,z:2 rel x*x = 2; rel y*y = 2; rel z*z = 0; rel x*y = 0; rel x*z = 0; rel y*z = 2
"""


@pytest.fixture
def spec_file(tmp_path):
    p = tmp_path / "rings.spec"
    p.write_text(SPEC)
    return p


def test_analyze_an_report(runner, tmp_path, spec_file):
    out = tmp_path / "an.json"
    dot = tmp_path / "an.dot"
    res = runner.invoke(main, ["analyze", str(spec_file), "AN", "--json", str(out), "--dot", str(dot)])
    assert res.exit_code == 0, res.output
    rep = json.loads(out.read_text())
    assert set(rep) == {"ring", "order", "flags", "lattice", "ag", "gamma", "verdicts", "version", "config"}
    assert rep["order"] == 32
    assert rep["ag"]["clique_number"] == 4 and rep["ag"]["chromatic"]["value"] == 4
    assert rep["gamma"]["chromatic"]["value"] == 5
    assert rep["lattice"]["n_nonzero_proper"] == 16
    assert dot.read_text().count("graph ") == 2
    # config echo re-parses to the same presentation
    assert parse_spec(rep["config"]["spec"]) == [p for p in parse_spec(SPEC) if p.name == "AN"]


def test_analyze_is_byte_deterministic(runner, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert runner.invoke(main, ["analyze", "Z2xZ4", "--json", str(path), "--dot", str(path) + ".dot"]).exit_code == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.json.dot").read_bytes() == (tmp_path / "b.json.dot").read_bytes()


def test_analyze_z4_and_field(runner, tmp_path):
    out = tmp_path / "z4.json"
    assert runner.invoke(main, ["analyze", "Z4", "--json", str(out)]).exit_code == 0
    ag = json.loads(out.read_text())["ag"]
    assert ag["vertices"] == 1 and ag["diameter"] == 0
    out = tmp_path / "f4.json"
    res = runner.invoke(main, ["analyze", "F4", "--json", str(out), "--graph", "ag"])
    assert res.exit_code == 0 and "not applicable" in res.output
    rep = json.loads(out.read_text())
    assert rep["ag"]["applicable"] is False and rep["gamma"] is None


def test_analyze_needs_ring_name_for_multi_ring_spec(runner, spec_file):
    assert runner.invoke(main, ["analyze", str(spec_file)]).exit_code == 1


def test_parse_error_exit_1(runner, tmp_path):
    bad = tmp_path / "bad.spec"
    bad.write_text('ring "P" product Z4\n')
    out = tmp_path / "x.json"
    res = runner.invoke(main, ["analyze", str(bad), "P", "--json", str(out)])
    assert res.exit_code == 1 and not out.exists()


def test_cap_exit_2(runner, tmp_path):
    out = tmp_path / "x.json"
    res = runner.invoke(main, ["analyze", "Z100", "--cap", "64", "--json", str(out)])
    assert res.exit_code == 2 and not out.exists()
    assert runner.invoke(main, ["corpus", "--max-order", "9000"]).exit_code == 2


def test_budget_exit_2(runner):
    assert runner.invoke(main, ["analyze", "Z2xZ2xZ2xZ2", "--ideal-budget", "3"]).exit_code == 2


def test_invariant_violation_exit_3(runner, monkeypatch):
    from anngraph import analysis

    def broken(ctx):
        raise analysis.InvariantViolation("forced")

    monkeypatch.setattr("anngraph.cli.audit", broken)
    assert runner.invoke(main, ["analyze", "Z4"]).exit_code == 3


def test_verify_exit_codes(runner, tmp_path, spec_file):
    res = runner.invoke(main, ["verify", "Z12", "--theorems", "thm-1.4"])
    assert res.exit_code == 0 and "pass" in res.output
    assert runner.invoke(main, ["verify", "Z8", "--theorems", "thm-1.4"]).output.count("inapplicable") >= 1
    assert runner.invoke(main, ["verify", "Z12", "--theorems", "thm-9.9"]).exit_code == 1
    # the listed ideals of AN miss one, so prop-2.1 fails and verify exits 1
    res = runner.invoke(main, ["verify", str(spec_file), "AN", "--theorems", "prop-2.1"])
    assert res.exit_code == 1 and "(y+z, x+z)" in res.output
    out = tmp_path / "v.json"
    res = runner.invoke(main, ["verify", str(spec_file), "Z4", "P", "--json", str(out)])
    rep = json.loads(out.read_text())
    assert {v["ring"] for v in rep["verdicts"]} == {"Z4", "P"}
    assert rep["summary"]["fail"] == 2  # thm-2.3 and cor-2.4 on Z2xZ4
    assert res.exit_code == 1


def test_verify_corpus(runner, tmp_path):
    out = tmp_path / "v.json"
    res = runner.invoke(main, ["verify", "--corpus", "max-order=12,families=zn", "--theorems", "prop-1.1,thm-1.9", "--json", str(out)])
    assert res.exit_code == 0, res.output
    rep = json.loads(out.read_text())
    assert rep["summary"]["fail"] == 0 and len(rep["verdicts"]) == 12
    assert runner.invoke(main, ["verify", "--corpus", "size=3"]).exit_code == 1
    assert runner.invoke(main, ["verify"]).exit_code == 1


def test_corpus_command(runner, tmp_path):
    res = runner.invoke(main, ["corpus", "--max-order", "16", "--families", "zn"])
    assert res.exit_code == 0 and "9 rings analyzed" in res.output
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert runner.invoke(main, ["corpus", "--max-order", "24", "--out", str(p)]).exit_code == 0
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["counterexamples"] == []
    res = runner.invoke(main, ["corpus", "--max-order", "16", "--scan", "diam-gap"])
    assert res.exit_code == 0 and "hits:" in res.output


def test_unknown_source(runner):
    assert runner.invoke(main, ["analyze", "no-such-ring"]).exit_code == 1
