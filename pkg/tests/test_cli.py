"""Command-line interface: output, exit codes and the JSON report."""

import json
import os

import pytest
from click.testing import CliRunner
from hypothesis import given, settings

import strategies as S
from ordforge.analysis import analyze_sigma
from ordforge.calculus import check, load_proof
from ordforge.cli import Report, build_report, cli, main
from ordforge.collapse import h_contains, H, in_B
from ordforge.ordinals import compare
from ordforge.ordtext import parse_ord, pretty, to_text

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args))

    return invoke


# -- check ---------------------------------------------------------------------------------

@pytest.mark.parametrize("theory", ["ikp", "ikpp", "ikpe"])
def test_check_ok(run, theory):
    r = run("check", fixture(f"infinity_{theory}.proof"), "--theory", theory)
    assert r.exit_code == 0 and r.output.strip() == "ok"


def test_check_failure_exits_one(run):
    r = run("check", fixture("eigen_violation.proof"))
    assert r.exit_code == 1
    assert "eigenvariable violation" in r.output


def test_check_json(run):
    r = run("check", fixture("eigen_violation.proof"), "--json")
    data = json.loads(r.output)
    lib = check(load_proof(fixture("eigen_violation.proof"), "ikp"), "ikp")
    assert data == {"ok": False, "failures": [list(f) for f in lib.failures]}


def test_check_malformed_and_missing_exit_two(run, tmp_path):
    assert run("check", fixture("malformed.proof")).exit_code == 2
    assert run("check", str(tmp_path / "missing.proof")).exit_code == 2


# -- analyze --------------------------------------------------------------------------------

@pytest.mark.parametrize("theory", ["ikp", "ikpp", "ikpe"])
def test_analyze_matches_the_library(run, theory, tmp_path):
    path = fixture(f"infinity_{theory}.proof")
    out = tmp_path / "report.json"
    r = run("analyze", path, "--theory", theory, "--json", "--out", str(out))
    assert r.exit_code == 0, r.output
    rep = Report.loads(r.output)
    assert Report.loads(out.read_text(encoding="utf-8")) == rep
    lib = analyze_sigma(load_proof(path, theory), theory).to_json()
    assert rep.bounds == lib
    assert rep.check == {"ok": True, "failures": []}
    assert rep.digest.startswith("sha256:") and rep.theory == theory
    assert set(rep.timing) == {"parse_s", "check_s", "analyze_s"}


def test_analyze_summary(run):
    r = run("analyze", fixture("infinity_ikp.proof"))
    assert r.exit_code == 0
    assert "final: phi(psi(w^(w^(W+1))),psi(w^(w^(W+1))))" in r.output


def test_analyze_rejects_non_sigma_and_bad_proofs(run):
    r = run("analyze", fixture("pi2_reflexive.proof"))
    assert r.exit_code == 1 and "NotSigmaSentence" in r.output
    r = run("analyze", fixture("eigen_violation.proof"))
    assert r.exit_code == 1 and "does not check" in r.output
    assert run("analyze", fixture("malformed.proof")).exit_code == 2


def test_report_round_trip():
    with open(fixture("infinity_ikpp.proof"), encoding="utf-8") as fh:
        rep = build_report(fh.read(), "ikpp", "x.proof")
    assert Report.loads(rep.dumps()) == rep
    with pytest.raises(ValueError):
        Report.from_json({**rep.to_json(), "schema": 99})


# -- ord -----------------------------------------------------------------------------------

def test_ord_examples(run):
    assert run("ord", "cmp", "w", "W").output.strip() == "<"
    assert run("ord", "eval", "phi(0,W+2)").output.strip() == "w^(W+2)"
    assert run("ord", "eval", "1+w").output.strip() == "w"
    assert run("ord", "eval", "W+W", "--pretty").output.strip() == "Ω·2"
    assert run("ord", "in-b", "0", "W").output.strip() == "true"
    assert run("ord", "h-contains", "psi(w^(W+3))").output.strip() == "false"
    assert run("ord", "h-contains", "psi(w^(W+3))", "--eta", "w^(W+3)+1").output.strip() == "true"


def test_ord_parse_error_exits_two(run):
    r = run("ord", "eval", "w^(")
    assert r.exit_code == 2 and "error" in r.output


@settings(max_examples=60)
@given(S.ordinals(4), S.ordinals(4))
def test_ord_commands_match_the_library(a, b):
    runner = CliRunner()
    ta, tb = to_text(a), to_text(b)
    assert runner.invoke(cli, ["ord", "eval", ta]).output.strip() == ta
    assert runner.invoke(cli, ["ord", "eval", ta, "--pretty"]).output.strip() == pretty(a)
    assert runner.invoke(cli, ["ord", "cmp", ta, tb]).output.strip() == compare(a, b).symbol
    expected = "true" if in_B(a, b) else "false"
    assert runner.invoke(cli, ["ord", "in-b", ta, tb]).output.strip() == expected
    expected = "true" if h_contains(H(a), b) else "false"
    assert runner.invoke(cli, ["ord", "h-contains", tb, "--eta", ta]).output.strip() == expected


# -- hier ----------------------------------------------------------------------------------

def test_hier_eval(run):
    r = run("hier", "eval", "-f", "(ex x in a) x in b", "-a", "a={{},{{}}}", "-a", "b={{}}")
    assert r.exit_code == 0 and r.output.strip() == "true"
    r = run("hier", "eval", "-f", "ex x . ex y . x in y", "--stage", "1")
    assert r.output.strip() == "false"
    r = run("hier", "eval", "-f", "ex x . ex y . x in y", "--stage", "2")
    assert r.output.strip() == "true"
    r = run("hier", "eval", "-f", "(all x sub a) x in V(3)", "-a", "a={{}}", "-t", "ikpp")
    assert r.output.strip() == "true"


def test_hier_eval_errors(run):
    assert run("hier", "eval", "-f", "a in b", "-a", "a={}").exit_code == 1
    assert run("hier", "eval", "-f", "ex x . x in x").exit_code == 1
    assert run("hier", "eval", "-f", "x in L(5)", "-a", "x={}").exit_code == 1
    assert run("hier", "eval", "-f", "x in L(5)", "-a", "x={}", "--stage-cap", "5").exit_code == 0
    assert run("hier", "eval", "-f", "x in", "-a", "x={}").exit_code == 2
    assert run("hier", "eval", "-f", "x in x", "-a", "x={").exit_code == 2
    assert run("hier", "eval", "-f", "x in x", "-a", "oops").exit_code == 2


def test_version_and_main():
    r = CliRunner().invoke(cli, ["--version"])
    assert r.exit_code == 0 and "ordforge" in r.output
    with pytest.raises(SystemExit) as exc:
        main(["ord", "cmp", "W", "w"])
    assert exc.value.code == 0
