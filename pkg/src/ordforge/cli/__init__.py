"""Command-line interface.

Every command is a thin wrapper around a library call:

* ``ordforge check FILE`` runs the proof checker.  The exit status is 0 when
  the proof checks, 1 when it does not and 2 when the file cannot be read.
* ``ordforge analyze FILE`` checks the proof and computes the bound chain
  for its Sigma conclusion.  It prints a summary, or the JSON report with
  ``--json``, and writes the report to ``--out`` if given.
* ``ordforge ord eval|cmp|in-b|h-contains`` works on ordinal notations.
* ``ordforge hier eval`` evaluates a formula over hereditarily finite sets.
"""

from __future__ import annotations

import json
import sys
import time

import click

from ..analysis import analyze_sigma
from ..calculus import check, parse_proof
from ..collapse import H, h_contains, in_B
from ..errors import OrdforgeError, ParseError
from ..hierarchy import eval_bounded, parse_hfset
from ..hierarchy.evaluate import STAGE_KIND
from ..ordinals import compare, nat
from ..ordtext import parse_ord, pretty, to_text
from ..syntax import Stage, Theory, parse_formula, relativize
from .report import Report, digest

__all__ = ["main", "cli", "Report", "build_report"]

_THEORY = click.option(
    "--theory", "-t", default="ikp", show_default=True,
    type=click.Choice(["ikp", "ikpp", "ikpe"], case_sensitive=False),
    help="ikp, ikpp for IKP(P) or ikpe for IKP(E).")
_JSON = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        _fail(str(e), 2)


def _ord(text: str):
    try:
        return parse_ord(text)
    except OrdforgeError as e:
        _fail(str(e), 2)


@click.group()
@click.version_option(package_name="artifact", prog_name="ordforge")
def cli():
    """Ordinal notations, proof checking and ordinal bounds for IKP,
    IKP(P) and IKP(E)."""


# -- check ------------------------------------------------------------------------

@cli.command("check")
@click.argument("path", type=click.Path(dir_okay=False))
@_THEORY
@_JSON
def cmd_check(path, theory, as_json):
    """Check the proof file PATH."""
    text = _read(path)
    try:
        d = parse_proof(text, theory)
    except ParseError as e:
        _fail(str(e), 2)
    report = check(d, theory)
    if as_json:
        click.echo(json.dumps({"ok": report.ok, "failures": [list(f) for f in report.failures]},
                              indent=2))
    elif report.ok:
        click.echo("ok")
    else:
        for where, reason in report.failures:
            click.echo(f"{where}: {reason}")
    sys.exit(0 if report.ok else 1)


# -- analyze --------------------------------------------------------------------------

def build_report(text: str, theory: str, source: str = "<string>") -> Report:
    """Parse, check and analyse a proof text.  Parse errors propagate."""
    th = Theory.parse(theory)
    t0 = time.perf_counter()
    d = parse_proof(text, th)
    t1 = time.perf_counter()
    result = check(d, th)
    t2 = time.perf_counter()
    bounds = error = None
    if result.ok:
        try:
            bounds = analyze_sigma(d, th).to_json()
        except OrdforgeError as e:
            error = f"{type(e).__name__}: {e}"
    else:
        error = "the proof does not check"
    t3 = time.perf_counter()
    return Report(
        input=source, digest=digest(text), theory=th.value,
        check={"ok": result.ok, "failures": [list(f) for f in result.failures]},
        bounds=bounds, error=error,
        timing={"parse_s": t1 - t0, "check_s": t2 - t1, "analyze_s": t3 - t2},
    )


@cli.command("analyze")
@click.argument("path", type=click.Path(dir_okay=False))
@_THEORY
@_JSON
@click.option("--out", "-o", type=click.Path(dir_okay=False), help="Write the JSON report here.")
def cmd_analyze(path, theory, as_json, out):
    """Compute the ordinal bounds for the proof file PATH."""
    text = _read(path)
    try:
        report = build_report(text, theory, path)
    except ParseError as e:
        _fail(str(e), 2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(report.dumps() + "\n")
    if as_json:
        click.echo(report.dumps())
    elif report.bounds is not None:
        chain = report.bounds["chain"]
        click.echo(f"theory: {Theory.parse(theory).label}")
        click.echo(f"m: {report.bounds['m']}")
        for key in ("embed", "pre_collapse", "gamma_or_sigma", "collapsed", "final"):
            click.echo(f"{key}: {chain[key]['text']}    {chain[key]['pretty']}")
    if report.error:
        click.echo(f"error: {report.error}", err=True)
        for where, reason in report.check["failures"]:
            click.echo(f"{where}: {reason}", err=True)
        sys.exit(1)


# -- ord ----------------------------------------------------------------------------------

@cli.group("ord")
def ord_group():
    """Ordinal notation utilities."""


@ord_group.command("eval")
@click.argument("expr")
@click.option("--pretty", "as_pretty", is_flag=True, help="Print with Greek letters.")
def ord_eval(expr, as_pretty):
    """Print the normal form of EXPR."""
    x = _ord(expr)
    click.echo(pretty(x) if as_pretty else to_text(x))


@ord_group.command("cmp")
@click.argument("a")
@click.argument("b")
def ord_cmp(a, b):
    """Print <, = or > comparing A with B."""
    click.echo(compare(_ord(a), _ord(b)).symbol)


@ord_group.command("in-b")
@click.argument("alpha")
@click.argument("x")
def ord_in_b(alpha, x):
    """Whether X lies in the closure stage indexed by ALPHA."""
    click.echo("true" if in_B(_ord(alpha), _ord(x)) else "false")


@ord_group.command("h-contains")
@click.argument("x")
@click.option("--eta", default="0", show_default=True, help="Index of the operator.")
@click.option("--param", "params", multiple=True, help="Extra parameter (repeatable).")
def ord_h_contains(x, eta, params):
    """Whether X belongs to the operator H_eta extended by the parameters."""
    op = H(_ord(eta), [_ord(p) for p in params])
    click.echo("true" if h_contains(op, _ord(x)) else "false")


# -- hier -------------------------------------------------------------------------------

@cli.group("hier")
def hier_group():
    """Hereditarily finite set hierarchy."""


@hier_group.command("eval")
@click.option("--formula", "-f", required=True, help="Formula in ASCII syntax.")
@click.option("--assign", "-a", "assigns", multiple=True,
              help="NAME={...} in brace syntax (repeatable).")
@click.option("--stage", "-s", "stage_n", type=int, default=None,
              help="Bound the unbounded quantifiers by this stage.")
@click.option("--stage-cap", type=int, default=None,
              help="Largest stage index allowed (default 4 or ORDFORGE_STAGE_CAP).")
@_THEORY
def hier_eval(formula, assigns, stage_n, stage_cap, theory):
    """Evaluate FORMULA over hereditarily finite sets."""
    th = Theory.parse(theory)
    try:
        f = parse_formula(formula, th)
        v = {}
        for item in assigns:
            name, sep, value = item.partition("=")
            if not sep or not name.strip():
                raise ParseError(f"expected NAME={{...}}, got {item!r}")
            v[name.strip()] = parse_hfset(value)
    except ParseError as e:
        _fail(str(e), 2)
    try:
        if stage_n is not None:
            f = relativize(f, Stage(STAGE_KIND[th], nat(stage_n)))
        value = eval_bounded(f, v, th, stage_cap)
    except OrdforgeError as e:
        _fail(f"{type(e).__name__}: {e}", 1)
    click.echo("true" if value else "false")


def main(argv=None):
    """Console entry point."""
    return cli.main(args=argv, prog_name="ordforge")
