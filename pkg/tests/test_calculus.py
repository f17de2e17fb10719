"""The finite sequent calculi: axiom schemas, the checker and the proof format."""

import os

import pytest
from hypothesis import given
from hypothesis import strategies as st

import strategies as S
from ordforge.calculus import (
    Derivation, axiom_formula, axiom_instantiate, canonicalize, check, dump_proof, load_proof,
    parse_proof, print_proof,
)
from ordforge.errors import ClassViolation, ParseError, TheoryMismatch
from ordforge.syntax import And, Imp, Sequent, Theory, Var, parse_formula, print_formula
from ordforge.syntax.ast import free_vars, subst

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def seq(gamma, delta, theory="ikp"):
    return Sequent(tuple(parse_formula(x, theory) for x in gamma),
                   tuple(parse_formula(x, theory) for x in delta))


def node(gamma, delta, rule, premises=(), eigen=None, theory="ikp"):
    return Derivation(seq(gamma, delta, theory), rule, tuple(premises), eigen)


def ax(gamma, delta, theory="ikp"):
    return node(gamma, delta, "Logical", theory=theory)


G = ["a in b", "c in d"]

#: small correct derivations, one per rule family
VALID = {
    "andR": node(G, ["a in b & c in d"], "andR", [ax(G, ["a in b"]), ax(G, ["c in d"])]),
    "impR": node([], ["a in b -> a in b"], "impR", [ax(["a in b"], ["a in b"])]),
    "allR": node([], ["all x . x in a -> x in a"], "allR",
                 [node([], ["x in a -> x in a"], "impR", [ax(["x in a"], ["x in a"])])], "x"),
    "exR": node(["a in b"], ["ex x . x in b"], "exR", [ax(["a in b"], ["a in b"])]),
    "impL": node(["a in b", "a in b -> c in d"], ["c in d"], "impL", [
        ax(["a in b", "a in b -> c in d", "c in d"], ["c in d"]),
        ax(["a in b", "a in b -> c in d"], ["a in b"])]),
    "cut": node(["a in b"], ["a in b"], "cut", [
        ax(["a in b"], ["a in b"]), ax(["a in b"], ["a in b"])]),
    "ballR": node(["c in d"], ["(all x in a) x in a"], "ballR", [
        node(["c in d"], ["x in a -> x in a"], "impR", [ax(["c in d", "x in a"], ["x in a"])])],
        "x"),
    "bexR": node(["c in a", "c in b"], ["(ex x in a) x in b"], "bexR", [
        node(["c in a", "c in b"], ["c in a & c in b"], "andR", [
            ax(["c in a", "c in b"], ["c in a"]), ax(["c in a", "c in b"], ["c in b"])])]),
    "andL": node(["a in b & c in d"], ["c in d"], "andL", [
        ax(["a in b & c in d", "c in d"], ["c in d"])]),
    "orL": node(["a in b | c in b"], ["ex x . x in b"], "orL", [
        node(["a in b | c in b", "a in b"], ["ex x . x in b"], "exR",
             [ax(["a in b | c in b", "a in b"], ["a in b"])]),
        node(["a in b | c in b", "c in b"], ["ex x . x in b"], "exR",
             [ax(["a in b | c in b", "c in b"], ["c in b"])])]),
    "Pair": Derivation(axiom_instantiate("Pair", [Var("a"), Var("b")]), "Pair", ()),
}


@pytest.mark.parametrize("name", sorted(VALID))
def test_valid_derivations_check(name):
    report = check(VALID[name], "ikp")
    assert report.ok, report.failures
    assert report.failures == ()


def test_logical_axiom():
    assert check(ax(["a in b"], ["a in b"]), "ikp").ok


def test_logical_axiom_is_restricted_to_delta0():
    d = ax(["ex x . x in b"], ["ex x . x in b"])
    assert not check(d, "ikp").ok


def test_eigenvariable_violation_fixture():
    d = load_proof(os.path.join(FIXTURES, "eigen_violation.proof"), "ikp")
    report = check(d, "ikp")
    assert not report.ok
    assert any("eigenvariable violation" in reason for _, reason in report.failures)


def test_separation_needs_delta0():
    with pytest.raises(ClassViolation):
        axiom_instantiate("Separation", [Var("a"), Var("u"), parse_formula("ex x . x in u")])
    # a hand-written instance with an unbounded quantifier in the separation formula
    good = axiom_formula("Separation", [Var("a"), Var("u"), parse_formula("u in c")])
    text = print_formula(good).replace("x in c", "(ex w . x in w)")
    bad = Derivation(Sequent((), (parse_formula(text),)), "Separation", ())
    report = check(bad, "ikp")
    assert not report.ok
    assert "Delta0" in report.failures[0][1] or "not" in report.failures[0][1]


def test_schema_instances():
    assert print_formula(axiom_formula("Pair", [Var("a"), Var("b")])) == "ex z . a in z & b in z"
    assert print_formula(axiom_formula("Exponentiation", [Var("a"), Var("b")])) == \
        "ex z . (all x in exp(a,b)) x in z"
    with pytest.raises(TheoryMismatch):
        axiom_instantiate("PowerSet", [Var("a")], "ikpe")
    with pytest.raises(TheoryMismatch):
        axiom_instantiate("Exponentiation", [Var("a"), Var("b")], "ikpp")


_SCHEMA_ARGS = {
    "Pair": lambda v: [v[0], v[1]],
    "Union": lambda v: [v[0]],
    "Infinity": lambda v: [],
    "PowerSet": lambda v: [v[0]],
    "Exponentiation": lambda v: [v[0], v[1]],
}


@pytest.mark.parametrize("theory", S.THEORIES, ids=lambda t: t.value)
@given(data=st.data())
def test_every_schema_instance_checks(theory, data):
    names = data.draw(st.lists(st.sampled_from(S.NAMES), min_size=3, max_size=3))
    v = [Var(n) for n in names]
    B = data.draw(S.formulas(theory, max_leaves=5).filter(_is_delta0))
    schemas = {
        **_SCHEMA_ARGS,
        "Separation": lambda v: [v[0], Var("u"), B],
        "Collection": lambda v: [v[0], Var("u"), Var("v"), B],
        "SetInduction": lambda v: [Var("u"), B],
        "Extensionality": lambda v: [v[0], v[1], Var("u"), B],
        "Logical": lambda v: [B],
    }
    for schema, args in schemas.items():
        try:
            s = axiom_instantiate(schema, args(v), theory)
        except TheoryMismatch:
            continue
        report = check(Derivation(s, schema, ()), theory)
        assert report.ok, (schema, print_formula(s.delta[0]), report.failures)


def _is_delta0(f):
    from ordforge.syntax import is_delta0
    return is_delta0(f)


def test_at_most_one_succedent_formula():
    d = Derivation(Sequent((), (parse_formula("a in b"), parse_formula("c in d"))), "Logical", ())
    report = check(d, "ikp")
    assert not report.ok and "at most one" in report.failures[0][1]


def test_rules_are_theory_specific():
    d = node([], ["(all x sub a) x in a"], "pballR", [
        node([], ["x sub a -> x in a"], "impR", [ax(["x sub a"], ["x in a"], "ikpp")], "ikpp")],
        "x", "ikpp")
    assert any("not available" in r for _, r in check(d, "ikp").failures)


# -- mutation fuzz ---------------------------------------------------------------------------

def _paths(d, path=()):
    yield path, d
    for i, p in enumerate(d.premises):
        yield from _paths(p, path + (i,))


def _replace(d, path, new):
    if not path:
        return new
    i = path[0]
    prem = list(d.premises)
    prem[i] = _replace(prem[i], path[1:], new)
    return Derivation(d.conclusion, d.rule, tuple(prem), d.eigen)


def _drop_conjunct(f):
    if isinstance(f, And):
        return f.left
    for field in ("left", "right", "body"):
        if hasattr(f, field):
            g = _drop_conjunct(getattr(f, field))
            if g is not None:
                return type(f)(**{**f.__dict__, field: g}) if hasattr(f, "__dict__") else \
                    f._replace(**{field: g})
    return None


@given(st.sampled_from(sorted(VALID)), st.data())
def test_dropping_a_conjunct_is_detected(name, data):
    d = VALID[name]
    sites = []
    for path, n in _paths(d):
        if not path:
            continue  # the root has no parent to disagree with when it is an axiom
        fs = list(n.conclusion.gamma) + list(n.conclusion.delta)
        for i, f in enumerate(fs):
            if _drop_conjunct(f) is not None:
                sites.append((path, n, i))
    if not sites:
        return
    path, n, i = data.draw(st.sampled_from(sites))
    g, dl = list(n.conclusion.gamma), list(n.conclusion.delta)
    if i < len(g):
        g[i] = _drop_conjunct(g[i])
    else:
        dl[i - len(g)] = _drop_conjunct(dl[i - len(g)])
    mutated = _replace(d, path, Derivation(Sequent(tuple(g), tuple(dl)), n.rule, n.premises,
                                           n.eigen))
    assert not check(mutated, "ikp").ok


@pytest.mark.parametrize("name", ["allR", "ballR"])
def test_eigenvariable_renamed_into_the_conclusion_is_detected(name):
    d = VALID[name]
    free = set().union(*(free_vars(f) for f in d.conclusion.gamma + d.conclusion.delta))
    assert free
    for bad in sorted(free):
        premises = tuple(_rename_free(p, "x", bad) for p in d.premises)
        mutated = Derivation(d.conclusion, d.rule, premises, bad)
        report = check(mutated, "ikp")
        assert any("eigenvariable violation" in r for _, r in report.failures), bad


def _rename_free(d, old, new):
    s = d.conclusion
    conc = Sequent(tuple(subst(f, old, Var(new)) for f in s.gamma),
                   tuple(subst(f, old, Var(new)) for f in s.delta))
    return Derivation(conc, d.rule, tuple(_rename_free(p, old, new) for p in d.premises), d.eigen)


def test_impl_premises_in_either_order():
    d = VALID["impL"]
    swapped = Derivation(d.conclusion, d.rule, d.premises[::-1], d.eigen)
    assert check(swapped, "ikp").ok
    assert canonicalize(swapped) == canonicalize(d)


def test_impl_with_antecedent_and_consequent_exchanged_is_detected():
    d = VALID["impL"]
    g = tuple(Imp(f.right, f.left) if isinstance(f, Imp) else f for f in d.conclusion.gamma)
    mutated = Derivation(Sequent(g, d.conclusion.delta), d.rule, d.premises)
    assert not check(mutated, "ikp").ok


# -- proof file format -------------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(VALID))
def test_proof_text_round_trip(name, tmp_path):
    d = VALID[name]
    text = print_proof(d)
    assert parse_proof(text, "ikp") == d
    path = tmp_path / "p.proof"
    dump_proof(d, path)
    assert load_proof(path, "ikp") == d
    assert path.read_text(encoding="utf-8") == text


@pytest.mark.parametrize("theory", S.THEORIES, ids=lambda t: t.value)
@given(data=st.data())
def test_random_trees_round_trip(theory, data):
    d = data.draw(S.derivation_trees(theory, depth=2))
    assert parse_proof(print_proof(d), theory) == d


def test_malformed_proof_file():
    with open(os.path.join(FIXTURES, "malformed.proof"), encoding="utf-8") as fh:
        text = fh.read()
    with pytest.raises(ParseError):
        parse_proof(text, "ikp")


@pytest.mark.parametrize("text", [
    "(rule)",
    "(rule andR :conclusion (seq () ()) :premises ()",
    "(rule andR :bogus 1 :conclusion (seq () ()) :premises ())",
    '(rule Logical :conclusion (seq ("a in") ("a in b")) :premises ())',
])
def test_proof_parse_errors(text):
    with pytest.raises(ParseError):
        parse_proof(text, "ikp")


def test_theory_enum():
    assert Theory.parse("ikpp") is Theory.IKP_P
    assert Theory.parse(Theory.IKP) is Theory.IKP
