"""Formula languages: parsing, printing, classes, relativisation, levels and ranks."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import strategies as S
from oracles import fs_eval
from ordforge.errors import ArityMismatch, NoLevel, ParseError, TheoryMismatch
from ordforge.hierarchy import eval_term, stage_set
from ordforge.ordinals import OMEGA, W, ZERO, add, finite_value, mul_omega, nat
from ordforge.ordtext import parse_ord as P
from ordforge.syntax import (
    Comp, IVar, Mem, Quant, Sequent, Stage, Theory, Var, classify, expand, free_vars, fun_expand,
    is_delta0, is_pi, is_sigma, is_strict_sigma, k_of, level, mbound, norm_no, parse_formula,
    parse_term, print_formula, print_term, rank_irs, rank_irse, rank_irsp, relativize,
    term_slots, terms_in,
)

pf = parse_formula


# -- parsing and printing ----------------------------------------------------------------------

def test_bounded_universal():
    f = pf("(all x in a)(x in b)")
    assert f == Quant("all", "in", "x", (Var("a"),), Mem(Var("x"), Var("b")))
    assert print_formula(f) == "(all x in a) x in b"


def test_subset_quantifier_needs_ikpp():
    with pytest.raises(TheoryMismatch):
        pf("(all x sub a) x in a", "ikp")
    assert pf("(all x sub a) x in a", "ikpp").kind == "sub"


def test_function_space_quantifier_needs_ikpe():
    with pytest.raises(TheoryMismatch):
        pf("(ex f in exp(a,b)) f in c", "ikpp")
    assert pf("(ex f in exp(a,b)) f in c", "ikpe").kind == "exp"


def test_stage_letters_follow_the_theory():
    pf("L(w) in L(w+1)", "ikp")
    with pytest.raises(TheoryMismatch):
        pf("V(1) in V(2)", "ikp")
    with pytest.raises(TheoryMismatch):
        pf("var(0,1) in L(2)", "ikp")


@pytest.mark.parametrize("text", ["(all x in a", "x in", "x & y", "ex . x in a", "x in a )"])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        pf(text)


def test_parse_error_reports_offset():
    with pytest.raises(ParseError, match="offset"):
        pf("x in a &")


@pytest.mark.parametrize("theory", S.THEORIES, ids=lambda t: t.value)
@given(data=st.data())
def test_round_trip(theory, data):
    f = data.draw(st.one_of(S.formulas(theory), S.irs_formulas(theory)))
    text = print_formula(f)
    assert parse_formula(text, theory) == f
    assert print_formula(parse_formula(text, theory)) == text


@pytest.mark.parametrize("text, theory", [
    ("L(w+1)", "ikp"), ("var(3,w)", "ikpp"), ("{x in V(5) | x in x}", "ikpp"),
    ("{p in E(2) | p in E(1)}", "ikpe"),
])
def test_terms_round_trip(text, theory):
    assert print_term(parse_term(text, theory)) == text


# -- abbreviations ---------------------------------------------------------------------------

def test_fun_is_delta0_and_means_function():
    a, b, x = Var("a"), Var("b"), Var("x")
    body = fun_expand(x, a, b)
    assert is_delta0(body)
    assert {"a", "b", "x"} == set(free_vars(body))
    e = frozenset()
    one = frozenset({e})
    pair = frozenset({frozenset({e}), frozenset({e, e})})  # (0,0) = {{0}}
    assert fs_eval(pf("fun(x,a,b)", "ikpe"), {"x": frozenset({pair}), "a": one, "b": one})
    assert not fs_eval(pf("fun(x,a,b)", "ikpe"), {"x": e, "a": one, "b": one})


def test_expansion_is_capture_free():
    f = pf("fun(x,y,z)", "ikpe")
    g = expand(f)
    assert free_vars(g) == {"x", "y", "z"}


# -- classes -----------------------------------------------------------------------------------

def test_classification_examples():
    c = classify(pf("(all x in a)(x in b)"))
    assert c.delta0 and c.sigma and c.pi
    c = classify(pf("ex x . x in a"))
    assert c.sigma and not c.pi and c.strict_sigma
    c = classify(pf("(all x . x in a) -> (ex y . y in a)"))
    assert c.sigma and not c.strict_sigma


@given(S.formulas(Theory.IKP_P))
def test_class_inclusions(f):
    if is_delta0(f):
        assert is_sigma(f) and is_pi(f)
    if is_strict_sigma(f):
        assert is_sigma(f)


@given(S.formulas(Theory.IKP_E))
def test_relativised_sigma_and_pi_are_delta0(f):
    if is_sigma(f) or is_pi(f):
        assert is_delta0(relativize(f, Var("zz")))


@given(S.formulas(Theory.IKP))
def test_relativize_leaves_delta0_alone(f):
    if is_delta0(f):
        assert relativize(f, Var("zz")) == f


def test_relativize_examples():
    b = Var("b")
    assert print_formula(relativize(pf("ex x . x in a"), b)) == "(ex x in b) x in a"
    assert print_formula(relativize(pf("all x . ex y . x in y"), b)) == \
        "(all x in b) (ex y in b) x in y"


def test_relativize_avoids_capture():
    f = relativize(pf("ex b . b in a"), Var("b"))
    assert free_vars(f) == {"a", "b"}


# -- levels, k and ranks -------------------------------------------------------------------------

def test_levels():
    assert level(Stage("L", ZERO)) == ZERO
    assert level(IVar(3, OMEGA)) == OMEGA
    assert level(parse_term("{x in V(5) | x in x}", "ikpp")) == nat(5)
    with pytest.raises(NoLevel):
        level(Stage("E", nat(1)))


def test_k_of():
    assert k_of(pf("L(0) in L(w)")) == {ZERO, OMEGA}
    assert k_of(Sequent((), ())) == frozenset()
    inner = pf("L(1) in {x in L(3) | x in L(2)}")
    assert k_of(inner) == {nat(1), nat(2), nat(3)}


def test_rank_examples_l_system():
    assert rank_irs(Stage("L", ZERO)) == ZERO
    assert rank_irs(pf("L(1) in L(2)")) == P("w+w+1")
    assert rank_irs(pf("ex x . x in L(0)")) == W
    assert norm_no(pf("ex x . x in L(0)"), "ikp") == W


def test_rank_examples_v_system():
    assert rank_irsp(pf("V(0) in V(1)", "ikpp")) == nat(2)
    assert rank_irsp(pf("(ex x sub V(3)) x in V(3)", "ikpp")) == nat(6)
    assert rank_irsp(pf("all x . x in x", "ikpp")) >= W


def test_rank_examples_e_system():
    assert rank_irse(pf("a in b", "ikpe"), [nat(3), nat(5)]) == nat(5)
    f = pf("(ex x in exp(a,b)) x in c", "ikpe")
    assert [print_term(t) for t in term_slots(f)] == ["a", "b", "c"]
    assert rank_irse(f, [nat(2), nat(3), nat(4)]) == OMEGA
    with pytest.raises(ArityMismatch):
        rank_irse(pf("a in b", "ikpe"), [nat(1)])


@given(S.irs_formulas(Theory.IKP_E), st.lists(S.small_ordinals(), min_size=20, max_size=20))
def test_e_rank_ignores_the_assignment_with_unbounded_quantifiers(f, betas):
    if is_delta0(f):
        return
    slots = term_slots(f)
    assert rank_irse(f, betas[:len(slots)]) == rank_irse(f)


@given(S.irs_terms(Theory.IKP))
def test_term_rank_is_in_the_level_block(t):
    r = rank_irs(t)
    low = mul_omega(level(t))
    assert low <= r < add(low, OMEGA)


def test_mbound_examples():
    assert mbound(Stage("E", OMEGA)) == OMEGA
    assert mbound(IVar(0, nat(3))) == nat(3)
    assert mbound(parse_term("{x in E(2) | x in E(1)}", "ikpe")) == nat(3)


@given(S.irs_terms(Theory.IKP_E, max_level=nat(2)))
def test_mbound_bounds_the_value(t):
    if any(isinstance(x, IVar) for x in _subterms(t)):
        return
    n = finite_value(mbound(t))
    if n is None or n > 3:
        return
    assert eval_term(t) in stage_set(n + 1)


def _subterms(t):
    yield t
    if isinstance(t, Comp):
        yield from _subterms(t.bound)
        for s in terms_in(t.body):
            yield from _subterms(s)
