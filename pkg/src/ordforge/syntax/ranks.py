"""Levels, stage sets, ranks and norms of terms and formulas.

There is one rank function per infinitary system.

* :func:`rank_irs` is used with ``L``-stage terms.  A stage at level ``a``
  has rank ``w*a``.  Membership charges ``+6`` on the element side and
  ``+1`` on the container side.  Quantifiers look at the matrix with the
  bound variable replaced by the empty stage.
* :func:`rank_irsp` is used with ``V``-stage terms and level-annotated
  variables.  It only looks at levels.
* :func:`rank_irse` is used with ``E``-stage terms.  Terms carry no level
  there, so the caller supplies one ordinal per term slot.

All three work on the formula with its abbreviations unfolded.  A free
:class:`~ordforge.syntax.ast.Var` behaves like the empty stage (level 0,
rank 0) unless the caller supplies a level for it.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..errors import ArityMismatch, NoLevel, TheoryMismatch
from ..ordinals import (
    OMEGA, ONE, W, ZERO, Ord, add, mul_omega, nat, nat_sum, omega_pow, ord_max,
)
from .ast import (
    And, Comp, Imp, IVar, Mem, Not, Or, Quant, Sequent, Stage, Theory, Var, expand,
    subst, term_free_vars,
)

__all__ = [
    "level", "k_of", "rank_irs", "rank_irsp", "rank_irse", "rank", "norm_no",
    "norm_no_sequent", "mbound", "term_slots",
]

_TWO, _SIX = nat(2), nat(6)


def level(t, var_levels: Mapping[str, Ord] | None = None) -> Ord:
    """Level of an ``L``- or ``V``-system term."""
    if isinstance(t, Stage):
        if t.kind == "E":
            raise NoLevel("E-stage terms carry no level")
        return t.level
    if isinstance(t, IVar):
        return t.level
    if isinstance(t, Comp):
        if isinstance(t.bound, Stage) and t.bound.kind in ("L", "V"):
            return t.bound.level
        raise NoLevel("only separation terms over an L or V stage carry a level")
    if isinstance(t, Var):
        if var_levels is not None and t.name in var_levels:
            return var_levels[t.name]
        raise NoLevel(f"free variable {t.name!r} has no level")
    raise TypeError(f"not a term: {t!r}")


def k_of(x) -> frozenset:
    """Every stage subscript (and variable level annotation) occurring in a
    term, formula, sequent or iterable of those."""
    out: set = set()

    def term(t):
        if isinstance(t, Stage):
            out.add(t.level)
        elif isinstance(t, IVar):
            out.add(t.level)
        elif isinstance(t, Comp):
            term(t.bound)
            form(t.body)

    def form(f):
        if isinstance(f, Mem):
            term(f.left)
            term(f.right)
        elif hasattr(f, "graph"):
            term(f.graph)
            term(f.dom)
            term(f.cod)
        elif hasattr(f, "left") and not isinstance(f, (And, Or, Imp)):
            term(f.left)
            term(f.right)
        elif isinstance(f, Not):
            form(f.body)
        elif isinstance(f, (And, Or, Imp)):
            form(f.left)
            form(f.right)
        elif isinstance(f, Quant):
            for t in f.bounds:
                term(t)
            form(f.body)

    def any_(obj):
        if isinstance(obj, Sequent):
            for f in obj.formulas:
                form(f)
        elif isinstance(obj, (Var, Stage, IVar, Comp)):
            term(obj)
        elif isinstance(obj, (list, tuple, set, frozenset)):
            for o in obj:
                any_(o)
        else:
            form(obj)

    any_(x)
    return frozenset(out)


# -- IRS with L stages ---------------------------------------------------------------

_L0 = Stage("L", ZERO)
_V0 = Stage("V", ZERO)
_E0 = Stage("E", ZERO)


def _rk_term_l(t) -> Ord:
    if isinstance(t, Var):
        return ZERO
    if isinstance(t, Stage):
        if t.kind != "L":
            raise TheoryMismatch(f"{t.kind}-stage terms have no rank in the L system")
        return mul_omega(t.level)
    if isinstance(t, Comp):
        if not (isinstance(t.bound, Stage) and t.bound.kind == "L"):
            raise TheoryMismatch("separation terms of the L system range over an L stage")
        inner = _rk_form_l(subst(expand(t.body), t.var, _L0))
        return ord_max(add(mul_omega(t.bound.level), ONE), add(inner, _TWO))
    raise TheoryMismatch(f"term {t!r} does not belong to the L system")


def _rk_form_l(f) -> Ord:
    if isinstance(f, Mem):
        return ord_max(add(_rk_term_l(f.left), _SIX), add(_rk_term_l(f.right), ONE))
    if isinstance(f, Not):
        return add(_rk_form_l(f.body), ONE)
    if isinstance(f, (And, Or, Imp)):
        return add(ord_max(_rk_form_l(f.left), _rk_form_l(f.right)), ONE)
    if isinstance(f, Quant):
        body = _rk_form_l(subst(f.body, f.var, _L0))
        if f.kind == "in":
            return ord_max(_rk_term_l(f.bounds[0]), add(body, _TWO))
        if f.kind == "U":
            return ord_max(W, add(body, ONE))
        raise TheoryMismatch(f"{f.kind}-bounded quantifiers do not belong to the L system")
    raise TypeError(f"not a formula: {f!r}")


def rank_irs(x) -> Ord:
    """Rank in the system over ``L`` stages."""
    if isinstance(x, (Var, Stage, IVar, Comp)):
        return _rk_term_l(x)
    return _rk_form_l(expand(x))


# -- IRS with V stages --------------------------------------------------------------

def _lev_p(t, var_levels) -> Ord:
    if isinstance(t, Var):
        return var_levels.get(t.name, ZERO) if var_levels else ZERO
    try:
        return level(t)
    except NoLevel:
        raise TheoryMismatch(f"term {t!r} has no level in the V system") from None


def _rk_form_p(f, vl) -> Ord:
    if isinstance(f, Mem):
        return add(ord_max(_lev_p(f.left, vl), _lev_p(f.right, vl)), ONE)
    if isinstance(f, Not):
        return add(_rk_form_p(f.body, vl), ONE)
    if isinstance(f, (And, Or, Imp)):
        return add(ord_max(_rk_form_p(f.left, vl), _rk_form_p(f.right, vl)), ONE)
    if isinstance(f, Quant):
        body = add(_rk_form_p(subst(f.body, f.var, _V0), vl), _TWO)
        if f.kind == "in":
            return ord_max(_lev_p(f.bounds[0], vl), body)
        if f.kind == "sub":
            return ord_max(add(_lev_p(f.bounds[0], vl), ONE), body)
        if f.kind == "U":
            return ord_max(W, body)
        raise TheoryMismatch("function-space quantifiers do not belong to the V system")
    raise TypeError(f"not a formula: {f!r}")


def rank_irsp(x, var_levels: Mapping[str, Ord] | None = None) -> Ord:
    """Rank in the system over ``V`` stages.  Terms have rank equal to their level."""
    if isinstance(x, (Var, Stage, IVar, Comp)):
        return _lev_p(x, var_levels)
    return _rk_form_p(expand(x), var_levels)


# -- IRS with E stages ---------------------------------------------------------------

def term_slots(f) -> list:
    """Distinct maximal terms of the unfolded formula in first-occurrence order.

    Occurrences of variables bound inside ``f`` (and terms mentioning them)
    are not slots; they always receive the ordinal 0.
    """
    slots: list = []
    seen: set = set()

    def visit_term(t, bound):
        if term_free_vars(t) & bound:
            return
        if t not in seen:
            seen.add(t)
            slots.append(t)

    def visit(g, bound):
        if isinstance(g, Mem):
            visit_term(g.left, bound)
            visit_term(g.right, bound)
        elif isinstance(g, Not):
            visit(g.body, bound)
        elif isinstance(g, (And, Or, Imp)):
            visit(g.left, bound)
            visit(g.right, bound)
        elif isinstance(g, Quant):
            for t in g.bounds:
                visit_term(t, bound)
            visit(g.body, bound | {g.var})

    visit(expand(f), frozenset())
    return slots


def _assignment(f, beta) -> dict:
    slots = term_slots(f)
    if beta is None:
        return {t: ZERO for t in slots}
    if isinstance(beta, Mapping):
        return {t: beta.get(t, ZERO) for t in slots}
    beta = list(beta)
    if len(beta) != len(slots):
        raise ArityMismatch(f"assignment has {len(beta)} ordinals but the formula has "
                            f"{len(slots)} term slots")
    return dict(zip(slots, beta))


def _rk_form_e(f, asg: dict, bound: frozenset) -> Ord:
    def b(t):
        if term_free_vars(t) & bound:
            return ZERO
        return asg.get(t, ZERO)

    if isinstance(f, Mem):
        return ord_max(b(f.left), b(f.right))
    if isinstance(f, Not):
        return add(_rk_form_e(f.body, asg, bound), ONE)
    if isinstance(f, (And, Or, Imp)):
        return add(ord_max(_rk_form_e(f.left, asg, bound), _rk_form_e(f.right, asg, bound)), ONE)
    if isinstance(f, Quant):
        body = add(_rk_form_e(f.body, asg, bound | {f.var}), _TWO)
        if f.kind == "in":
            return ord_max(b(f.bounds[0]), body)
        if f.kind == "exp":
            return ord_max(add(b(f.bounds[0]), OMEGA), add(b(f.bounds[1]), OMEGA), body)
        if f.kind == "U":
            return ord_max(W, body)
        raise TheoryMismatch("subset-bounded quantifiers do not belong to the E system")
    raise TypeError(f"not a formula: {f!r}")


def rank_irse(f, beta: Sequence[Ord] | Mapping | None = None) -> Ord:
    """Rank under an ordinal assignment to the term slots of ``f``.

    ``beta`` may be a sequence (positional over :func:`term_slots`), a mapping
    from terms to ordinals, or ``None`` for the all-zero assignment.
    """
    return _rk_form_e(expand(f), _assignment(f, beta), frozenset())


# -- dispatch and norms ------------------------------------------------------------------

def rank(f, theory: Theory | str, beta=None, var_levels=None) -> Ord:
    theory = Theory.parse(theory)
    if theory is Theory.IKP:
        return rank_irs(f)
    if theory is Theory.IKP_P:
        return rank_irsp(f, var_levels)
    return rank_irse(f, beta)


def norm_no(f, theory: Theory | str, beta=None, var_levels=None) -> Ord:
    """``w`` raised to the rank of ``f``."""
    return omega_pow(rank(f, theory, beta, var_levels))


def norm_no_sequent(s: Sequent | Iterable, theory: Theory | str, beta=None,
                    var_levels=None) -> Ord:
    """Natural sum of the norms of all formulas of a sequent.  For the E
    system ``beta`` should map terms to ordinals so the assignment is shared
    across formulas."""
    formulas = s.formulas if isinstance(s, Sequent) else tuple(s)
    out = ZERO
    for f in formulas:
        out = nat_sum(out, norm_no(f, theory, beta, var_levels))
    return out


def mbound(t) -> Ord:
    """Upper bound on the position of an E-system term in the hierarchy."""
    if isinstance(t, Stage):
        if t.kind != "E":
            raise NoLevel(f"{t.kind}-stage terms are not E-system terms")
        return t.level
    if isinstance(t, IVar):
        return t.level
    if isinstance(t, Comp):
        best = mbound(t.bound)
        for p in term_slots(t.body):
            if t.var in term_free_vars(p):
                continue
            best = ord_max(best, mbound(p))
        return add(best, ONE)
    raise NoLevel(f"no hierarchy bound for {t!r}")
