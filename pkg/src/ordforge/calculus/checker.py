"""Proof checking kernel for the finite calculi.

Sequents are compared as sets of formulas up to renaming of bound variables
and unfolding of abbreviations.  A rule instance ``Gamma, P => D`` from
premises ``Gamma_i, M_i => D_i`` is accepted when one context ``Gamma``
fits every premise and the conclusion at once.  The principal formula may
also stay in the premises, which is how contraction is written.

The premises of ``impL`` and ``cut`` may come in either order.
:func:`canonicalize` puts them into one fixed order: the premise with the
extra antecedent formula first for ``impL``, and the premise proving the
cut formula first for ``cut``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import TheoryMismatch
from ..syntax.ast import (
    And, Comp, Fun, Imp, IVar, Mem, Not, Or, Quant, Sequent, Stage, Sub, Theory, Var,
    alpha_key, check_language, free_vars, subformulas, subst, term_free_vars,
)
from .axioms import match_axiom
from .derivation import ARITY, AXIOMS, EIGEN_RULES, RULES, Derivation, iter_nodes, path_str

__all__ = [
    "CheckReport", "check", "check_node", "canonicalize", "rule_principal", "quantifier_data",
]


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    failures: tuple = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok

    def reasons(self) -> list:
        return [r for _, r in self.failures]


# -- helpers ----------------------------------------------------------------------------

def _k(f):
    return alpha_key(f)


def _keys(fs) -> frozenset:
    return frozenset(_k(f) for f in fs)


def _context_fits(gc: frozenset, p, premises) -> bool:
    """Is there a single ``Gamma`` with ``gc = Gamma + {p}`` and
    ``g_i = Gamma + {m_i}`` for each ``(g_i, m_i)``?  ``p`` or ``m_i`` set
    to None means nothing is added on that side."""
    lower = set(gc - {p}) if p is not None else set(gc)
    upper = set(gc)
    for g, m in premises:
        lower |= (g - {m}) if m is not None else g
        upper &= g
    if not lower <= upper:
        return False
    if p is not None and p not in gc:
        return False
    return all(m is None or m in g for g, m in premises)


def _subterms(f) -> list:
    out: list = []
    seen: set = set()

    def term(t):
        if t not in seen:
            seen.add(t)
            out.append(t)
        if isinstance(t, Comp):
            term(t.bound)
            form(t.body)

    def form(g):
        for h in subformulas(g):
            if isinstance(h, (Mem, Sub)):
                term(h.left)
                term(h.right)
            elif isinstance(h, Fun):
                for t in (h.graph, h.dom, h.cod):
                    term(t)
            elif hasattr(h, "left") and not isinstance(h, (And, Or, Imp)):
                term(h.left)
                term(h.right)
            elif isinstance(h, Quant):
                for t in h.bounds:
                    term(t)
    form(f)
    return out


def _minor(P: Quant, t):
    """The minor formula of a quantifier rule with principal ``P`` and
    instance term ``t``."""
    inst = subst(P.body, P.var, t)
    if P.kind == "U":
        return inst
    op = And if P.q == "ex" else Imp
    if P.kind == "in":
        guard = Mem(t, P.bounds[0])
    elif P.kind == "sub":
        guard = Sub(t, P.bounds[0])
    else:
        guard = Fun(t, P.bounds[0], P.bounds[1])
    return op(guard, inst)


def _instance_terms(P: Quant, X, eigen: str | None) -> list:
    """Terms ``t`` with ``_minor(P, t)`` equal to ``X`` up to alpha."""
    kx = _k(X)
    cands = [Var(eigen)] if eigen is not None else _subterms(X) + [Var(P.var)]
    out = []
    for t in cands:
        try:
            if _k(_minor(P, t)) == kx:
                out.append(t)
        except (TypeError, ValueError):
            continue
    return out


# quantifier rule tag -> (side, quantifier, kind)
_QRULES = {
    "ballL": ("L", "all", "in"), "ballR": ("R", "all", "in"),
    "bexL": ("L", "ex", "in"), "bexR": ("R", "ex", "in"),
    "allL": ("L", "all", "U"), "allR": ("R", "all", "U"),
    "exL": ("L", "ex", "U"), "exR": ("R", "ex", "U"),
    "pballL": ("L", "all", "sub"), "pballR": ("R", "all", "sub"),
    "pbexL": ("L", "ex", "sub"), "pbexR": ("R", "ex", "sub"),
    "eballL": ("L", "all", "exp"), "eballR": ("R", "all", "exp"),
    "ebexL": ("L", "ex", "exp"), "ebexR": ("R", "ex", "exp"),
}

_PROP_LEFT = {"andL": And, "orL": Or, "notL": Not, "impL": Imp}
_PROP_RIGHT = {"andR": And, "orR": Or, "notR": Not, "impR": Imp}


class _Fail(Exception):
    pass


def _check_quant(tag, d: Derivation):
    side, q, kind = _QRULES[tag]
    c = d.conclusion
    (prem,) = d.premises
    pc = prem.conclusion
    gc, gp = c.gamma_keys(), pc.gamma_keys()
    eigen = d.eigen if tag in EIGEN_RULES else None
    if eigen is not None:
        fv = set()
        for f in c.formulas:
            fv |= free_vars(f)
        if eigen in fv:
            raise _Fail(f"eigenvariable violation: {eigen!r} occurs in the conclusion")
    shaped = [f for f in (c.gamma if side == "L" else c.delta)
              if isinstance(f, Quant) and f.q == q and f.kind == kind]
    if not shaped:
        raise _Fail(f"{tag}: no principal formula of the right shape")
    if side == "R":
        if len(c.delta) != 1 or len(pc.delta) != 1:
            raise _Fail(f"{tag}: conclusion and premise need one succedent formula")
        if gc != gp:
            raise _Fail(f"{tag}: premise antecedent differs from the conclusion's")
        P = c.delta[0]
        if not _instance_terms(P, pc.delta[0], eigen):
            raise _Fail(f"{tag}: premise succedent is not an instance of the principal formula")
        return P
    if c.delta_keys() != pc.delta_keys():
        raise _Fail(f"{tag}: succedents of premise and conclusion differ")
    for P in shaped:
        kp = _k(P)
        for X in pc.gamma:
            kx = _k(X)
            if _instance_terms(P, X, eigen) and _context_fits(gc, kp, [(gp, kx)]):
                return P
    raise _Fail(f"{tag}: no minor formula in the premise matches the principal formula")


def _check_prop(tag, d: Derivation):
    c = d.conclusion
    prem = [p.conclusion for p in d.premises]
    gc = c.gamma_keys()
    if tag in _PROP_RIGHT:
        if len(c.delta) != 1:
            raise _Fail(f"{tag}: conclusion needs one succedent formula")
        P = c.delta[0]
        if not isinstance(P, _PROP_RIGHT[tag]):
            raise _Fail(f"{tag}: succedent is not a {_PROP_RIGHT[tag].__name__} formula")
        if tag == "andR":
            for pc, want in zip(prem, (P.left, P.right)):
                if pc.gamma_keys() != gc or pc.delta_keys() != _keys([want]):
                    raise _Fail("andR: premises must prove the two conjuncts from the same antecedent")
            return P
        (pc,) = prem
        if tag == "orR":
            if pc.gamma_keys() != gc or pc.delta_keys() not in (_keys([P.left]), _keys([P.right])):
                raise _Fail("orR: premise must prove one of the disjuncts")
            return P
        if tag == "notR":
            if pc.gamma_keys() != gc | {_k(P.body)} or pc.delta:
                raise _Fail("notR: premise must be the antecedent plus the negated formula, "
                            "with empty succedent")
            return P
        if pc.gamma_keys() != gc | {_k(P.left)} or pc.delta_keys() != _keys([P.right]):
            raise _Fail("impR: premise must derive the consequent from the antecedent formula")
        return P
    # left rules
    kind = _PROP_LEFT[tag]
    dc = c.delta_keys()
    for P in c.gamma:
        if not isinstance(P, kind):
            continue
        kp = _k(P)
        if tag == "andL":
            (pc,) = prem
            if pc.delta_keys() == dc and any(
                    _context_fits(gc, kp, [(pc.gamma_keys(), _k(C))]) for C in (P.left, P.right)):
                return P
        elif tag == "orL":
            a, b = prem
            if (a.delta_keys() == dc and b.delta_keys() == dc and _context_fits(
                    gc, kp, [(a.gamma_keys(), _k(P.left)), (b.gamma_keys(), _k(P.right))])):
                return P
        elif tag == "notL":
            (pc,) = prem
            if (not c.delta and pc.delta_keys() == _keys([P.body])
                    and _context_fits(gc, kp, [(pc.gamma_keys(), None)])):
                return P
        else:  # impL, either premise order
            for minor, major in (prem, prem[::-1]):
                if (minor.delta_keys() == dc and major.delta_keys() == _keys([P.left])
                        and _context_fits(gc, kp, [(minor.gamma_keys(), _k(P.right)),
                                                   (major.gamma_keys(), None)])):
                    return P
    raise _Fail(f"{tag}: no principal formula with matching premises")


def _check_cut(d: Derivation) -> None:
    c = d.conclusion
    gc, dc = c.gamma_keys(), c.delta_keys()
    for prove, use in (d.premises, d.premises[::-1]):
        p, u = prove.conclusion, use.conclusion
        if len(p.delta) != 1 or p.gamma_keys() != gc:
            continue
        a = _k(p.delta[0])
        if u.delta_keys() == dc and u.gamma_keys() == gc | {a}:
            return
    raise _Fail("cut: premises are not of the form Gamma => A and Gamma, A => Delta")


def _check_bot(d: Derivation) -> None:
    c = d.conclusion
    (pc,) = [p.conclusion for p in d.premises]
    if len(c.delta) != 1 or pc.delta or pc.gamma_keys() != c.gamma_keys():
        raise _Fail("bot: premise must be Gamma => (empty) and conclusion Gamma => A")


def _language(seq: Sequent, theory: Theory) -> None:
    for f in seq.formulas:
        try:
            check_language(f, theory)
        except TheoryMismatch as exc:
            raise _Fail(f"language: {exc}") from None
        for g in subformulas(f):
            terms = []
            if isinstance(g, (Mem, Sub)) or (hasattr(g, "left") and not isinstance(g, (And, Or, Imp))):
                terms = [g.left, g.right]
            elif isinstance(g, Fun):
                terms = [g.graph, g.dom, g.cod]
            elif isinstance(g, Quant):
                terms = list(g.bounds)
            for t in terms:
                if isinstance(t, (Stage, IVar, Comp)):
                    raise _Fail("language: terms of the finite calculi are variables")


def check_node(d: Derivation, theory: Theory | str) -> str | None:
    """Check one inference (ignoring the subtrees).  Returns a reason or None."""
    theory = Theory.parse(theory)
    tag = d.rule
    try:
        if tag not in AXIOMS and tag not in RULES:
            raise _Fail(f"unknown rule {tag!r}")
        if tag in RULES and theory not in RULES[tag]:
            raise _Fail(f"rule {tag} is not available in {theory.label}")
        if len(d.conclusion.delta) > 1:
            raise _Fail("intuitionistic sequents have at most one succedent formula")
        if len(d.premises) != ARITY[tag]:
            raise _Fail(f"{tag} takes {ARITY[tag]} premise(s), got {len(d.premises)}")
        if tag in EIGEN_RULES and not d.eigen:
            raise _Fail(f"{tag} needs an eigenvariable record")
        if tag not in EIGEN_RULES and d.eigen:
            raise _Fail(f"{tag} has no eigenvariable but one was recorded")
        _language(d.conclusion, theory)
        if tag in AXIOMS:
            reason = match_axiom(tag, d.conclusion, theory)
            if reason:
                raise _Fail(reason)
        elif tag in _QRULES:
            _check_quant(tag, d)
        elif tag in _PROP_LEFT or tag in _PROP_RIGHT:
            _check_prop(tag, d)
        elif tag == "cut":
            _check_cut(d)
        elif tag == "bot":
            _check_bot(d)
    except _Fail as exc:
        return str(exc)
    return None


def check(d: Derivation, theory: Theory | str) -> CheckReport:
    """Check every node of ``d``.  Never raises on bad derivations."""
    theory = Theory.parse(theory)
    failures = []
    for path, node in iter_nodes(d):
        reason = check_node(node, theory)
        if reason:
            failures.append((path_str(path), reason))
    return CheckReport(not failures, tuple(failures))


def rule_principal(d: Derivation):
    """The principal formula of a correct node, or None for axioms, cut and bot."""
    try:
        if d.rule in _QRULES:
            return _check_quant(d.rule, d)
        if d.rule in _PROP_LEFT or d.rule in _PROP_RIGHT:
            return _check_prop(d.rule, d)
    except (_Fail, ValueError):
        return None
    return None


def quantifier_data(d: Derivation):
    """``(principal, minor, term)`` of a correct quantifier node, where the
    minor formula is the principal formula instantiated at ``term``.
    Returns None for other nodes."""
    if d.rule not in _QRULES:
        return None
    P = rule_principal(d)
    if P is None:
        return None
    side = _QRULES[d.rule][0]
    pc = d.premises[0].conclusion
    if side == "R":
        cands = [pc.delta[0]]
    else:
        gc = d.conclusion.gamma_keys()
        cands = sorted(pc.gamma, key=lambda X: _k(X) in gc)
    eigen = d.eigen if d.rule in EIGEN_RULES else None
    for X in cands:
        ts = _instance_terms(P, X, eigen)
        if ts:
            return P, X, ts[0]
    return None


def canonicalize(d: Derivation) -> Derivation:
    """Reorder the premises of every ``impL`` and ``cut`` node into the fixed order."""
    prem = tuple(canonicalize(p) for p in d.premises)
    if d.rule == "impL" and len(prem) == 2:
        a, b = prem
        # the premise that proves the antecedent of the implication goes last
        if _is_major_impl(d, a) and not _is_major_impl(d, b):
            prem = (b, a)
    elif d.rule == "cut" and len(prem) == 2:
        a, b = prem
        ga = a.conclusion.gamma_keys()
        gc = d.conclusion.gamma_keys()
        if not (ga == gc and len(a.conclusion.delta) == 1
                and b.conclusion.gamma_keys() == gc | {_k(a.conclusion.delta[0])}):
            prem = (b, a)
    return Derivation(d.conclusion, d.rule, prem, d.eigen)


def _is_major_impl(d: Derivation, p: Derivation) -> bool:
    if len(p.conclusion.delta) != 1:
        return False
    kp = _k(p.conclusion.delta[0])
    return any(isinstance(P, Imp) and _k(P.left) == kp for P in d.conclusion.gamma) and \
        p.conclusion.gamma_keys() <= d.conclusion.gamma_keys()
