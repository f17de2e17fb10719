"""Embedding bounds: a length bound and a cut rank for every node of a
checked finite derivation.

The free variables of the finite proof are read as terms of the infinitary
system.  In IKP they stand for the empty stage.  In IKP(P) a variable has
the level given in ``var_levels`` (default 0).  In IKP(E) a variable is a
free variable term of hierarchy index ``beta[name]`` (default 0), so it
lies in the stage one above.

Axioms take their bound from :data:`AXIOM_BOUNDS`.  That table lists, per
theory and schema, the length and cut rank of the infinitary derivation of
the axiom.  A length marked ``"norm"`` means the norm of the sequent, plus
``w^rk(A)`` for IKP set induction with ``A`` the induction step.

Inferences are charged as follows.

* Propositional rules: one more than the largest premise length, with the
  largest premise cut rank.
* Cut: likewise, with the cut rank raised above the rank of the cut formula.
* Bounded quantifier rules with an explicit witness (left universal, right
  existential): the premise is cut against an auxiliary derivation of
  ``principal => minor`` (left rules) or ``minor => principal`` (right rules)
  whose length is the norm of that sequent.  The cut formula is the minor
  formula.  In IKP(E) the auxiliary derivation has cut rank ``W``.
* Unbounded quantifier rules with an explicit witness: the infinitary rule
  directly, at the premise length plus 2 (plus 4 in IKP(E), where the witness
  also needs a hierarchy premise).
* Rules with an eigenvariable become infinitary rules with one premise per
  term.  The premise length is first lifted to at least ``W`` (and by 2 for
  the membership cut and implication step that turn the finite premise into
  the infinitary one).  The bound becomes the least ``w^(W+k)`` above it.
  Only the part of a bound at or above ``W`` depends on nothing but the
  formula shapes, so this bound is uniform in the instantiating term.
  In IKP the bounded rules also charge the cut on the membership formula of
  the eigenvariable; in IKP(E) they charge cut rank ``W``.

``m`` is the least ``m >= 1`` with root length at most ``w^(W+m)``, root
cut rank at most ``W+m`` and root norm at most ``w^(W+m)``.  It is an upper
bound, not necessarily the least one a hand analysis would find.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..calculus.axioms import axiom_arguments
from ..calculus.checker import check, quantifier_data
from ..calculus.derivation import Derivation, iter_nodes, path_str
from ..collapse import ControlledOperator, H
from ..errors import NoLevel, OrdinalRangeError, UncheckedDerivation
from ..ordinals import (
    OMEGA, ONE, W, ZERO, Ord, _cmp, add, nat, nat_sum, omega_big_pow, omega_pow, ord_max,
)
from ..syntax.ast import Fun, Mem, Sequent, Sub, Theory, Var, alpha_key, free_vars
from ..syntax.ranks import norm_no_sequent, rank
from .validate import Premise, RuleInstance

__all__ = ["NodeAnnotation", "AXIOM_BOUNDS", "Embedding", "embed_bounds", "least_big_power",
           "choose_m"]

_PROP = {"andL", "andR", "orL", "orR", "notL", "notR", "bot", "impL", "impR"}
_WITNESS = {"ballL", "bexR", "pballL", "pbexR", "eballL", "ebexR"}
_UNBOUNDED_WITNESS = {"allL", "exR"}
_FAMILY = {"ballR", "bexL", "pballR", "pbexL", "eballR", "ebexL", "allR", "exL"}

#: (length, cut rank) of each axiom, as a short description; the
#: computation is in :func:`_axiom_bound`
AXIOM_BOUNDS = {
    Theory.IKP: {
        "Logical": ("norm", "0"), "Extensionality": ("norm", "0"), "Infinity": ("norm", "0"),
        "Separation": ("norm", "0"), "Pair": ("norm", "0"), "Union": ("norm", "0"),
        "Collection": ("norm", "0"), "SetInduction": ("norm # w^rk(A)", "0"),
    },
    Theory.IKP_P: {
        "Logical": ("norm", "0"), "Extensionality": ("norm", "0"),
        "Collection": ("norm", "0"), "SetInduction": ("norm", "0"),
        "Infinity": ("w+2", "0"),
        "Separation": ("|r|+7", "max(|r|,|s|...)+w"),
        "Pair": ("max(|s|,|t|)+1+2", "0"),
        "Union": ("|s|+5", "0"),
        "PowerSet": ("|s|+3", "0"),
    },
    Theory.IKP_E: {
        "Logical": ("norm", "W"), "Extensionality": ("norm", "W"),
        "SetInduction": ("norm", "W"), "Collection": ("norm", "W"),
        "Infinity": ("w+4", "w"),
        "Separation": ("max(beta...,gamma)+7", "0"),
        "Pair": ("max(beta,gamma)+6", "max(beta,gamma)+2"),
        "Union": ("beta+9", "beta+2"),
        "Exponentiation": ("delta+4", "delta+3  (delta = max(beta,gamma)+2)"),
    },
}


@dataclass(frozen=True)
class NodeAnnotation:
    """Bounds for one node.  ``via`` is the controlled inference (with the
    premise lengths used) that justifies the bound; ``norm`` is the norm of
    the node's sequent."""

    ordinal: Ord
    cutrank: Ord
    operator: ControlledOperator
    via: RuleInstance
    norm: Ord
    source: str


@dataclass(frozen=True)
class Embedding:
    theory: Theory
    m: int
    annotations: dict
    root: NodeAnnotation


def least_big_power(x: Ord) -> Ord:
    """The least ``w^(W+k)`` with ``k >= 1`` strictly above ``x``."""
    for k in range(1, 10_000):
        p = omega_big_pow(k)
        if _cmp(x, p) < 0:
            return p
    raise OrdinalRangeError("bound is not below w^(W+w)")


def choose_m(ordinal: Ord, cutrank: Ord, norm: Ord) -> int:
    """Least ``m >= 1`` with the three root quantities inside the
    ``(w^(W+m), W+m)`` envelope."""
    for m in range(1, 10_000):
        big = omega_big_pow(m)
        if (_cmp(ordinal, big) <= 0 and _cmp(cutrank, add(W, nat(m))) <= 0
                and _cmp(norm, big) <= 0):
            return m
    raise OrdinalRangeError("bounds are not below w^(W+w)")


class _Ctx:
    def __init__(self, theory: Theory, beta, var_levels):
        self.theory = theory
        self.beta = dict(beta or {})
        self.var_levels = dict(var_levels or {})
        self.beta_terms = {Var(k): v for k, v in self.beta.items()}

    def rank(self, f) -> Ord:
        if self.theory is Theory.IKP_E:
            return rank(f, self.theory, beta=self.beta_terms)
        return rank(f, self.theory, var_levels=self.var_levels)

    def norm(self, seq: Sequent) -> Ord:
        if self.theory is Theory.IKP_E:
            return norm_no_sequent(seq, self.theory, beta=self.beta_terms)
        return norm_no_sequent(seq, self.theory, var_levels=self.var_levels)

    def level(self, t) -> Ord:
        """Level of a finite-calculus term in the L or V system."""
        if isinstance(t, Var):
            if self.theory is Theory.IKP:
                return ZERO
            return self.var_levels.get(t.name, ZERO)
        raise NoLevel(f"no level for {t!r}")

    def position(self, t) -> Ord:
        """Hierarchy index of the E stage that a variable term is declared in."""
        if isinstance(t, Var):
            return add(self.beta.get(t.name, ZERO), ONE)
        raise NoLevel(f"no hierarchy position for {t!r}")

    def operator(self, seq: Sequent) -> ControlledOperator:
        names = set()
        for f in seq.formulas:
            names |= free_vars(f)
        table = self.beta if self.theory is Theory.IKP_E else self.var_levels
        return H(ZERO, {table[n] for n in names if n in table})


def _term_params(f, *exclude) -> list:
    return sorted(free_vars(f) - set(exclude))


def _axiom_bound(ctx: _Ctx, node: Derivation) -> tuple:
    th, schema = ctx.theory, node.rule
    seq = node.conclusion
    norm = ctx.norm(seq)
    S = seq.delta[0]
    if th is Theory.IKP:
        if schema == "SetInduction":
            return nat_sum(norm, omega_pow(ctx.rank(S.left))), ZERO
        return norm, ZERO
    args = axiom_arguments(schema, S)
    if th is Theory.IKP_P:
        lev = ctx.level
        if schema == "Infinity":
            return add(OMEGA, nat(2)), ZERO
        if schema == "Separation":
            r, hole, B = args
            params = [lev(Var(n)) for n in _term_params(B, hole.name)]
            return add(lev(r), nat(7)), add(ord_max(lev(r), *params), OMEGA)
        if schema == "Pair":
            s, t = args
            return add(add(ord_max(lev(s), lev(t)), ONE), nat(2)), ZERO
        if schema == "Union":
            return add(lev(args[0]), nat(5)), ZERO
        if schema == "PowerSet":
            return add(lev(args[0]), nat(3)), ZERO
        return norm, ZERO
    pos = ctx.position
    if schema == "Infinity":
        return add(OMEGA, nat(4)), OMEGA
    if schema == "Separation":
        r, hole, B = args
        params = [pos(Var(n)) for n in _term_params(B, hole.name)]
        return add(ord_max(pos(r), *params), nat(7)), ZERO
    if schema == "Pair":
        a = ord_max(pos(args[0]), pos(args[1]))
        return add(a, nat(6)), add(a, nat(2))
    if schema == "Union":
        b = pos(args[0])
        return add(b, nat(9)), add(b, nat(2))
    if schema == "Exponentiation":
        d = add(ord_max(pos(args[0]), pos(args[1])), nat(2))
        return add(d, nat(4)), add(d, nat(3))
    return norm, W


def _cut_formula(node: Derivation):
    gc = node.conclusion.gamma_keys()
    a, b = node.premises
    for prove, use in ((a, b), (b, a)):
        pc = prove.conclusion
        if len(pc.delta) == 1 and use.conclusion.gamma_keys() == gc | {alpha_key(pc.delta[0])}:
            return pc.delta[0]
    raise UncheckedDerivation("cut node without a recognisable cut formula")


def _guard(P, t):
    if P.kind == "in":
        return Mem(t, P.bounds[0])
    if P.kind == "sub":
        return Sub(t, P.bounds[0])
    return Fun(t, P.bounds[0], P.bounds[1])


def embed_bounds(d: Derivation, theory: Theory | str, beta: Mapping | None = None,
                 var_levels: Mapping | None = None) -> tuple:
    """Annotate every node of a checked derivation.  Returns ``(m, {path:
    NodeAnnotation})`` with paths written ``r``, ``r.0``, ``r.0.1``."""
    emb = embedding(d, theory, beta, var_levels)
    return emb.m, emb.annotations


def embedding(d: Derivation, theory: Theory | str, beta: Mapping | None = None,
              var_levels: Mapping | None = None) -> Embedding:
    """Like :func:`embed_bounds` but returns an :class:`Embedding` record."""
    theory = Theory.parse(theory)
    report = check(d, theory)
    if not report.ok:
        raise UncheckedDerivation("derivation does not check: " + "; ".join(
            f"{p}: {r}" for p, r in report.failures))
    ctx = _Ctx(theory, beta, var_levels)
    out: dict = {}
    nodes = list(iter_nodes(d))
    for path, node in reversed(nodes):
        kids = [out[path_str(path + (i,))] for i in range(len(node.premises))]
        out[path_str(path)] = _annotate(ctx, node, kids)
    root = out["r"]
    m = choose_m(root.ordinal, root.cutrank, root.norm)
    ordered = {path_str(p): out[path_str(p)] for p, _ in nodes}
    return Embedding(theory, m, ordered, root)


def _annotate(ctx: _Ctx, node: Derivation, kids: list) -> NodeAnnotation:
    th = ctx.theory
    seq = node.conclusion
    norm = ctx.norm(seq)
    op = ctx.operator(seq)
    tag = node.rule
    e = th is Theory.IKP_E

    if node.is_axiom:
        a, r = _axiom_bound(ctx, node)
        via = RuleInstance("axiom", a, r, (), op)
        return NodeAnnotation(a, r, op, via, norm, f"axiom {tag}")

    a0s = [k.ordinal for k in kids]
    r0 = ord_max(*(k.cutrank for k in kids))
    top = ord_max(*a0s)

    if tag in _PROP:
        a = add(top, ONE)
        via = RuleInstance(tag, a, r0, tuple(a0s), op)
        return NodeAnnotation(a, r0, op, via, norm, "propositional rule")

    if tag == "cut":
        C = _cut_formula(node)
        rc = ctx.rank(C)
        r = ord_max(r0, add(rc, ONE))
        a = add(top, ONE)
        via = RuleInstance("cut", a, r, tuple(a0s), op, cut_formula_rank=rc)
        return NodeAnnotation(a, r, op, via, norm, "cut")

    P, X, t = quantifier_data(node)
    (a0,) = a0s

    if tag in _WITNESS:
        if tag.endswith("L"):
            aux_seq = Sequent(tuple(seq.gamma), (X,))
        else:
            aux_seq = Sequent((X,), (P,))
        aux = ctx.norm(aux_seq)
        rc = ctx.rank(X)
        r = ord_max(r0, add(rc, ONE), W if e else ZERO)
        a = add(ord_max(a0, aux), ONE)
        via = RuleInstance("cut", a, r, (a0, aux), op, cut_formula_rank=rc)
        return NodeAnnotation(a, r, op, via, norm, f"{tag} through a cut on the minor formula")

    if tag in _UNBOUNDED_WITNESS:
        if e:
            b = ctx.position(t) if isinstance(t, Var) else ZERO
            a = ord_max(add(a0, nat(4)), add(b, ONE))
            via = RuleInstance(tag, a, r0, (a0, ZERO), op, e_levels=(b,))
        else:
            lv = ctx.level(t) if isinstance(t, Var) else ZERO
            a = ord_max(add(a0, nat(2)), add(lv, ONE))
            via = RuleInstance(tag, a, r0, (a0,), op, witness_level=lv)
        return NodeAnnotation(a, r0, op, via, norm, f"{tag} with an explicit witness")

    # eigenvariable rules become infinitary rules
    uniform = ord_max(add(a0, nat(2)), W)
    a = least_big_power(uniform)
    r = r0
    if P.kind != "U":
        if th is Theory.IKP:
            r = ord_max(r, add(ctx.rank(_guard(P, Var(node.eigen))), ONE))
        elif e:
            r = ord_max(r, W)
    if e:
        if P.kind == "U":
            via = RuleInstance(tag, a, r, (Premise(uniform, ZERO),), op)
        elif P.kind == "exp":
            levels = tuple(ctx.position(b) for b in P.bounds)
            via = RuleInstance(tag, a, r, (uniform, ZERO, ZERO), op, e_levels=levels)
        else:
            via = RuleInstance(tag, a, r, (uniform, ZERO), op,
                               e_levels=(ctx.position(P.bounds[0]),))
    else:
        via = RuleInstance(tag, a, r, (Premise(uniform, ZERO),), op)
    return NodeAnnotation(a, r, op, via, norm, f"{tag} as an infinitary rule")

