"""Minor formulas of the infinitary rules.

For a principal formula and a witness term, :func:`minor_formulas` returns
the formulas that the premise of the corresponding rule mentions instead of
the principal one.  In the L-stage system bounded quantifiers and
membership use the relativised membership of :func:`dot_in`, which unfolds
a separation term into its defining formula.  The V- and E-stage systems
use plain membership, and the V-stage system adds the subset rules with
minor formula ``r sub t & s = r`` for principal ``s sub t``.
"""

from __future__ import annotations

from ..ordinals import Ord
from ..syntax.ast import And, Comp, Eq, Fun, Imp, Mem, Not, Or, Quant, Stage, Sub, Theory, subst
from ..syntax.ranks import rank

__all__ = ["dot_in", "minor_formulas", "rank_of"]


_BINARY = {"and": And, "or": Or, "imp": Imp}


def dot_in(s, t, A, conn=And):
    """``s dot-in t`` joined to ``A`` by ``conn``: just ``A`` when ``t`` is a
    stage, ``conn(B(s), A)`` when ``t`` is ``{x in u | B(x)}`` and
    ``conn(s in t, A)`` otherwise."""
    if isinstance(t, Stage):
        return A
    if isinstance(t, Comp):
        return conn(subst(t.body, t.var, s), A)
    return conn(Mem(s, t), A)


def rank_of(system: Theory | str, f) -> Ord:
    return rank(f, system)


def minor_formulas(system: Theory | str, tag: str, principal, witness=None) -> list:
    """Minor formulas of rule ``tag`` with the given principal formula,
    instantiated at ``witness`` where the rule has one."""
    system = Theory.parse(system)
    P = principal
    if tag in ("andL", "andR", "orL", "orR", "impL", "impR"):
        want = _BINARY[tag[:-1]]
        if not isinstance(P, want):
            raise ValueError(f"{tag} needs a principal formula of the matching shape")
        return [P.left, P.right]
    if tag in ("notL", "notR"):
        if not isinstance(P, Not):
            raise ValueError(f"{tag} needs a negation")
        return [P.body]
    if tag in ("memL", "memR"):
        if not isinstance(P, Mem):
            raise ValueError(f"{tag} needs a membership formula")
        same = Eq(P.left, witness)
        if system is Theory.IKP:
            return [dot_in(witness, P.right, same, And)]
        return [And(Mem(witness, P.right), same)]
    if tag in ("subL", "subR"):
        if not isinstance(P, Sub):
            raise ValueError(f"{tag} needs a subset formula")
        return [And(Sub(witness, P.right), Eq(P.left, witness))]
    if not isinstance(P, Quant):
        raise ValueError(f"{tag} needs a quantified principal formula")
    inst = subst(P.body, P.var, witness)
    conn = Imp if P.q == "all" else And
    if P.kind == "U":
        return [inst]
    if P.kind == "in":
        if system is Theory.IKP:
            return [dot_in(witness, P.bounds[0], inst, conn)]
        return [conn(Mem(witness, P.bounds[0]), inst)]
    if P.kind == "sub":
        return [conn(Sub(witness, P.bounds[0]), inst)]
    return [conn(Fun(witness, P.bounds[0], P.bounds[1]), inst)]
