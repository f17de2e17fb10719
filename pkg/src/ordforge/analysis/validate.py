"""Side conditions of operator-controlled inferences in the infinitary
systems.

An inference is described by a :class:`RuleInstance`.  It holds the
conclusion's length bound and cut rank, one :class:`Premise` per premise
(for rules with infinitely many premises, the representative premises the
caller wants checked), the controlling operator and the levels the row
mentions.  :func:`validate_inference` checks the row of the selected rule
and returns a :class:`Verdict` listing every violated condition.

The three systems are selected by theory: ``ikp`` for the L-stage system,
``ikpp`` for the V-stage system and ``ikpe`` for the E-stage system.

Rule tags are those of the finite calculi plus ``memL``/``memR``
(membership), ``subL``/``subR`` (subset, V-stage system), ``elim`` (limit
rule, E-stage system), ``sigmaRef`` (reflection) and ``axiom``.  In the
E-stage system the premises stating hierarchy positions come after the main
premise, in the order of the table, and the positions themselves go in
``e_levels``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from ..collapse import ControlledOperator, H, h_contains
from ..ordinals import ONE, W, ZERO, Ord, _cmp, add, is_limit, nat, ord_max
from ..ordtext import to_text
from ..syntax.ast import Theory
from ..syntax.classes import is_sigma
from ..syntax.ranks import k_of

__all__ = ["Premise", "RuleInstance", "Verdict", "validate_inference", "SYSTEM_RULES"]

_PROP = ("andL", "andR", "orL", "orR", "notL", "notR", "bot", "impL", "impR")
_COMMON = _PROP + ("axiom", "cut", "sigmaRef")

#: rule tags of each infinitary system
SYSTEM_RULES = {
    Theory.IKP: frozenset(_COMMON + (
        "memL", "memR", "ballL", "ballR", "bexL", "bexR", "allL", "allR", "exL", "exR")),
    Theory.IKP_P: frozenset(_COMMON + (
        "memL", "memR", "subL", "subR", "ballL", "ballR", "bexL", "bexR",
        "pballL", "pballR", "pbexL", "pbexR", "allL", "allR", "exL", "exR")),
    Theory.IKP_E: frozenset(_COMMON + (
        "elim", "ballL", "ballR", "bexL", "bexR", "eballL", "eballR", "ebexL", "ebexR",
        "allL", "allR", "exL", "exR")),
}

# rows of the L- and V-stage tables, grouped by shape
_FAMILY = {"memL", "subL", "ballR", "bexL", "pballR", "pbexL"}   # |s| <= a_s < a
_FAMILY_WEAK = {"subL", "pballR", "pbexL"}                      # witnesses with |s| <= |t|
_WITNESS_STRICT = {"memR", "ballL", "bexR"}                      # a_0 < a, |s| < |t|, |s| < a
_WITNESS_WEAK = {"subR", "pballL", "pbexR"}                      # a_0 < a, |s| <= |t|, |s| < a
_UNBOUNDED_WITNESS = {"allL", "exR"}
_UNBOUNDED_FAMILY = {"allR", "exL"}

# premise counts of the E-stage table
_E_ARITY = {
    "ballL": 3, "bexR": 3, "ballR": 2, "bexL": 2, "eballL": 4, "ebexR": 4,
    "eballR": 3, "ebexL": 3, "allL": 2, "exR": 2,
}
_E_LEVELS = {
    "ballL": 2, "bexR": 2, "ballR": 1, "bexL": 1, "eballL": 3, "ebexR": 3,
    "eballR": 2, "ebexL": 2, "allL": 1, "exR": 1,
}


@dataclass(frozen=True)
class Premise:
    """One premise: its length bound and, where the row needs it, the level
    of the witness term (or the hierarchy index for the E-stage family
    rules)."""

    ordinal: Ord
    level: Ord | None = None


@dataclass(frozen=True)
class RuleInstance:
    tag: str
    ordinal: Ord
    cutrank: Ord = ZERO
    premises: tuple = ()
    operator: ControlledOperator = field(default_factory=H)
    conclusion: object = None
    witness_level: Ord | None = None
    bound_level: Ord | None = None
    e_levels: tuple = ()
    cut_formula_rank: Ord | None = None
    reflected: object = None
    limit: Ord | None = None

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(
            p if isinstance(p, Premise) else Premise(p) for p in self.premises))
        object.__setattr__(self, "e_levels", tuple(self.e_levels))


class Verdict(NamedTuple):
    ok: bool
    reasons: tuple

    def __bool__(self) -> bool:
        return self.ok


def _lt(a: Ord, b: Ord) -> bool:
    return _cmp(a, b) < 0


def _le(a: Ord, b: Ord) -> bool:
    return _cmp(a, b) <= 0


def _t(x: Ord) -> str:
    return to_text(x)


def validate_inference(system: Theory | str, inst: RuleInstance) -> Verdict:
    """Check every condition of the table row for ``inst.tag``."""
    system = Theory.parse(system)
    why: list = []
    tag, a, op = inst.tag, inst.ordinal, inst.operator
    if tag not in SYSTEM_RULES[system]:
        return Verdict(False, (f"{tag} is not a rule of the {system.label} infinitary system",))

    def need(cond: bool, msg: str):
        if not cond:
            why.append(msg)

    # the condition every row shares
    need(h_contains(op, a), f"length {_t(a)} is not in {op}")
    if inst.conclusion is not None:
        for x in sorted(k_of(inst.conclusion), key=_t):
            need(h_contains(op, x), f"stage index {_t(x)} of the conclusion is not in {op}")
    if system is Theory.IKP_E:
        for x in inst.e_levels:
            need(_lt(x, W), f"hierarchy index {_t(x)} is not below W")
            need(h_contains(op, x), f"hierarchy index {_t(x)} is not in {op}")

    ps = inst.premises
    s = inst.witness_level if inst.witness_level is not None else ZERO

    def all_below():
        for i, p in enumerate(ps):
            need(_lt(p.ordinal, a), f"premise {i} length {_t(p.ordinal)} is not below {_t(a)}")

    if tag == "axiom":
        need(not ps, "axioms have no premises")
    elif tag in _PROP:
        need(len(ps) >= 1, f"{tag} needs premises")
        all_below()
    elif tag == "cut":
        need(len(ps) >= 2, "cut needs two premises")
        all_below()
        if inst.cut_formula_rank is None:
            why.append("cut needs the rank of the cut formula")
        else:
            need(_lt(inst.cut_formula_rank, inst.cutrank),
                 f"cut formula rank {_t(inst.cut_formula_rank)} is not below the cut rank "
                 f"{_t(inst.cutrank)}")
    elif tag == "sigmaRef":
        need(len(ps) == 1, "reflection has one premise")
        if ps:
            need(_lt(add(ps[0].ordinal, ONE), a), "reflection needs a_0 + 1 < a")
        need(_lt(W, a), "reflection needs W < a")
        need(inst.reflected is not None and is_sigma(inst.reflected),
             "the reflected formula is not a Sigma formula")
    elif system is Theory.IKP_E:
        _check_e_row(tag, inst, need, all_below)
    else:
        _check_lv_row(tag, inst, s, need)
    return Verdict(not why, tuple(why))


def _check_lv_row(tag, inst: RuleInstance, s: Ord, need) -> None:
    a, ps = inst.ordinal, inst.premises
    if tag in _FAMILY:
        need(len(ps) >= 1, f"{tag} needs at least one representative premise")
        for i, p in enumerate(ps):
            lv = p.level if p.level is not None else ZERO
            need(_le(lv, p.ordinal), f"premise {i}: witness level {_t(lv)} exceeds its length")
            need(_lt(p.ordinal, a), f"premise {i} length {_t(p.ordinal)} is not below {_t(a)}")
            if inst.bound_level is not None:
                if tag in _FAMILY_WEAK:
                    need(_le(lv, inst.bound_level), f"premise {i}: witness level exceeds |t|")
                else:
                    need(_lt(lv, inst.bound_level), f"premise {i}: witness level is not below |t|")
    elif tag in _WITNESS_STRICT or tag in _WITNESS_WEAK:
        need(len(ps) == 1, f"{tag} has one premise")
        if ps:
            need(_lt(ps[0].ordinal, a), f"{tag} needs a_0 < a")
        if inst.bound_level is not None:
            if tag in _WITNESS_STRICT:
                need(_lt(s, inst.bound_level), f"{tag} needs |s| < |t|")
            else:
                need(_le(s, inst.bound_level), f"{tag} needs |s| <= |t|")
        need(_lt(s, a), f"{tag} needs |s| < a")
    elif tag in _UNBOUNDED_WITNESS:
        need(len(ps) == 1, f"{tag} has one premise")
        if ps:
            need(_lt(add(ps[0].ordinal, ONE), a), f"{tag} needs a_0 + 1 < a")
        need(_lt(s, a), f"{tag} needs |s| < a")
    elif tag in _UNBOUNDED_FAMILY:
        need(len(ps) >= 1, f"{tag} needs at least one representative premise")
        for i, p in enumerate(ps):
            lv = p.level if p.level is not None else ZERO
            need(_lt(lv, add(p.ordinal, ONE)), f"premise {i}: needs |s| < a_s + 1")
            need(_lt(add(p.ordinal, ONE), a), f"premise {i}: needs a_s + 1 < a")


def _check_e_row(tag, inst: RuleInstance, need, all_below) -> None:
    a, ps, op, lv = inst.ordinal, inst.premises, inst.operator, inst.e_levels
    three = nat(3)
    if tag == "elim":
        need(len(ps) >= 1, "elim needs at least one representative premise")
        all_below()
        g = inst.limit
        need(g is not None and is_limit(g), "elim needs a limit hierarchy index")
        if g is not None:
            need(h_contains(op, g), "elim needs its limit index in the operator")
        return
    if tag in ("allR", "exL"):
        need(len(ps) >= 1, f"{tag} needs at least one representative premise")
        for i, p in enumerate(ps):
            b = p.level if p.level is not None else ZERO
            need(_lt(b, add(p.ordinal, three)), f"premise {i}: needs beta < a_beta + 3")
            need(_lt(add(p.ordinal, three), a), f"premise {i}: needs a_beta + 3 < a")
        return
    want = _E_ARITY[tag]
    need(len(ps) == want, f"{tag} has {want} premises (main premise and level premises)")
    need(len(lv) == _E_LEVELS[tag], f"{tag} needs {_E_LEVELS[tag]} hierarchy indices")
    if len(lv) != _E_LEVELS[tag]:
        return
    if tag in ("allL", "exR"):
        for i, p in enumerate(ps):
            need(_lt(add(p.ordinal, three), a), f"premise {i}: needs a_i + 3 < a")
        need(_lt(lv[0], a), f"{tag} needs beta < a")
        return
    all_below()
    if tag in ("ballL", "bexR"):
        b, g = lv
        need(_lt(g, a), f"{tag} needs gamma < a")
        need(_le(g, b), f"{tag} needs gamma <= beta")
    elif tag in ("ballR", "bexL"):
        need(_lt(lv[0], a), f"{tag} needs beta < a")
    elif tag in ("eballL", "ebexR"):
        b, g, d = lv
        need(_lt(d, a), f"{tag} needs delta < a")
        need(_le(d, add(ord_max(b, g), nat(2))), f"{tag} needs delta <= max(beta, gamma) + 2")
    elif tag in ("eballR", "ebexL"):
        b, g = lv
        need(_le(add(ord_max(b, g), nat(2)), a), f"{tag} needs max(beta, gamma) + 2 <= a")

