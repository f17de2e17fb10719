"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from ordforge.calculus.derivation import ARITY, AXIOMS, EIGEN_RULES, RULES, Derivation
from ordforge.hierarchy import HFSet
from ordforge.ordinals import OMEGA, ONE, W, ZERO, add, nat, omega_pow
from ordforge.syntax.ast import (
    And, Comp, Eq, Fun, Imp, IVar, Mem, Not, Or, Quant, Sequent, Stage, Sub, Theory, Var,
)

from universe import universe

NAMES = ("a", "b", "c", "x", "y", "z", "u", "v")
THEORIES = (Theory.IKP, Theory.IKP_P, Theory.IKP_E)


# -- ordinals ------------------------------------------------------------------------------

def ordinals(max_size: int = 5):
    return st.sampled_from(universe(max_size))


def small_ordinals():
    """Ordinals below the pivot that are cheap to use as stage levels."""
    return st.sampled_from([
        ZERO, ONE, nat(2), nat(3), OMEGA, add(OMEGA, ONE), add(OMEGA, nat(2)),
        add(OMEGA, OMEGA), omega_pow(nat(2)), omega_pow(OMEGA),
    ])


# -- formulas of the finite languages ----------------------------------------------------------

def _kinds(theory: Theory) -> list:
    return ["U", "in"] + {Theory.IKP_P: ["sub"], Theory.IKP_E: ["exp"]}.get(theory, [])


def formulas(theory: Theory, names=NAMES, max_leaves: int = 12):
    """Formulas of the finite language of ``theory`` over the variable names."""
    var = st.sampled_from(names).map(Var)
    atoms = [st.builds(Mem, var, var), st.builds(Eq, var, var), st.builds(Fun, var, var, var)]
    if theory is Theory.IKP_P:
        atoms.append(st.builds(Sub, var, var))
    atom = st.one_of(atoms)
    kinds = _kinds(theory)

    def extend(inner):
        def quant(draw):
            kind = draw(st.sampled_from(kinds))
            bounds = {"U": 0, "in": 1, "sub": 1, "exp": 2}[kind]
            return Quant(draw(st.sampled_from(["all", "ex"])), kind, draw(st.sampled_from(names)),
                         tuple(draw(var) for _ in range(bounds)), draw(inner))

        return st.one_of(
            st.builds(Not, inner),
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Imp, inner, inner),
            st.composite(lambda draw: quant(draw))(),
        )

    return st.recursive(atom, extend, max_leaves=max_leaves)


# -- closed formulas of the infinitary systems ----------------------------------------------------

_STAGE = {Theory.IKP: "L", Theory.IKP_P: "V", Theory.IKP_E: "E"}
_LEVELS = [ZERO, ONE, nat(2), nat(3), OMEGA, add(OMEGA, ONE), add(OMEGA, OMEGA)]


def _allowed(max_level=None, below=None) -> list:
    out = _LEVELS
    if max_level is not None:
        out = [lv for lv in out if lv <= max_level]
    if below is not None:
        out = [lv for lv in out if lv < below]
    return out


@st.composite
def irs_terms(draw, system: Theory, scope: tuple = (), depth: int = 1, max_level=None, below=None):
    """A term of the infinitary system, possibly mentioning bound names in
    ``scope``.  Stage levels are at most ``max_level`` and strictly below
    ``below`` when those are given.  The body of a separation term over a
    stage only mentions stages of smaller level."""
    kind = _STAGE[system]
    levels = _allowed(max_level, below)
    choices = []
    if levels:
        choices.append("stage")
        if system is not Theory.IKP:
            choices.append("ivar")
        if depth > 0:
            choices.append("comp")
    if scope:
        choices.append("bound")
    pick = draw(st.sampled_from(choices))
    if pick == "bound":
        return Var(draw(st.sampled_from(scope)))
    if pick == "ivar":
        return IVar(draw(st.integers(0, 3)), draw(st.sampled_from(levels)))
    if pick == "stage":
        return Stage(kind, draw(st.sampled_from(levels)))
    lv = draw(st.sampled_from(levels))
    var = draw(st.sampled_from(("p", "q")))
    if system is Theory.IKP_E:
        bound = draw(irs_terms(system, (), depth - 1, max_level, below))
        inner_below = below
    else:
        bound = Stage(kind, lv)
        inner_below = lv
    body = draw(irs_formulas(system, (var,), depth=1, delta0=True, term_depth=0,
                             max_level=max_level, below=inner_below))
    return Comp(var, bound, body)


@st.composite
def irs_formulas(draw, system: Theory, scope: tuple = (), depth: int = 3, delta0: bool = False,
                 term_depth: int = 1, max_level=None, below=None):
    """A formula of the infinitary system whose free names all lie in
    ``scope``.  With ``delta0`` set, every quantifier is bounded."""
    term = irs_terms(system, scope, term_depth, max_level, below)
    if depth <= 0 or draw(st.integers(0, 3)) == 0:
        shapes = ["mem", "mem", "eq"] + (["sub"] if system is Theory.IKP_P else [])
        a, b = draw(term), draw(term)
        return {"mem": Mem, "eq": Eq, "sub": Sub}[draw(st.sampled_from(shapes))](a, b)
    shape = draw(st.sampled_from(["not", "and", "or", "imp", "quant", "quant"]))
    sub = irs_formulas(system, scope, depth - 1, delta0, term_depth, max_level, below)
    if shape == "not":
        return Not(draw(sub))
    if shape in ("and", "or", "imp"):
        return _CONN[shape](draw(sub), draw(sub))
    kinds = ["in"] + (["U"] if not delta0 else []) + _EXTRA_KIND.get(system, [])
    kind = draw(st.sampled_from(kinds))
    var = draw(st.sampled_from(("x", "y", "z")))
    bounds = tuple(draw(term) for _ in range(_NBOUNDS[kind]))
    body = draw(irs_formulas(system, tuple(sorted(set(scope) | {var})), depth - 1, delta0,
                             term_depth, max_level, below))
    return Quant(draw(st.sampled_from(["all", "ex"])), kind, var, bounds, body)


_CONN = {"and": And, "or": Or, "imp": Imp}
_NBOUNDS = {"U": 0, "in": 1, "sub": 1, "exp": 2}
_EXTRA_KIND = {Theory.IKP_P: ["sub"], Theory.IKP_E: ["exp"]}


# -- rule instances of the infinitary systems ----------------------------------------------

#: principal formula shape of each rule tag: (class, quantifier, kind)
RULE_SHAPES = {
    "andL": (And,), "andR": (And,), "orL": (Or,), "orR": (Or,), "impL": (Imp,), "impR": (Imp,),
    "notL": (Not,), "notR": (Not,), "memL": (Mem,), "memR": (Mem,), "subL": (Sub,),
    "subR": (Sub,),
    "ballL": (Quant, "all", "in"), "ballR": (Quant, "all", "in"),
    "bexL": (Quant, "ex", "in"), "bexR": (Quant, "ex", "in"),
    "pballL": (Quant, "all", "sub"), "pballR": (Quant, "all", "sub"),
    "pbexL": (Quant, "ex", "sub"), "pbexR": (Quant, "ex", "sub"),
    "eballL": (Quant, "all", "exp"), "eballR": (Quant, "all", "exp"),
    "ebexL": (Quant, "ex", "exp"), "ebexR": (Quant, "ex", "exp"),
    "allL": (Quant, "all", "U"), "allR": (Quant, "all", "U"),
    "exL": (Quant, "ex", "U"), "exR": (Quant, "ex", "U"),
}


def _has_unbounded(f) -> bool:
    if isinstance(f, Quant):
        return f.kind == "U" or _has_unbounded(f.body)
    if isinstance(f, Not):
        return _has_unbounded(f.body)
    if isinstance(f, (And, Or, Imp)):
        return _has_unbounded(f.left) or _has_unbounded(f.right)
    return False


@st.composite
def _big(draw, system: Theory, scope: tuple):
    """A formula with an unbounded quantifier, so its rank is at least W."""
    f = draw(irs_formulas(system, scope, depth=2))
    if _has_unbounded(f):
        return f
    var = draw(st.sampled_from(("x", "y", "z")))
    inner = draw(irs_formulas(system, tuple(sorted(set(scope) | {var})), depth=1))
    conn = draw(st.sampled_from([And, Or, Imp]))
    return conn(f, Quant(draw(st.sampled_from(["all", "ex"])), "U", var, (), inner))


def _witness_bound(system: Theory, tag: str):
    """How the level of the witness relates to the bound: ``"lt"``, ``"le"``
    or ``None`` (unrestricted)."""
    if tag.startswith(("all", "ex")) or system is Theory.IKP_E:
        return None
    if tag.startswith(("sub", "pb")):
        return "le"
    return "lt"


@st.composite
def rule_instances(draw, system: Theory, tags=None, high_only: bool = False):
    """``(tag, principal, witness)`` for a rule of the infinitary system.
    With ``high_only`` the principal formula contains an unbounded
    quantifier.  The witness level obeys the row of the rule, so the result
    may be ``None`` when no witness exists (a bound of level 0)."""
    from ordforge.analysis import SYSTEM_RULES
    from ordforge.syntax import level

    usable = sorted(t for t in SYSTEM_RULES[system] if t in RULE_SHAPES)
    tag = draw(st.sampled_from(sorted(tags) if tags else usable))
    shape = RULE_SHAPES[tag]
    part = (lambda sc: _big(system, sc)) if high_only else (
        lambda sc: irs_formulas(system, sc, depth=2))
    term = irs_terms(system)
    cls = shape[0]
    if cls in (And, Or, Imp):
        a, b = draw(part(())), draw(irs_formulas(system, (), depth=2))
        principal = cls(*draw(st.permutations([a, b])))
    elif cls is Not:
        principal = Not(draw(part(())))
    elif cls in (Mem, Sub):
        principal = cls(draw(term), draw(term))
    else:
        _, q, kind = shape
        var = draw(st.sampled_from(("x", "y", "z")))
        bounds = tuple(draw(term) for _ in range(_NBOUNDS[kind]))
        principal = Quant(q, kind, var, bounds, draw(part((var,))))
    witness = None
    if cls in (Mem, Sub, Quant):
        mode = _witness_bound(system, tag)
        bound = principal.right if cls in (Mem, Sub) else (
            principal.bounds[0] if principal.bounds else None)
        if mode is None or bound is None:
            witness = draw(irs_terms(system))
        else:
            bl = level(bound)
            if mode == "le":
                witness = draw(irs_terms(system, max_level=bl))
            elif any(lv < bl for lv in _LEVELS):
                witness = draw(irs_terms(system, below=bl))
            else:
                return tag, principal, None
    return tag, principal, witness


# -- hereditarily finite sets -----------------------------------------------------------------

def hfsets(stage: int = 4):
    """Members of the given stage, via their codes."""
    from ordforge.hierarchy import stage_size
    return st.integers(0, stage_size(stage) - 1).map(HFSet)


# -- derivation trees (not necessarily correct) ----------------------------------------------------

@st.composite
def sequents(draw, theory: Theory):
    f = formulas(theory, max_leaves=4)
    gamma = draw(st.lists(f, max_size=2))
    delta = draw(st.lists(f, max_size=1))
    return Sequent(tuple(gamma), tuple(delta))


@st.composite
def derivation_trees(draw, theory: Theory, depth: int = 3):
    """Random derivation trees with the right number of premises per rule.
    They round-trip through the proof file format whether or not they check."""
    tags = sorted(t for t, ts in RULES.items() if theory in ts)
    axioms = sorted(a for a, ts in AXIOMS.items() if theory in ts)
    if depth <= 0:
        rule = draw(st.sampled_from(axioms))
    else:
        rule = draw(st.sampled_from(tags + axioms))
    premises = tuple(draw(derivation_trees(theory, depth - 1)) for _ in range(ARITY[rule]))
    eigen = draw(st.sampled_from(NAMES)) if rule in EIGEN_RULES else None
    return Derivation(draw(sequents(theory)), rule, premises, eigen)
