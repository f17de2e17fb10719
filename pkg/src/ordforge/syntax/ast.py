"""Abstract syntax for the set-theoretic languages.

Terms
    ``Var(name)`` is a free variable of a finite derivation (a bound occurrence
    when it sits under a binder of the same name).  ``Stage(kind, level)`` with
    ``kind`` one of ``"L"``, ``"V"`` or ``"E"`` stands for the stages of the
    three hierarchies.  ``IVar(index, level)`` is a level-annotated free
    variable of the infinitary systems.  ``Comp(var, bound, body)`` is the
    separation term ``{var in bound | body}``.  Any parameters are written
    directly inside ``body``.

Formulas
    The primitive atom is :class:`Mem`.  :class:`Eq`, :class:`Sub` and
    :class:`Fun` are abbreviations that stay in the tree until
    :func:`expand` replaces them with primitive formulas.  Connectives are
    :class:`Not`, :class:`And`, :class:`Or` and :class:`Imp`.  Every binder is
    a :class:`Quant` whose ``kind`` is ``"U"`` (unbounded), ``"in"``, ``"sub"``
    or ``"exp"``.

Binders are named.  Alpha-equivalence is decided by :func:`alpha_key`.  That
function first expands the abbreviations and then replaces bound names by
their binding depth.  Two formulas are therefore identified exactly when they
agree up to renaming of bound variables and unfolding of abbreviations.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from ..errors import TheoryMismatch
from ..ordinals import Ord

__all__ = [
    "Theory", "Var", "Stage", "IVar", "Comp", "Term",
    "Mem", "Eq", "Sub", "Fun", "Not", "And", "Or", "Imp", "Quant", "Formula",
    "Sequent", "all_", "ex_", "ball", "bex", "sall", "sex", "eall", "eex",
    "free_vars", "term_free_vars", "subst", "subst_term", "fresh_name", "expand",
    "alpha_key", "alpha_eq", "fun_expand", "is_pair", "subformulas", "terms_in",
    "check_language", "conj", "rename_bound",
]


class Theory(enum.Enum):
    IKP = "ikp"
    IKP_P = "ikpp"
    IKP_E = "ikpe"

    @classmethod
    def parse(cls, name: "str | Theory") -> "Theory":
        if isinstance(name, Theory):
            return name
        key = name.strip().lower().replace("(", "").replace(")", "").replace("_", "")
        table = {"ikp": cls.IKP, "ikpp": cls.IKP_P, "ikpe": cls.IKP_E}
        if key not in table:
            raise ValueError(f"unknown theory {name!r}; expected ikp, ikpp or ikpe")
        return table[key]

    @property
    def label(self) -> str:
        return {"ikp": "IKP", "ikpp": "IKP(P)", "ikpe": "IKP(E)"}[self.value]


# -- terms ----------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Stage:
    kind: str  # "L", "V" or "E"
    level: Ord


@dataclass(frozen=True)
class IVar:
    index: int
    level: Ord


@dataclass(frozen=True)
class Comp:
    var: str
    bound: "Term"
    body: "Formula"


Term = Union[Var, Stage, IVar, Comp]


# -- formulas -------------------------------------------------------------------

@dataclass(frozen=True)
class Mem:
    left: Term
    right: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Sub:
    left: Term
    right: Term


@dataclass(frozen=True)
class Fun:
    graph: Term
    dom: Term
    cod: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


_QS = ("all", "ex")
_KINDS = {"U": 0, "in": 1, "sub": 1, "exp": 2}


@dataclass(frozen=True)
class Quant:
    """``q`` is ``"all"`` or ``"ex"``; ``bounds`` holds 0, 1 or 2 terms
    according to ``kind``."""

    q: str
    kind: str
    var: str
    bounds: tuple
    body: "Formula"

    def __post_init__(self):
        if self.q not in _QS:
            raise ValueError(f"bad quantifier {self.q!r}")
        if self.kind not in _KINDS:
            raise ValueError(f"bad quantifier kind {self.kind!r}")
        if len(self.bounds) != _KINDS[self.kind]:
            raise ValueError(f"{self.kind}-quantifier needs {_KINDS[self.kind]} bound term(s)")

    @property
    def bounded(self) -> bool:
        return self.kind != "U"


Formula = Union[Mem, Eq, Sub, Fun, Not, And, Or, Imp, Quant]
BINARY = (And, Or, Imp)
ATOMS = (Mem, Eq, Sub, Fun)


def all_(x: str, body) -> Quant:
    return Quant("all", "U", x, (), body)


def ex_(x: str, body) -> Quant:
    return Quant("ex", "U", x, (), body)


def ball(x: str, t: Term, body) -> Quant:
    return Quant("all", "in", x, (t,), body)


def bex(x: str, t: Term, body) -> Quant:
    return Quant("ex", "in", x, (t,), body)


def sall(x: str, t: Term, body) -> Quant:
    return Quant("all", "sub", x, (t,), body)


def sex(x: str, t: Term, body) -> Quant:
    return Quant("ex", "sub", x, (t,), body)


def eall(x: str, a: Term, b: Term, body) -> Quant:
    return Quant("all", "exp", x, (a, b), body)


def eex(x: str, a: Term, b: Term, body) -> Quant:
    return Quant("ex", "exp", x, (a, b), body)


def conj(*fs):
    """Left-nested conjunction of the arguments."""
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


@dataclass(frozen=True)
class Sequent:
    """``gamma => delta``.  The antecedent is kept in the order it was written
    so printing is faithful; comparison up to set semantics goes through
    :meth:`same_as`."""

    gamma: tuple = ()
    delta: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(self.gamma))
        object.__setattr__(self, "delta", tuple(self.delta))

    @property
    def formulas(self) -> tuple:
        return self.gamma + self.delta

    @property
    def succedent(self):
        return self.delta[0] if self.delta else None

    def gamma_keys(self) -> frozenset:
        return frozenset(alpha_key(f) for f in self.gamma)

    def delta_keys(self) -> frozenset:
        return frozenset(alpha_key(f) for f in self.delta)

    def same_as(self, other: "Sequent") -> bool:
        return self.gamma_keys() == other.gamma_keys() and self.delta_keys() == other.delta_keys()


# -- traversal helpers ------------------------------------------------------------

def subformulas(f) -> Iterator:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.body)
    elif isinstance(f, BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, Quant):
        yield from subformulas(f.body)


def _atom_terms(f) -> tuple:
    if isinstance(f, (Mem, Eq, Sub)):
        return (f.left, f.right)
    if isinstance(f, Fun):
        return (f.graph, f.dom, f.cod)
    return ()


def terms_in(f) -> Iterator[Term]:
    """Maximal term occurrences of ``f`` in left-to-right order (quantifier
    bounds come before the quantifier's body)."""
    if isinstance(f, ATOMS):
        yield from _atom_terms(f)
    elif isinstance(f, Not):
        yield from terms_in(f.body)
    elif isinstance(f, BINARY):
        yield from terms_in(f.left)
        yield from terms_in(f.right)
    elif isinstance(f, Quant):
        yield from f.bounds
        yield from terms_in(f.body)


def term_free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Comp):
        return term_free_vars(t.bound) | (free_vars(t.body) - {t.var})
    return frozenset()


@functools.lru_cache(maxsize=200_000)
def free_vars(f) -> frozenset:
    """Names of the free variables of a formula or term."""
    if isinstance(f, (Var, Stage, IVar, Comp)):
        return term_free_vars(f)
    if isinstance(f, ATOMS):
        out = frozenset()
        for t in _atom_terms(f):
            out |= term_free_vars(t)
        return out
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, BINARY):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Quant):
        out = free_vars(f.body) - {f.var}
        for t in f.bounds:
            out |= term_free_vars(t)
        return out
    raise TypeError(f"not a formula: {f!r}")


def all_names(f) -> set:
    """Every variable name occurring in ``f``, free or bound."""
    names = set()

    def term(t):
        if isinstance(t, Var):
            names.add(t.name)
        elif isinstance(t, Comp):
            names.add(t.var)
            term(t.bound)
            form(t.body)

    def form(g):
        for h in subformulas(g):
            for t in _atom_terms(h):
                term(t)
            if isinstance(h, Quant):
                names.add(h.var)
                for t in h.bounds:
                    term(t)

    if isinstance(f, (Var, Stage, IVar, Comp)):
        term(f)
    else:
        form(f)
    return names


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    avoid = set(avoid)
    if base not in avoid:
        return base
    stem = base.rstrip("0123456789") or "v"
    for i in itertools.count(1):
        cand = f"{stem}{i}"
        if cand not in avoid:
            return cand


# -- substitution ------------------------------------------------------------------

def subst_term(t: Term, name: str, new: Term) -> Term:
    if isinstance(t, Var):
        return new if t.name == name else t
    if isinstance(t, Comp):
        bound = subst_term(t.bound, name, new)
        if t.var == name:
            return Comp(t.var, bound, t.body)
        var, body = t.var, t.body
        if var in term_free_vars(new) and name in free_vars(body):
            var2 = fresh_name(var, all_names(body) | term_free_vars(new) | {name})
            body = subst(body, var, Var(var2))
            var = var2
        return Comp(var, bound, subst(body, name, new))
    return t


def subst(f, name: str, new: Term):
    """Capture-avoiding substitution of ``new`` for free ``name`` in ``f``."""
    if name not in free_vars(f):
        return f
    if isinstance(f, Mem):
        return Mem(subst_term(f.left, name, new), subst_term(f.right, name, new))
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, name, new), subst_term(f.right, name, new))
    if isinstance(f, Sub):
        return Sub(subst_term(f.left, name, new), subst_term(f.right, name, new))
    if isinstance(f, Fun):
        return Fun(*(subst_term(t, name, new) for t in (f.graph, f.dom, f.cod)))
    if isinstance(f, Not):
        return Not(subst(f.body, name, new))
    if isinstance(f, BINARY):
        return type(f)(subst(f.left, name, new), subst(f.right, name, new))
    if isinstance(f, Quant):
        bounds = tuple(subst_term(t, name, new) for t in f.bounds)
        if f.var == name:
            return Quant(f.q, f.kind, f.var, bounds, f.body)
        var, body = f.var, f.body
        if var in term_free_vars(new):
            var2 = fresh_name(var, all_names(body) | term_free_vars(new) | {name})
            body = subst(body, var, Var(var2))
            var = var2
        return Quant(f.q, f.kind, var, bounds, subst(body, name, new))
    if isinstance(f, (Var, Stage, IVar, Comp)):
        return subst_term(f, name, new)
    raise TypeError(f"not a formula: {f!r}")


def rename_bound(q: Quant, new: str) -> Quant:
    """Alpha-rename the variable bound by ``q``."""
    if new == q.var:
        return q
    if new in free_vars(q.body) - {q.var}:
        raise ValueError(f"renaming to {new!r} would capture a free variable")
    return Quant(q.q, q.kind, new, q.bounds, subst(q.body, q.var, Var(new)))


# -- abbreviations -----------------------------------------------------------------

def _fresh_for(*objs, base="x", extra=()) -> str:
    avoid = set(extra)
    for o in objs:
        avoid |= free_vars(o)
    return fresh_name(base, avoid)


def subset_formula(a: Term, b: Term) -> Quant:
    """``a sub b`` unfolded: ``(all x in a)(x in b)``."""
    x = _fresh_for(a, b)
    return ball(x, a, Mem(Var(x), b))


def eq_formula(a: Term, b: Term) -> And:
    """``a = b`` unfolded into two bounded inclusions."""
    return And(subset_formula(a, b), subset_formula(b, a))


def _is_upair(u: Term, y: Term, z: Term):
    """``u = {y, z}``"""
    t = _fresh_for(u, y, z, base="t")
    return conj(Mem(y, u), Mem(z, u),
                ball(t, u, Or(eq_formula(Var(t), y), eq_formula(Var(t), z))))


def _is_sing(v: Term, y: Term):
    """``v = {y}``"""
    t = _fresh_for(v, y, base="t")
    return And(Mem(y, v), ball(t, v, eq_formula(Var(t), y)))


def is_pair(p: Term, y: Term, z: Term):
    """``p = (y, z)`` for the Kuratowski pair ``{{y, z}, {y}}``."""
    u = _fresh_for(p, y, z, base="u")
    v = _fresh_for(p, y, z, base="v", extra={u})
    w = _fresh_for(p, y, z, base="w", extra={u, v})
    U, V, Wv = Var(u), Var(v), Var(w)
    return bex(u, p, bex(v, p, conj(
        _is_upair(U, y, z), _is_sing(V, y),
        ball(w, p, Or(eq_formula(Wv, U), eq_formula(Wv, V))))))


def _pair_in(y: Term, z: Term, x: Term):
    """``(y, z) in x``"""
    p = _fresh_for(y, z, x, base="p")
    return bex(p, x, is_pair(Var(p), y, z))


def fun_expand(x: Term, a: Term, b: Term):
    """Unfold ``fun(x, a, b)`` ("x is a function from a to b") into a bounded
    formula over ``in`` alone.  The result is the conjunction of three parts.

    * ``x`` is a subset of ``a * b``: every element of ``x`` is a pair with
      its first component in ``a`` and its second in ``b``.
    * Every element of ``a`` is related to some element of ``b``.
    * The relation is single-valued, compared with unfolded equality.
    """
    avoid = free_vars(x) | free_vars(a) | free_vars(b)
    p = fresh_name("p", avoid)
    y = fresh_name("y", avoid | {p})
    z = fresh_name("z", avoid | {p, y})
    z2 = fresh_name("z2", avoid | {p, y, z})
    Y, Z, Z2 = Var(y), Var(z), Var(z2)
    inside = ball(p, x, bex(y, a, bex(z, b, is_pair(Var(p), Y, Z))))
    total = ball(y, a, bex(z, b, _pair_in(Y, Z, x)))
    single = ball(y, a, ball(z, b, ball(z2, b, Imp(
        And(_pair_in(Y, Z, x), _pair_in(Y, Z2, x)), eq_formula(Z, Z2)))))
    return conj(inside, total, single)


def _expand_term(t: Term) -> Term:
    if isinstance(t, Comp):
        return Comp(t.var, _expand_term(t.bound), expand(t.body))
    return t


@functools.lru_cache(maxsize=200_000)
def expand(f):
    """Replace every abbreviation (``=``, ``sub`` and ``fun``) by its unfolding."""
    if isinstance(f, Mem):
        return Mem(_expand_term(f.left), _expand_term(f.right))
    if isinstance(f, Eq):
        return eq_formula(_expand_term(f.left), _expand_term(f.right))
    if isinstance(f, Sub):
        return subset_formula(_expand_term(f.left), _expand_term(f.right))
    if isinstance(f, Fun):
        return fun_expand(*(_expand_term(t) for t in (f.graph, f.dom, f.cod)))
    if isinstance(f, Not):
        return Not(expand(f.body))
    if isinstance(f, BINARY):
        return type(f)(expand(f.left), expand(f.right))
    if isinstance(f, Quant):
        return Quant(f.q, f.kind, f.var, tuple(_expand_term(t) for t in f.bounds), expand(f.body))
    raise TypeError(f"not a formula: {f!r}")


# -- alpha-equivalence -------------------------------------------------------------

def _tkey(t: Term, env: dict, depth: int):
    if isinstance(t, Var):
        lvl = env.get(t.name)
        return ("v", t.name) if lvl is None else ("b", depth - lvl)
    if isinstance(t, Stage):
        return ("S", t.kind, t.level)
    if isinstance(t, IVar):
        return ("I", t.index, t.level)
    if isinstance(t, Comp):
        inner = dict(env)
        inner[t.var] = depth
        return ("C", _tkey(t.bound, env, depth), _fkey(t.body, inner, depth + 1))
    raise TypeError(f"not a term: {t!r}")


def _fkey(f, env: dict, depth: int):
    if isinstance(f, Mem):
        return ("in", _tkey(f.left, env, depth), _tkey(f.right, env, depth))
    if isinstance(f, Not):
        return ("~", _fkey(f.body, env, depth))
    if isinstance(f, BINARY):
        tag = {And: "&", Or: "|", Imp: "->"}[type(f)]
        return (tag, _fkey(f.left, env, depth), _fkey(f.right, env, depth))
    if isinstance(f, Quant):
        inner = dict(env)
        inner[f.var] = depth
        return (f.q, f.kind, tuple(_tkey(t, env, depth) for t in f.bounds),
                _fkey(f.body, inner, depth + 1))
    raise TypeError(f"unexpanded or unknown formula: {f!r}")


@functools.lru_cache(maxsize=200_000)
def alpha_key(f) -> tuple:
    """Hashable representative of the alpha-equivalence class of the unfolded
    formula ``f``."""
    return _fkey(expand(f), {}, 0)


def alpha_eq(f, g) -> bool:
    return f == g or alpha_key(f) == alpha_key(g)


# -- language checks -------------------------------------------------------------------

_STAGE_THEORY = {"L": Theory.IKP, "V": Theory.IKP_P, "E": Theory.IKP_E}


def _check_term(t: Term, theory: Theory) -> None:
    if isinstance(t, Stage):
        if _STAGE_THEORY[t.kind] is not theory:
            raise TheoryMismatch(f"stage term {t.kind}(...) does not belong to {theory.label}")
    elif isinstance(t, IVar):
        if theory is Theory.IKP:
            raise TheoryMismatch("level-annotated variables do not belong to IKP")
    elif isinstance(t, Comp):
        _check_term(t.bound, theory)
        check_language(t.body, theory)


def check_language(f, theory: Theory) -> None:
    """Raise :class:`TheoryMismatch` if ``f`` uses a construct foreign to ``theory``."""
    for g in subformulas(f):
        for t in _atom_terms(g):
            _check_term(t, theory)
        if isinstance(g, Quant):
            if g.kind == "sub" and theory is not Theory.IKP_P:
                raise TheoryMismatch(f"subset-bounded quantifiers are not available in {theory.label}")
            if g.kind == "exp" and theory is not Theory.IKP_E:
                raise TheoryMismatch(f"function-space quantifiers are not available in {theory.label}")
            for t in g.bounds:
                _check_term(t, theory)
