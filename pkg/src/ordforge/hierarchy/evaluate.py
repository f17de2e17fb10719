"""Truth of bounded formulas over hereditarily finite sets.

:func:`eval_bounded` evaluates a formula all of whose quantifiers are
bounded.  Membership-bounded quantifiers range over the members of the
bound, subset-bounded quantifiers over all its subsets, and function-space
quantifiers ``exp(a, b)`` over every function from ``a`` to ``b`` coded as
a set of Kuratowski pairs.  Stage terms ``L(n)``, ``V(n)`` and ``E(n)``
denote stage ``n`` for finite ``n``.  A separation term
``{x in t | F}`` denotes the members of ``t`` satisfying ``F``.

An assignment maps free-variable names to :class:`HFSet` values.  Indexed
variables ``var(i, n)`` are looked up under the key ``(i, n)``, and their
values must lie in stage ``n + 1``.

:func:`sat_stage` decides whether a Sigma sentence holds in stage ``n`` by
bounding its unbounded quantifiers with the stage term and evaluating the
result.
"""

from __future__ import annotations

import itertools
from typing import Mapping

from ..errors import AssignmentError, ClassViolation, StageCapExceeded, TheoryMismatch
from ..ordinals import finite_value, nat
from ..syntax.ast import (
    And, Comp, Eq, Fun, Imp, IVar, Mem, Not, Or, Quant, Stage, Sub, Theory, Var,
    check_language, free_vars,
)
from ..syntax.classes import is_delta0, is_sigma, relativize
from .hfset import HFSet, kuratowski_pair
from .stages import stage_cap, stage_set

__all__ = [
    "eval_bounded", "eval_term", "sat_stage", "unpair", "is_function", "functions", "STAGE_KIND",
]

#: the hierarchy each theory is interpreted in
STAGE_KIND = {Theory.IKP: "L", Theory.IKP_P: "V", Theory.IKP_E: "E"}


def unpair(p: HFSet):
    """``(x0, x1)`` if ``p`` is the Kuratowski pair of ``x0`` and ``x1``,
    otherwise ``None``."""
    ms = p.members
    if len(ms) == 1:
        inner = ms[0].members
        return (inner[0], inner[0]) if len(inner) == 1 else None
    if len(ms) != 2:
        return None
    a, b = ms
    if len(a) == 2:
        a, b = b, a
    if len(a) != 1 or len(b) != 2:
        return None
    x0 = a.members[0]
    if x0 not in b:
        return None
    x1 = next(m for m in b.members if m != x0)
    return x0, x1


def is_function(g: HFSet, a: HFSet, b: HFSet) -> bool:
    """``g`` is a function from ``a`` to ``b``: a set of pairs with first
    components in ``a`` and second components in ``b``, relating every member
    of ``a`` to exactly one member of ``b``."""
    image = {}
    for p in g.members:
        xy = unpair(p)
        if xy is None or xy[0] not in a or xy[1] not in b:
            return False
        if image.setdefault(xy[0], xy[1]) != xy[1]:
            return False
    return len(image) == len(a)


def functions(a: HFSet, b: HFSet):
    """Every function from ``a`` to ``b``."""
    dom = a.members
    for values in itertools.product(b.members, repeat=len(dom)):
        yield HFSet.of(kuratowski_pair(x, y) for x, y in zip(dom, values))


class _Eval:
    def __init__(self, cap: int):
        self.cap = cap

    def term(self, t, env: dict) -> HFSet:
        if isinstance(t, Var):
            try:
                return env[t.name]
            except KeyError:
                raise AssignmentError(f"no value for the free variable {t.name}") from None
        if isinstance(t, Stage):
            n = finite_value(t.level)
            if n is None:
                raise StageCapExceeded(f"stage {t.kind}({t.level}) is not finite")
            return stage_set(n, self.cap)
        if isinstance(t, IVar):
            n = finite_value(t.level)
            key = (t.index, n)
            if n is None or key not in env:
                raise AssignmentError(f"no value for the indexed variable var({t.index},{t.level})")
            return env[key]
        if isinstance(t, Comp):
            bound = self.term(t.bound, env)
            keep = []
            for x in bound.members:
                inner = dict(env)
                inner[t.var] = x
                if self.formula(t.body, inner):
                    keep.append(x)
            return HFSet.of(keep)
        raise TypeError(f"not a term: {t!r}")

    def formula(self, f, env: dict) -> bool:
        if isinstance(f, Mem):
            return self.term(f.left, env) in self.term(f.right, env)
        if isinstance(f, Eq):
            return self.term(f.left, env) == self.term(f.right, env)
        if isinstance(f, Sub):
            return self.term(f.left, env).issubset(self.term(f.right, env))
        if isinstance(f, Fun):
            return is_function(*(self.term(t, env) for t in (f.graph, f.dom, f.cod)))
        if isinstance(f, Not):
            return not self.formula(f.body, env)
        if isinstance(f, And):
            return self.formula(f.left, env) and self.formula(f.right, env)
        if isinstance(f, Or):
            return self.formula(f.left, env) or self.formula(f.right, env)
        if isinstance(f, Imp):
            return (not self.formula(f.left, env)) or self.formula(f.right, env)
        if isinstance(f, Quant):
            return self.quant(f, env)
        raise TypeError(f"not a formula: {f!r}")

    def quant(self, f: Quant, env: dict) -> bool:
        if f.kind == "U":
            raise ClassViolation(f"unbounded quantifier over {f.var} cannot be evaluated")
        if f.kind == "in":
            domain = self.term(f.bounds[0], env).members
        elif f.kind == "sub":
            domain = self.term(f.bounds[0], env).subsets()
        else:
            domain = functions(self.term(f.bounds[0], env), self.term(f.bounds[1], env))

        def holds(x):
            inner = dict(env)
            inner[f.var] = x
            return self.formula(f.body, inner)

        if f.q == "all":
            return all(holds(x) for x in domain)
        return any(holds(x) for x in domain)


def _env(v: Mapping | None, cap: int) -> dict:
    env = {}
    for key, value in (v or {}).items():
        if not isinstance(value, HFSet):
            raise AssignmentError(f"value of {key!r} is not a hereditarily finite set")
        if isinstance(key, tuple):
            i, level = key
            n = level if isinstance(level, int) else finite_value(level)
            if n is None:
                raise AssignmentError(f"indexed variable {key!r} needs a finite level")
            if value.rank > n:
                raise AssignmentError(
                    f"value {value} of var({i},{n}) is not in stage {n + 1}")
            env[(i, n)] = value
        else:
            env[key] = value
    return env


def eval_bounded(f, v: Mapping | None = None, theory: Theory | str = Theory.IKP,
                 cap: int | None = None) -> bool:
    """Truth value of the bounded formula ``f`` under the assignment ``v``.

    Raises :class:`ClassViolation` if ``f`` has an unbounded quantifier or a
    bounded quantifier the theory does not have, :class:`AssignmentError` if
    a free variable has no value, and :class:`StageCapExceeded` if a stage
    term lies beyond the cap."""
    theory = Theory.parse(theory)
    try:
        check_language(f, theory)
    except TheoryMismatch as e:
        raise ClassViolation(str(e)) from None
    if not is_delta0(f):
        raise ClassViolation(f"not a Delta0 formula of {theory.label}")
    limit = stage_cap(cap)
    env = _env(v, limit)
    missing = sorted(x for x in free_vars(f) if x not in env)
    if missing:
        raise AssignmentError(f"no value for the free variable(s) {', '.join(missing)}")
    return _Eval(limit).formula(f, env)


def eval_term(t, v: Mapping | None = None, cap: int | None = None) -> HFSet:
    """The value of a term under ``v``."""
    limit = stage_cap(cap)
    return _Eval(limit).term(t, _env(v, limit))


def sat_stage(a, n: int, theory: Theory | str = Theory.IKP, cap: int | None = None) -> bool:
    """Whether the Sigma sentence ``a`` holds in stage ``n`` of the theory's
    hierarchy."""
    theory = Theory.parse(theory)
    if free_vars(a):
        raise ClassViolation(f"not a sentence: free variables {sorted(free_vars(a))}")
    if not is_sigma(a):
        raise ClassViolation(f"not a Sigma sentence of {theory.label}")
    limit = stage_cap(cap)
    if n > limit:
        raise StageCapExceeded(f"stage {n} is beyond the cap {limit}")
    return eval_bounded(relativize(a, Stage(STAGE_KIND[theory], nat(n))), None, theory, limit)
