"""Independent reference computations used to freeze expected values.

None of these share logic with the package under test.

* :func:`cnf` / :func:`cnf_cmp` compare ordinals below epsilon_0 through a
  plain Cantor normal form (nested tuples of exponents), so the comparison
  comes from tuple order.
* :func:`fs_eval` evaluates formulas over nested ``frozenset`` values
  after unfolding every abbreviation, using membership as the only
  primitive.
* :func:`closure_members` generates the closure stage indexed by ``alpha``
  bottom-up from 0 and W, to a bounded depth.
"""

from __future__ import annotations

import itertools

from ordforge.collapse import psi
from ordforge.errors import OrdforgeError
from ordforge.ordinals import OMEGA_TERM, ONE, W, ZERO, Psi, Veblen, add, veblen
from ordforge.syntax.ast import And, Comp, Imp, Mem, Not, Or, Quant, Stage, Var, expand


# -- Cantor normal form below epsilon_0 -----------------------------------------------------

def cnf(x):
    """Nested-tuple Cantor normal form of a notation below epsilon_0: the
    tuple of exponents in the order written, each itself in this form.
    Returns ``None`` if ``x`` is not below epsilon_0."""
    out = []
    for h in x.terms:
        if not isinstance(h, Veblen) or h.a is not ZERO:
            return None
        e = cnf(h.b)
        if e is None:
            return None
        out.append(e)
    return tuple(out)


def cnf_cmp(a: tuple, b: tuple) -> int:
    """Compare two Cantor normal forms: exponentwise from the left, a proper
    prefix being smaller."""
    for x, y in zip(a, b):
        c = cnf_cmp(x, y)
        if c:
            return c
    return (len(a) > len(b)) - (len(a) < len(b))


# -- frozenset semantics ----------------------------------------------------------------------

def fs_pair(x, y) -> frozenset:
    return frozenset({frozenset({x, y}), frozenset({x})})


def fs_stage(n: int) -> frozenset:
    level = frozenset()
    for _ in range(n):
        items = list(level)
        level = frozenset(
            frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r))
    return level


def _fs_term(t, env):
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Stage):
        return fs_stage(len(t.level.terms))
    if isinstance(t, Comp):
        bound = _fs_term(t.bound, env)
        return frozenset(x for x in bound if _fs(t.body, {**env, t.var: x}))
    raise TypeError(t)


def _fs_functions(a, b):
    dom = list(a)
    for values in itertools.product(list(b), repeat=len(dom)):
        yield frozenset(fs_pair(x, y) for x, y in zip(dom, values))


def _fs_subsets(a):
    items = list(a)
    for r in range(len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


def _fs(f, env) -> bool:
    if isinstance(f, Mem):
        return _fs_term(f.left, env) in _fs_term(f.right, env)
    if isinstance(f, Not):
        return not _fs(f.body, env)
    if isinstance(f, And):
        return _fs(f.left, env) and _fs(f.right, env)
    if isinstance(f, Or):
        return _fs(f.left, env) or _fs(f.right, env)
    if isinstance(f, Imp):
        return (not _fs(f.left, env)) or _fs(f.right, env)
    if isinstance(f, Quant):
        if f.kind == "in":
            dom = _fs_term(f.bounds[0], env)
        elif f.kind == "sub":
            dom = _fs_subsets(_fs_term(f.bounds[0], env))
        elif f.kind == "exp":
            dom = _fs_functions(_fs_term(f.bounds[0], env), _fs_term(f.bounds[1], env))
        else:
            raise ValueError("unbounded quantifier")
        test = all if f.q == "all" else any
        return test(_fs(f.body, {**env, f.var: x}) for x in dom)
    raise TypeError(f)


def fs_eval(f, env: dict) -> bool:
    """Truth of ``f`` with abbreviations unfolded, over frozenset values."""
    return _fs(expand(f), env)


def fs_from_hf(x) -> frozenset:
    return frozenset(fs_from_hf(m) for m in x.members)


# -- bottom-up closure ---------------------------------------------------------------------

def closure_members(alpha, rounds: int = 2, cap: int = 400) -> set:
    """Members of the closure stage indexed by ``alpha`` reachable from 0 and W
    within ``rounds`` rounds of sums, Veblen values and admissible collapses.
    Each round combines at most ``cap`` of the smallest members found so far."""
    found = {ZERO, W, ONE}
    for _ in range(rounds):
        pool = sorted(found, key=lambda x: (_size(x), repr(x)))[:cap]
        new = set()
        for a in pool:
            if a < alpha:
                try:
                    new.add(psi(a))
                except OrdforgeError:
                    pass
            for b in pool:
                new.add(add(a, b))
                try:
                    new.add(veblen(a, b))
                except OrdforgeError:
                    pass
        found |= new
    return found


def _size(x) -> int:
    n = 0
    for h in x.terms:
        if h is OMEGA_TERM:
            n += 1
        elif isinstance(h, Veblen):
            n += 1 + _size(h.a) + _size(h.b)
        elif isinstance(h, Psi):
            n += 1 + _size(h.arg)
    return n
