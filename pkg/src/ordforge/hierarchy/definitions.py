"""The three hierarchies built literally from their definitions.

These constructions work on nested ``frozenset`` values and share no code
with :mod:`ordforge.hierarchy.stages`, which relies on the three
hierarchies agreeing at finite stages.  They serve as the cross-check for
that coincidence.  The Boolean closure makes ``l_stage`` and ``e_stage``
practical only up to index 3; ``v_stage`` reaches index 4.

* ``V``: ``V_0 = {}`` and ``V_(n+1)`` is the powerset of ``V_n``.
* ``L``: ``L_0 = {}`` and ``L_(n+1)`` is the family of subsets of ``L_n``
  definable over ``(L_n, in)`` with parameters.  The definable family is
  computed as the closure of the atomic definable sets ``{x | x in p}``,
  ``{x | p in x}`` and ``{x | x = p}`` under complement, intersection and
  union.  Equality is evaluated through its bounded unfolding inside the
  structure, not through Python equality.
* ``E``: ``E_0 = {}``, ``E_1 = {{}}``, and ``E_(n+2)`` is the family of
  subsets of ``E_(n+1)`` definable over ``(E_(n+1), in)`` with parameters,
  together with every function ``f : a -> b`` for ``a, b`` in ``E_n``.  Pairs
  are Kuratowski pairs ``(x0, x1) = {{x0, x1}, {x0}}``.
"""

from __future__ import annotations

import itertools

from .hfset import HFSet

__all__ = ["l_stage", "v_stage", "e_stage", "definable_subsets", "functions_between", "to_hfset"]

_EMPTY = frozenset()


def v_stage(n: int) -> frozenset:
    level = _EMPTY
    for _ in range(n):
        items = sorted(level, key=_key)
        level = frozenset(
            frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r))
    return level


def _equal_in(M: frozenset, x, p) -> bool:
    """``x = p`` evaluated as ``(all y in x)(y in p) & (all y in p)(y in x)``
    with ``y`` ranging over the structure ``M``."""
    return all((y not in x) or (y in p) for y in M) and all((y not in p) or (y in x) for y in M)


def definable_subsets(M: frozenset) -> frozenset:
    """Subsets of ``M`` definable over ``(M, in)`` with parameters, as the
    Boolean closure of the atomic definable sets."""
    atoms = set()
    for p in M:
        atoms.add(frozenset(x for x in M if x in p))
        atoms.add(frozenset(x for x in M if p in x))
        atoms.add(frozenset(x for x in M if _equal_in(M, x, p)))
    family = {frozenset(), frozenset(M)} | atoms
    family |= {frozenset(M - a) for a in atoms}
    while True:
        new = set(family)
        items = list(family)
        for a, b in itertools.combinations(items, 2):
            new.add(a & b)
            new.add(a | b)
        new |= {frozenset(M - a) for a in items}
        if new == family:
            return frozenset(family)
        family = new


def l_stage(n: int) -> frozenset:
    level = _EMPTY
    for _ in range(n):
        level = definable_subsets(level)
    return level


def _pair(x0, x1) -> frozenset:
    return frozenset({frozenset({x0, x1}), frozenset({x0})})


def functions_between(a: frozenset, b: frozenset) -> frozenset:
    """Every function from ``a`` to ``b`` as a set of Kuratowski pairs."""
    dom = sorted(a, key=_key)
    cod = sorted(b, key=_key)
    out = set()
    for values in itertools.product(cod, repeat=len(dom)):
        out.add(frozenset(_pair(x, y) for x, y in zip(dom, values)))
    return frozenset(out)


def e_stage(n: int) -> frozenset:
    levels = [_EMPTY, frozenset({_EMPTY})]
    while len(levels) <= n:
        k = len(levels)
        prev, base = levels[k - 1], levels[k - 2]
        new = set(definable_subsets(prev))
        for a in base:
            for b in base:
                new |= functions_between(a, b)
        levels.append(frozenset(new))
    return levels[n]


def _key(x: frozenset):
    return to_hfset(x).code


def to_hfset(x: frozenset) -> HFSet:
    return HFSet.of(to_hfset(m) for m in x)
