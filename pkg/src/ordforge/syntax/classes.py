"""Syntactic formula classes and relativisation of unbounded quantifiers.

The classes are the usual inductive ones, read literally.

* Delta0: no unbounded quantifier.  Subset- and function-space-bounded
  quantifiers count as bounded.
* Sigma / Pi (defined together): every Delta0 formula is in both classes.
  Both are closed under ``&``, ``|`` and every bounded quantifier.  Sigma is
  also closed under ``ex x``, and Pi under ``all x``.  ``A -> B`` and ``~A``
  are Sigma when ``A`` is Pi and ``B`` is Sigma, and dually for Pi.
* strict Sigma: Delta0 formulas closed under ``&``, ``|``, bounded
  quantifiers and ``ex x``.

The abbreviations ``=``, ``sub`` and ``fun`` unfold to bounded formulas, so
they are treated as Delta0 atoms.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .ast import (
    ATOMS, And, Imp, Not, Or, Quant, Theory, Var, all_names, free_vars, fresh_name,
    subst, term_free_vars,
)

__all__ = ["Classification", "classify", "is_delta0", "is_sigma", "is_pi",
           "is_strict_sigma", "relativize"]


@dataclass(frozen=True)
class Classification:
    delta0: bool
    sigma: bool
    pi: bool
    strict_sigma: bool

    # camel-case aliases of the class flags
    @property
    def isDelta0(self) -> bool:  # noqa: N802
        return self.delta0

    @property
    def isSigma(self) -> bool:  # noqa: N802
        return self.sigma

    @property
    def isPi(self) -> bool:  # noqa: N802
        return self.pi

    @property
    def isStrictSigma(self) -> bool:  # noqa: N802
        return self.strict_sigma


@functools.lru_cache(maxsize=100_000)
def is_delta0(f) -> bool:
    if isinstance(f, ATOMS):
        return True
    if isinstance(f, Not):
        return is_delta0(f.body)
    if isinstance(f, (And, Or, Imp)):
        return is_delta0(f.left) and is_delta0(f.right)
    if isinstance(f, Quant):
        return f.bounded and is_delta0(f.body)
    raise TypeError(f"not a formula: {f!r}")


@functools.lru_cache(maxsize=100_000)
def _sp(f) -> tuple:
    """(is Sigma, is Pi)."""
    if is_delta0(f):
        return True, True
    if isinstance(f, (And, Or)):
        ls, lp = _sp(f.left)
        rs, rp = _sp(f.right)
        return ls and rs, lp and rp
    if isinstance(f, Imp):
        ls, lp = _sp(f.left)
        rs, rp = _sp(f.right)
        return lp and rs, ls and rp
    if isinstance(f, Not):
        s, p = _sp(f.body)
        return p, s
    if isinstance(f, Quant):
        s, p = _sp(f.body)
        if f.bounded:
            return s, p
        if f.q == "ex":
            return s, False
        return False, p
    raise TypeError(f"not a formula: {f!r}")


@functools.lru_cache(maxsize=100_000)
def is_strict_sigma(f) -> bool:
    if is_delta0(f):
        return True
    if isinstance(f, (And, Or)):
        return is_strict_sigma(f.left) and is_strict_sigma(f.right)
    if isinstance(f, Quant):
        if f.bounded or f.q == "ex":
            return is_strict_sigma(f.body)
    return False


def is_sigma(f) -> bool:
    return _sp(f)[0]


def is_pi(f) -> bool:
    return _sp(f)[1]


def classify(f, theory: Theory | str = Theory.IKP) -> Classification:
    """Class memberships of ``f``.  The bounded quantifier repertoire is fixed
    by the formula itself, since subset- and function-space-bounded
    quantifiers can only be written in the theory that has them."""
    s, p = _sp(f)
    return Classification(is_delta0(f), s, p, is_strict_sigma(f))


def relativize(f, z):
    """Bound every unbounded quantifier of ``f`` by the term ``z``.

    Any binder (bounded or not) that would capture a free variable of ``z``
    in a rewritten quantifier below it is renamed first.
    """
    zfree = term_free_vars(z)
    return _rel(f, z, zfree)


def _rel(f, z, zfree):
    if is_delta0(f):
        return f
    if isinstance(f, Not):
        return Not(_rel(f.body, z, zfree))
    if isinstance(f, (And, Or, Imp)):
        return type(f)(_rel(f.left, z, zfree), _rel(f.right, z, zfree))
    if isinstance(f, Quant):
        var, body = f.var, f.body
        if var in zfree:
            var2 = fresh_name(var, all_names(body) | zfree)
            body = subst(body, var, Var(var2))
            var = var2
        body = _rel(body, z, zfree)
        if f.kind == "U":
            return Quant(f.q, "in", var, (z,), body)
        return Quant(f.q, f.kind, var, f.bounds, body)
    raise TypeError(f"not a formula: {f!r}")
