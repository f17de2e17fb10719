"""Collapsing machinery: closure-stage membership, the collapse constructor,
controlled operators and the ``hat`` shift used by the collapsing theorems.

``in_B(alpha, x)`` decides whether ``x`` can be generated from 0 and the
pivot by ``+``, ``phi`` and collapses of arguments below ``alpha``.  The
operator ``H_eta[X]`` is the intersection of all closure stages above
``eta`` that contain ``X``.  The stages grow with their index, so that
intersection is the single least stage, and :class:`ControlledOperator`
stores only ``eta`` and the finite parameter set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import NonNormalPsiArgument
from .ordinals import (
    ONE, W, ZERO, Ord, Psi, Veblen, _cmp, _in_closure, _require_normal, add,
    omega_pow, ord_max,
)

__all__ = [
    "in_B", "psi", "admission_index", "ControlledOperator", "H", "h_contains",
    "extend", "hat",
]


def in_B(alpha: Ord, x: Ord) -> bool:
    """Whether ``x`` lies in the closure stage indexed by ``alpha``."""
    _require_normal(alpha, x)
    return _in_closure(alpha, x)


def psi(a: Ord) -> Ord:
    """Collapse constructor.  The argument must belong to its own stage."""
    _require_normal(a)
    if not _in_closure(a, a):
        raise NonNormalPsiArgument(
            "collapse argument must be generated below itself; it has a nested "
            "collapse whose argument is too large")
    return Ord((Psi(a),))


def _nested_psi_args(x: Ord):
    for h in x.terms:
        if isinstance(h, Psi):
            yield h.arg
            yield from _nested_psi_args(h.arg)
        elif isinstance(h, Veblen):
            yield from _nested_psi_args(h.a)
            yield from _nested_psi_args(h.b)


def admission_index(x: Ord) -> Ord:
    """Least ``alpha`` with ``in_B(alpha, x)``: one more than the largest
    collapse argument occurring anywhere inside ``x`` (zero if none)."""
    _require_normal(x)
    best = ZERO
    for xi in _nested_psi_args(x):
        cand = add(xi, ONE)
        if _cmp(cand, best) > 0:
            best = cand
    return best


@dataclass(frozen=True)
class ControlledOperator:
    """The operator ``H_eta`` extended by a finite parameter set."""

    eta: Ord = ZERO
    params: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        _require_normal(self.eta, *self.params)
        object.__setattr__(self, "params", frozenset(self.params))

    @property
    def stage(self) -> Ord:
        """The least stage index above ``eta`` containing every parameter."""
        return ord_max(add(self.eta, ONE), *(admission_index(p) for p in self.params))

    def __contains__(self, x: Ord) -> bool:
        return h_contains(self, x)

    def contains_all(self, xs: Iterable[Ord]) -> bool:
        st = self.stage
        return all(in_B(st, x) for x in xs)

    def extend(self, xs: Iterable[Ord]) -> "ControlledOperator":
        return extend(self, xs)

    def __str__(self):
        from .ordtext import to_text
        ps = ",".join(sorted(to_text(p) for p in self.params))
        return f"H_{to_text(self.eta)}[{ps}]"


def H(eta: Ord = ZERO, params: Iterable[Ord] = ()) -> ControlledOperator:
    return ControlledOperator(eta, frozenset(params))


def h_contains(op: ControlledOperator, x: Ord) -> bool:
    """Decide ``x in H_eta(params)``."""
    _require_normal(x)
    return _in_closure(op.stage, x)


def extend(op: ControlledOperator, xs: Iterable[Ord]) -> ControlledOperator:
    """Add parameters.  Extending by members already in the operator leaves
    the membership relation unchanged."""
    return ControlledOperator(op.eta, op.params | frozenset(xs))


def hat(eta: Ord, alpha: Ord) -> Ord:
    """``eta + w^(W + alpha)``."""
    return add(eta, omega_pow(add(W, alpha)))
