"""Ordinal arithmetic of cut elimination and collapsing.

These functions only compute the ordinal labels that the cut elimination
and collapsing theorems attach to a derivation.  They do not transform
derivations.
"""

from __future__ import annotations

from ..collapse import H, h_contains, psi
from ..errors import DomainViolation, PreconditionViolated, TheoryMismatch
from ..ordinals import (
    W, Ord, _cmp, _require_normal, add, nat, nat_sum, omega_pow, omega_tower,
    ord_max, veblen,
)
from ..syntax.ast import Theory

__all__ = [
    "reduce_bound", "predicative_ce", "partial_ce", "collapse", "raise_level",
    "collapse_shift",
]


def reduce_bound(alpha: Ord, beta: Ord, theory: Theory | str = Theory.IKP,
                 gamma: Ord | None = None) -> Ord:
    """Length bound after removing one cut of maximal rank by reduction:
    ``alpha # alpha # beta # beta``.  In IKP(E) the derivations of the level
    premises contribute a further ``# gamma``."""
    theory = Theory.parse(theory)
    _require_normal(alpha, beta)
    out = nat_sum(nat_sum(alpha, alpha), nat_sum(beta, beta))
    if gamma is not None:
        if theory is not Theory.IKP_E:
            raise TheoryMismatch("the extra level-premise summand only exists for IKP(E)")
        out = nat_sum(out, gamma)
    return out


def predicative_ce(alpha: Ord, rho: Ord, beta: Ord) -> Ord:
    """Length bound ``phi(beta, alpha)`` after lowering the cut rank from
    ``rho + w^beta`` to ``rho``.  The pivot must not lie in
    ``[rho, rho + w^beta)``."""
    _require_normal(alpha, rho, beta)
    top = add(rho, omega_pow(beta))
    if _cmp(rho, W) <= 0 < _cmp(top, W):
        raise DomainViolation(
            "predicative cut elimination needs the pivot outside [rho, rho + w^beta)")
    return veblen(beta, alpha)


def partial_ce(alpha: Ord, n: int) -> Ord:
    """Length bound ``w_n(alpha)`` after lowering the cut rank from
    ``W + n + 1`` to ``W + 1``."""
    return omega_tower(n, alpha)


def collapse_shift(eta: Ord, alpha: Ord, theory: Theory | str = Theory.IKP) -> Ord:
    """The index of the operator after collapsing.  IKP and IKP(P) shift by
    ``w^(W + alpha)``; IKP(E) shifts by ``w^alpha``."""
    theory = Theory.parse(theory)
    _require_normal(eta, alpha)
    if theory is Theory.IKP_E:
        return add(eta, omega_pow(alpha))
    return add(eta, omega_pow(add(W, alpha)))


def collapse(eta: Ord, alpha: Ord, theory: Theory | str = Theory.IKP) -> tuple:
    """Collapse a derivation of length ``alpha`` and cut rank ``W + 1``
    controlled by ``H_eta``.  Returns the new operator index and the new
    length bound, which is also the new cut rank."""
    _require_normal(eta, alpha)
    if not h_contains(H(eta), eta):
        raise PreconditionViolated("collapsing needs eta to belong to H_eta")
    shifted = collapse_shift(eta, alpha, theory)
    return shifted, psi(shifted)


def raise_level(alpha: Ord, rho: Ord, beta: Ord, gamma: Ord) -> tuple:
    """Move a derived statement ``s in E_gamma`` up to ``s in E_beta``.
    Returns the new ``(length, cut rank)``: ``(alpha + 2, max(rho, beta + 1))``."""
    _require_normal(alpha, rho, beta, gamma)
    if not (_cmp(gamma, beta) <= 0 and _cmp(beta, W) < 0):
        raise PreconditionViolated("raising a hierarchy level needs gamma <= beta < W")
    if gamma == beta:
        return alpha, rho
    return add(alpha, nat(2)), ord_max(rho, add(beta, nat(1)))

