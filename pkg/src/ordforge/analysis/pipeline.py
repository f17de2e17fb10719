"""End-to-end bounds for a derivation of a Sigma sentence.

The chain is: embedding into ``(w^(W+m), W+m)``, lowering the cut rank to
``W+1`` (which gives ``w_{m-1}(w^(W+m))``), collapsing (which gives
``gamma = w_m(w^(W+m))`` and length ``psi(gamma)``), and for IKP a last
predicative cut elimination down to cut rank 0, which gives
``phi(psi(gamma), psi(gamma))``.  IKP(P) and IKP(E) stop after collapsing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..calculus.derivation import Derivation
from ..errors import NotSigmaSentence
from ..ordinals import ONE, W, ZERO, Ord, add, nat, omega_big_pow, omega_tower
from ..ordtext import pretty, to_text
from ..syntax.ast import Theory, free_vars
from ..syntax.classes import is_sigma
from .bounds import collapse, partial_ce, predicative_ce
from .embed import embedding

__all__ = ["BoundReport", "analyze_sigma", "lower_to_omega_plus_one"]


@dataclass(frozen=True)
class BoundReport:
    theory: Theory
    m: int
    embed: tuple
    pre_collapse: tuple
    gamma_or_sigma: Ord
    collapsed: Ord
    final: Ord
    annotations: dict = field(default_factory=dict, compare=False)

    @property
    def final_cutrank(self) -> Ord:
        """Cut rank of the last stage of the chain."""
        return ZERO if self.theory is Theory.IKP else self.collapsed

    def chain(self) -> dict:
        """The chain ordinals by name."""
        return {
            "embed": self.embed[0], "embed_cutrank": self.embed[1],
            "pre_collapse": self.pre_collapse[0], "pre_collapse_cutrank": self.pre_collapse[1],
            "gamma_or_sigma": self.gamma_or_sigma, "collapsed": self.collapsed,
            "final": self.final, "final_cutrank": self.final_cutrank,
        }

    def to_json(self) -> dict:
        def enc(x: Ord) -> dict:
            return {"text": to_text(x), "pretty": pretty(x)}

        nodes = {}
        for path, ann in self.annotations.items():
            nodes[path] = {
                "ordinal": enc(ann.ordinal), "cutrank": enc(ann.cutrank),
                "norm": enc(ann.norm), "operator": str(ann.operator), "source": ann.source,
            }
        return {
            "theory": self.theory.value,
            "m": self.m,
            "chain": {k: enc(v) for k, v in self.chain().items()},
            "nodes": nodes,
        }


def lower_to_omega_plus_one(alpha: Ord, m: int, theory: Theory | str) -> Ord:
    """Length after lowering the cut rank from ``W+m`` to ``W+1``.  For IKP
    this is ``m-1`` rounds of predicative cut elimination with ``beta = 0``;
    the other theories use the partial cut elimination theorem in one step.
    Both give ``w_{m-1}(alpha)``."""
    theory = Theory.parse(theory)
    if theory is Theory.IKP:
        for k in range(m - 1, 0, -1):
            alpha = predicative_ce(alpha, add(W, nat(k)), ZERO)
        return alpha
    return partial_ce(alpha, m - 1)


def analyze_sigma(d: Derivation, theory: Theory | str, beta: Mapping | None = None,
                  var_levels: Mapping | None = None) -> BoundReport:
    theory = Theory.parse(theory)
    c = d.conclusion
    if c.gamma or len(c.delta) != 1:
        raise NotSigmaSentence("the end sequent must have the form => A")
    A = c.delta[0]
    if free_vars(A):
        raise NotSigmaSentence(f"not a sentence: free variables {sorted(free_vars(A))}")
    if not is_sigma(A):
        raise NotSigmaSentence(f"not a Sigma formula of {theory.label}")
    emb = embedding(d, theory, beta, var_levels)
    m = emb.m
    top = omega_big_pow(m)
    pre = lower_to_omega_plus_one(top, m, theory)
    gamma, collapsed = collapse(ZERO, pre, theory)
    expected = omega_tower(m, top)
    assert gamma == expected, "collapse index disagrees with the tower formula"
    if theory is Theory.IKP:
        final = predicative_ce(collapsed, ZERO, collapsed)
    else:
        final = collapsed
    return BoundReport(theory, m, (top, add(W, nat(m))), (pre, add(W, ONE)), gamma,
                       collapsed, final, emb.annotations)
