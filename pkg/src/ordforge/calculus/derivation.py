"""Finite derivation trees and the rule vocabulary of the three calculi."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..syntax.ast import Sequent, Theory

__all__ = [
    "Derivation", "AXIOMS", "RULES", "EIGEN_RULES", "ARITY", "rules_for", "axioms_for",
    "iter_nodes", "node_at", "path_str",
]

#: axiom schemas and the theories that have them
AXIOMS = {
    "Logical": frozenset(Theory),
    "Extensionality": frozenset(Theory),
    "Pair": frozenset(Theory),
    "Union": frozenset(Theory),
    "Separation": frozenset(Theory),
    "Collection": frozenset(Theory),
    "SetInduction": frozenset(Theory),
    "Infinity": frozenset(Theory),
    "PowerSet": frozenset({Theory.IKP_P}),
    "Exponentiation": frozenset({Theory.IKP_E}),
}

_BASE_RULES = (
    "andL", "andR", "orL", "orR", "notL", "notR", "bot", "impL", "impR", "cut",
    "ballL", "ballR", "bexL", "bexR", "allL", "allR", "exL", "exR",
)
_P_RULES = ("pballL", "pballR", "pbexL", "pbexR")
_E_RULES = ("eballL", "eballR", "ebexL", "ebexR")

#: inference rules and the theories that have them
RULES = {r: frozenset(Theory) for r in _BASE_RULES}
RULES.update({r: frozenset({Theory.IKP_P}) for r in _P_RULES})
RULES.update({r: frozenset({Theory.IKP_E}) for r in _E_RULES})

#: rules whose instances carry an eigenvariable
EIGEN_RULES = frozenset({"bexL", "exL", "ballR", "allR", "pbexL", "pballR", "ebexL", "eballR"})

#: number of premises per rule
ARITY = {r: 1 for r in RULES}
ARITY.update({"andR": 2, "orL": 2, "impL": 2, "cut": 2})
ARITY.update({a: 0 for a in AXIOMS})


def rules_for(theory: Theory | str) -> frozenset:
    theory = Theory.parse(theory)
    return frozenset(r for r, ts in RULES.items() if theory in ts)


def axioms_for(theory: Theory | str) -> frozenset:
    theory = Theory.parse(theory)
    return frozenset(a for a, ts in AXIOMS.items() if theory in ts)


@dataclass(frozen=True)
class Derivation:
    """A node of a finite proof tree.  ``rule`` is an axiom name or a rule
    tag; ``eigen`` names the eigenvariable for the rules that have one."""

    conclusion: Sequent
    rule: str
    premises: tuple = ()
    eigen: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    @property
    def is_axiom(self) -> bool:
        return self.rule in AXIOMS

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)


def path_str(path: tuple) -> str:
    return "r" + "".join(f".{i}" for i in path)


def iter_nodes(d: Derivation, path: tuple = ()) -> Iterator[tuple]:
    """Pre-order walk yielding ``(path, node)``."""
    yield path, d
    for i, p in enumerate(d.premises):
        yield from iter_nodes(p, path + (i,))


def node_at(d: Derivation, path: tuple) -> Derivation:
    for i in path:
        d = d.premises[i]
    return d
