"""Finite sequent calculi for IKP, IKP(P) and IKP(E): derivation trees,
axiom schemas, the checking kernel and the proof file format."""

from .axioms import INFINITY_SENTENCE, axiom_formula, axiom_instantiate, match_axiom
from .checker import (
    CheckReport, canonicalize, check, check_node, quantifier_data, rule_principal,
)
from .derivation import (
    ARITY, AXIOMS, EIGEN_RULES, RULES, Derivation, axioms_for, iter_nodes, node_at, path_str,
    rules_for,
)
from .proofio import dump_proof, load_proof, parse_proof, print_proof

__all__ = [
    "INFINITY_SENTENCE", "axiom_formula", "axiom_instantiate", "match_axiom", "CheckReport",
    "canonicalize", "check", "check_node", "quantifier_data", "rule_principal", "ARITY", "AXIOMS", "EIGEN_RULES",
    "RULES", "Derivation", "axioms_for", "iter_nodes", "node_at", "path_str", "rules_for",
    "dump_proof", "load_proof", "parse_proof", "print_proof",
]
