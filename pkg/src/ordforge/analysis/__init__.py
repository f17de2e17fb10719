"""Ordinal bookkeeping of the three ordinal analyses."""

from .bounds import collapse, collapse_shift, partial_ce, predicative_ce, raise_level, reduce_bound
from .embed import (
    AXIOM_BOUNDS, Embedding, NodeAnnotation, choose_m, embed_bounds, embedding, least_big_power,
)
from .infinitary import dot_in, minor_formulas, rank_of
from .pipeline import BoundReport, analyze_sigma, lower_to_omega_plus_one
from .validate import SYSTEM_RULES, Premise, RuleInstance, Verdict, validate_inference

__all__ = [
    "collapse", "collapse_shift", "partial_ce", "predicative_ce", "raise_level", "reduce_bound",
    "AXIOM_BOUNDS", "Embedding", "NodeAnnotation", "choose_m", "embed_bounds", "embedding",
    "least_big_power", "dot_in", "minor_formulas", "rank_of", "BoundReport", "analyze_sigma",
    "lower_to_omega_plus_one", "SYSTEM_RULES", "Premise", "RuleInstance", "Verdict",
    "validate_inference",
]
