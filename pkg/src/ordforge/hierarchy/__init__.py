"""Finite stages of the set hierarchies and bounded evaluation over them."""

from .definitions import e_stage, l_stage, to_hfset, v_stage
from .evaluate import STAGE_KIND, eval_bounded, eval_term, functions, is_function, sat_stage, unpair
from .hfset import EMPTY, MAX_RANK, HFSet, kuratowski_pair, parse_hfset
from .stages import (
    DEFAULT_CAP, HARD_CAP, LazyStage, stage, stage_cap, stage_set, stage_size, tower,
)

__all__ = [
    "e_stage", "l_stage", "to_hfset", "v_stage", "STAGE_KIND", "eval_bounded", "eval_term",
    "functions", "is_function", "sat_stage", "unpair", "EMPTY", "MAX_RANK", "HFSet",
    "kuratowski_pair", "parse_hfset", "DEFAULT_CAP", "HARD_CAP", "LazyStage", "stage",
    "stage_cap", "stage_set", "stage_size", "tower",
]
