"""Formula languages of the three set theories and of their infinitary
counterparts."""

from .ast import (
    And, Comp, Eq, Fun, Imp, IVar, Mem, Not, Or, Quant, Sequent, Stage, Sub, Theory, Var,
    all_, alpha_eq, alpha_key, ball, bex, check_language, conj, eall, eex, ex_, expand,
    free_vars, fresh_name, fun_expand, is_pair, rename_bound, sall, sex, subformulas,
    subst, subst_term, term_free_vars, terms_in,
)
from .classes import (
    Classification, classify, is_delta0, is_pi, is_sigma, is_strict_sigma, relativize,
)
from .parser import parse_formula, parse_term, print_formula, print_term
from .ranks import (
    k_of, level, mbound, norm_no, norm_no_sequent, rank, rank_irs, rank_irse, rank_irsp,
    term_slots,
)

__all__ = [
    "And", "Comp", "Eq", "Fun", "Imp", "IVar", "Mem", "Not", "Or", "Quant", "Sequent",
    "Stage", "Sub", "Theory", "Var", "all_", "alpha_eq", "alpha_key", "ball", "bex",
    "check_language", "conj", "eall", "eex", "ex_", "expand", "free_vars", "fresh_name",
    "fun_expand", "is_pair", "rename_bound", "sall", "sex", "subformulas", "subst",
    "subst_term", "term_free_vars", "terms_in", "Classification", "classify", "is_delta0",
    "is_pi", "is_sigma", "is_strict_sigma", "relativize", "parse_formula", "parse_term",
    "print_formula", "print_term", "k_of", "level", "mbound", "norm_no", "norm_no_sequent",
    "rank", "rank_irs", "rank_irse", "rank_irsp", "term_slots",
]
