"""ordforge: ordinal notations and ordinal bounds for IKP, IKP(P) and IKP(E).

The subpackages are layered.  ``ordinals`` and ``ordtext`` implement the
notation system, ``collapse`` the collapsing function and the controlling
operators, ``syntax`` the formula languages, ``calculus`` the finite proof
checker, ``analysis`` the ordinal bookkeeping from a checked proof down to
a bound, and ``hierarchy`` the finite stages of the constructible, von
Neumann and exponentiation hierarchies.  ``cli`` wraps all of it.

The most used names are re-exported here.
"""

from importlib.metadata import PackageNotFoundError, version

from .analysis import analyze_sigma, embed_bounds, minor_formulas, validate_inference
from .calculus import check, parse_proof, print_proof
from .collapse import H, extend, h_contains, hat, in_B, psi
from .errors import OrdforgeError
from .hierarchy import HFSet, eval_bounded, parse_hfset, sat_stage, stage
from .ordinals import (
    OMEGA, ONE, W, ZERO, Ord, add, compare, nat, nat_sum, omega_pow, omega_tower, veblen,
)
from .ordtext import parse_ord, pretty, to_text
from .syntax import Theory, parse_formula, print_formula, rank

try:
    __version__ = version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"

__all__ = [
    "analyze_sigma", "embed_bounds", "minor_formulas", "validate_inference", "check",
    "parse_proof", "print_proof", "H", "extend", "h_contains", "hat", "in_B", "psi",
    "OrdforgeError", "HFSet", "eval_bounded", "parse_hfset", "sat_stage", "stage", "OMEGA",
    "ONE", "W", "ZERO", "Ord", "add", "compare", "nat", "nat_sum", "omega_pow", "omega_tower",
    "veblen", "parse_ord", "pretty", "to_text", "Theory", "parse_formula", "print_formula",
    "rank", "__version__",
]
