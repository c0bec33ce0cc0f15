"""Executable versions of the stability statements, Newton identities and the search harness."""
from .checkers import (
    capelli_check,
    check_higher_weight,
    check_odd_even_trinomial,
    check_odoni,
    check_trim_even,
    check_xp_ax2_b,
    parse_higher_weight,
    trim_even_poly,
)
from .newton import (
    SymFuncTable,
    elementary_from_roots,
    newton_e_from_p,
    newton_p_from_e,
    power_sums_from_roots,
    relation_residual,
)
from .outcome import Status, TheoremOutcome
from .search import SearchRecord, candidates, conjecture_search, parse_shape

__all__ = [
    "SearchRecord",
    "Status",
    "SymFuncTable",
    "TheoremOutcome",
    "candidates",
    "capelli_check",
    "check_higher_weight",
    "check_odd_even_trinomial",
    "check_odoni",
    "check_trim_even",
    "check_xp_ax2_b",
    "conjecture_search",
    "elementary_from_roots",
    "newton_e_from_p",
    "newton_p_from_e",
    "parse_higher_weight",
    "parse_shape",
    "power_sums_from_roots",
    "relation_residual",
    "trim_even_poly",
]
