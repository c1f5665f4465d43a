"""Words, agreeing families, shifting, extremal bounds and family search."""

from .bounds import (
    GOLDEN,
    ft_ternary_bound,
    golden_ratio_bound,
    log_ft_ternary_bound,
    log_golden_ratio_bound,
    log_simplified_ternary_bound,
    simplified_ternary_bound,
)
from .io import dumps_family, loads_family, read_family, write_family
from .search import SearchOutcome, bound_report, max_agreeing_family
from .shifting import is_upward_closed, monotonize, shift_coordinate
from .words import (
    Family,
    LowAgreementTuple,
    Word,
    agreement,
    find_low_agreement_tuple,
    is_k_wise_t_agreeing,
    is_k_wise_t_intersecting,
)

__all__ = [
    "GOLDEN",
    "Family",
    "LowAgreementTuple",
    "SearchOutcome",
    "Word",
    "agreement",
    "bound_report",
    "dumps_family",
    "find_low_agreement_tuple",
    "ft_ternary_bound",
    "golden_ratio_bound",
    "is_k_wise_t_agreeing",
    "is_k_wise_t_intersecting",
    "is_upward_closed",
    "loads_family",
    "log_ft_ternary_bound",
    "log_golden_ratio_bound",
    "log_simplified_ternary_bound",
    "max_agreeing_family",
    "monotonize",
    "read_family",
    "shift_coordinate",
    "simplified_ternary_bound",
    "write_family",
]
