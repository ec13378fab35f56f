"""Exact computation of two-parameter Tevelev degrees by several independent routes."""

from tevelev.core import (
    IntegralityError,
    TevParams,
    binom,
    catalan,
    e_entry,
    exact_div,
    is_valid,
)
from tevelev.recursion import MemoTable, tev_recursive
from tevelev.closed_form import tev_closed, tev_nonneg_ell
from tevelev.lattice_paths import (
    EnumerationGuardError,
    LatticePath,
    PathStats,
    count_paths_by_index,
    d_count,
    enumerate_paths,
    path_stats,
    tev_via_paths,
)
from tevelev.coefficients import Expansion, c_coeff, d_closed_axis, expand, t_ell1_j1
from tevelev.verify import CheckReport, GridSpec, cross_check

__all__ = [
    "CheckReport",
    "EnumerationGuardError",
    "Expansion",
    "GridSpec",
    "IntegralityError",
    "LatticePath",
    "MemoTable",
    "PathStats",
    "TevParams",
    "binom",
    "c_coeff",
    "catalan",
    "count_paths_by_index",
    "cross_check",
    "d_closed_axis",
    "d_count",
    "e_entry",
    "enumerate_paths",
    "exact_div",
    "expand",
    "is_valid",
    "path_stats",
    "t_ell1_j1",
    "tev_closed",
    "tev_nonneg_ell",
    "tev_recursive",
    "tev_via_paths",
]

__version__ = "0.1.0"
