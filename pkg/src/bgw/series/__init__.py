"""Formal 1/X series, gamma envelope, polynomiality data and W-series."""

from .core import (
    AsymptoticSeries,
    RationalPolynomial,
    interpolate,
    inverse_pochhammer_series,
    rational_series,
    solve_shift,
)
from .gamma import gamma_exact, gamma_series
from .polynomiality import (
    MultiplicityPolynomial,
    c_poly,
    chat_poly,
    chat_series,
    conjectured_w_leading,
    p_lambda,
    w_lambda,
)
from .subexp import l_closed, l_series, subexp_b_series
from .twopoint import a_j_poly, chat_k_ed, recwd_rhs, w_d_closed, w_truncated, wd_difference_rhs

__all__ = [
    "AsymptoticSeries",
    "RationalPolynomial",
    "MultiplicityPolynomial",
    "interpolate",
    "inverse_pochhammer_series",
    "rational_series",
    "solve_shift",
    "gamma_series",
    "gamma_exact",
    "p_lambda",
    "chat_series",
    "w_lambda",
    "chat_poly",
    "c_poly",
    "conjectured_w_leading",
    "a_j_poly",
    "w_d_closed",
    "chat_k_ed",
    "w_truncated",
    "wd_difference_rhs",
    "recwd_rhs",
    "subexp_b_series",
    "l_series",
    "l_closed",
]
