"""Exact BGW numbers: the recursion, resolvent formulas, series, Painleve and kappa data."""

from .dvv import BgwTable, bracket, compute_B, compute_C, f_bound, string_reduce, theta
from .exactnum import DomainError, PiMultiple, PrecisionError
from .kappa import c_kappa, kappa_number, sw_volume
from .painleve import m_poly, p34_solve, v_dn_seq, y_dn_seq, y_g_seq
from .partitions import enumerate_partitions, order_cmp
from .resolvent import B_npoint, B_window, C_twopoint

__version__ = "0.1.0"

__all__ = [
    "BgwTable",
    "B_npoint",
    "B_window",
    "C_twopoint",
    "DomainError",
    "PiMultiple",
    "PrecisionError",
    "bracket",
    "c_kappa",
    "compute_B",
    "compute_C",
    "enumerate_partitions",
    "f_bound",
    "kappa_number",
    "m_poly",
    "order_cmp",
    "p34_solve",
    "string_reduce",
    "sw_volume",
    "theta",
    "v_dn_seq",
    "y_dn_seq",
    "y_g_seq",
]
