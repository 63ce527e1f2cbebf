"""User surface: rendering, tables, checks, persistence and the CLI."""

from .cache import CacheError, cache_load, cache_save
from .checks import (
    CheckReport,
    check_band,
    check_bounds,
    check_cross,
    check_integrality,
    check_interval_stats,
    check_monotone,
    check_nesting,
    check_subexp,
    check_subexp_closed,
    interval_csv,
)
from .numeric import numeric
from .tables import cli_table, kappa_table

__all__ = [
    "CacheError",
    "CheckReport",
    "cache_load",
    "cache_save",
    "check_band",
    "check_bounds",
    "check_cross",
    "check_integrality",
    "check_interval_stats",
    "check_monotone",
    "check_nesting",
    "check_subexp",
    "check_subexp_closed",
    "cli_table",
    "interval_csv",
    "kappa_table",
    "numeric",
]
