"""Per-genus tables of normalized numbers with a common denominator."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..dvv import compute_C
from ..exactnum import DomainError
from ..kappa import c_kappa, kappa_entries
from ..partitions import enumerate_partitions, render
from .numeric import numeric


@dataclass
class TableRow:
    label: str
    value: Fraction
    decimal: str
    scaled: int


@dataclass
class GenusTable:
    g: int
    denominator: int
    rows: list[TableRow]

    def render(self) -> str:
        width = max(len(r.label) for r in self.rows)
        out = [f"g={self.g}  D={self.denominator}"]
        for r in self.rows:
            out.append(f"{r.label:<{width}}  {str(r.value):>28}  {r.decimal}  {r.scaled}")
        return "\n".join(out)

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "D": self.denominator,
            "rows": [{"label": r.label, "value": str(r.value), "decimal": r.decimal, "DC": r.scaled} for r in self.rows],
        }


def _build(g: int, labelled: list[tuple[str, Fraction]], digits: int) -> GenusTable:
    den = 1
    for _, v in labelled:
        den = lcm(den, v.denominator)
    rows = []
    for label, v in labelled:
        scaled = v * den
        assert scaled.denominator == 1
        rows.append(TableRow(label, v, numeric(v, digits), int(scaled)))
    return GenusTable(g, den, rows)


def cli_table(g: int, digits: int = 6) -> GenusTable:
    """C(d) for the partitions of g-1 in the partition order, with D_g = lcm of denominators."""
    if g < 2:
        raise DomainError("tables start at g = 2")
    labelled = [(f"C({render(d)})", compute_C(d)) for d in enumerate_partitions(g - 1)]
    return _build(g, labelled, digits)


def kappa_table(g: int, digits: int = 6) -> GenusTable:
    """C(m; d) for m >= 2 and m + |d| = g - 1."""
    if g < 3:
        raise DomainError("kappa tables start at g = 3")
    labelled = []
    for m, d in kappa_entries(g, 2):
        label = f"C({m};{render(d) if d else '-'})"
        labelled.append((label, c_kappa(m, d)))
    return _build(g, labelled, digits)
