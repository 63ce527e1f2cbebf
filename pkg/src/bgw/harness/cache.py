"""Plain-text persistence of a BgwTable.

    # bgw-cache v1 xmax=<X_max>
    B 0 1/8
    B 0,0 1/8
    ...
    B 1 9/128

Records are sorted by X, then by the partition order of the nonzero entries,
then by the number of zeros, so save -> load -> save is byte-identical.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from ..dvv import B_ZERO, BgwTable
from ..partitions import canonical, parse, render, x_of

FORMAT_VERSION = 1
_HEADER = re.compile(r"^# bgw-cache v(\d+) xmax=(\d+)$")
_RECORD = re.compile(r"^B (\d+(?:,\d+)*) (-?\d+)/(\d+)$")


class CacheError(ValueError):
    """The cache file is malformed or inconsistent."""


def _record_key(d: tuple[int, ...]) -> tuple:
    nonzero = tuple(v for v in d if v)
    return (x_of(d), len(nonzero), nonzero, len(d))


def dumps(table: BgwTable) -> str:
    lines = [f"# bgw-cache v{FORMAT_VERSION} xmax={table.x_max}"]
    for key, val in sorted(table.items(), key=lambda kv: _record_key(kv[0])):
        lines.append(f"B {render(key)} {val.numerator}/{val.denominator}")
    return "\n".join(lines) + "\n"


def loads(text: str, table: BgwTable | None = None) -> BgwTable:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CacheError("empty cache file")
    m = _HEADER.match(lines[0])
    if not m:
        raise CacheError(f"bad header {lines[0]!r}")
    if int(m.group(1)) != FORMAT_VERSION:
        raise CacheError(f"cache version {m.group(1)} != {FORMAT_VERSION}")
    table = table if table is not None else BgwTable()
    for lineno, line in enumerate(lines[1:], start=2):
        r = _RECORD.match(line)
        if not r:
            raise CacheError(f"line {lineno}: malformed record {line!r}")
        key = parse(r.group(1))
        if key != canonical(key):
            raise CacheError(f"line {lineno}: indices not sorted")
        num, den = int(r.group(2)), int(r.group(3))
        if den == 0:
            raise CacheError(f"line {lineno}: zero denominator")
        val = Fraction(num, den)
        if val.numerator != num or val.denominator != den:
            raise CacheError(f"line {lineno}: fraction {num}/{den} is not reduced")
        if key == (0,) and val != B_ZERO:
            raise CacheError(f"line {lineno}: B(0) must be 1/8")
        try:
            table.insert(key, val)
        except RuntimeError as exc:
            raise CacheError(f"line {lineno}: {exc}") from exc
    table.x_max = max(table.x_max, int(m.group(2)))
    return table


def cache_save(table: BgwTable, path) -> None:
    Path(path).write_text(dumps(table), encoding="utf-8", newline="\n")


def cache_load(path, table: BgwTable | None = None) -> BgwTable:
    return loads(Path(path).read_text(encoding="utf-8"), table)
