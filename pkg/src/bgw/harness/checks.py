"""Identity checks (hard) and conjecture checks (reported).

Every check returns a CheckReport.  A report marked hard=True that fails is
an error; a conjecture report only records what it saw.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

import mpmath

from ..dvv import bracket, compute_B, compute_C, f_bound
from ..exactnum import PI_MAX_DIGITS, PrecisionError, in_z_half, inv_pi_bounds, is_power_of_two, odd_double_factorial
from ..partitions import canonical, enumerate_partitions, multiplicities, multisets_with_x, render, x_of
from ..resolvent import B_npoint, B_power, B_window, C_onepoint, C_twopoint, TruncationError
from ..series.gamma import gamma_exact
from ..series.subexp import l_closed, l_series
from ..series.twopoint import w_truncated


@dataclass
class CheckReport:
    name: str
    params: dict
    hard: bool
    total: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    def line(self) -> str:
        kind = "identity" if self.hard else "conjecture"
        status = "PASS" if self.ok else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.name} [{kind}] {args}: {self.passed}/{self.total} ({self.seconds:.2f}s)"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "hard": self.hard,
            "ok": self.ok,
            "total": self.total,
            "passed": self.passed,
            "failures": self.failures,
            "notes": {k: str(v) for k, v in self.notes.items()},
            "seconds": round(self.seconds, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _run(report: CheckReport, items: Sequence, fn: Callable, threads: int = 1) -> CheckReport:
    """Apply fn to each item (fn returns None or a failure string); results kept in item order."""
    t0 = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(fn, items))
    else:
        results = [fn(x) for x in items]
    report.total += len(items)
    report.failures += [r for r in results if r]
    report.seconds += time.perf_counter() - t0
    return report


def _genus_range(g_max: int, g_min: int = 2) -> range:
    return range(g_min, g_max + 1)


def check_nesting(g_max: int = 12, threads: int = 1) -> CheckReport:
    """C(g-1) <= C(d) <= C(1^(g-1)) over partitions of g-1."""
    rep = CheckReport("nesting", {"gmax": g_max}, hard=False)

    def one(g):
        lo, hi = compute_C((g - 1,)), compute_C((1,) * (g - 1))
        bad = [d for d in enumerate_partitions(g - 1) if not lo <= compute_C(d) <= hi]
        return f"g={g}: {[render(d) for d in bad]}" if bad else None

    return _run(rep, list(_genus_range(g_max)), one, threads)


def check_monotone(g_max: int = 12, threads: int = 1) -> CheckReport:
    """C strictly increasing along the partition order for each g."""
    rep = CheckReport("monotone", {"gmax": g_max}, hard=False)

    def one(g):
        parts = enumerate_partitions(g - 1)
        vals = [compute_C(d) for d in parts]
        bad = [(parts[i], parts[i + 1]) for i in range(len(vals) - 1) if not vals[i] < vals[i + 1]]
        return f"g={g}: {[(render(a), render(b)) for a, b in bad]}" if bad else None

    return _run(rep, list(_genus_range(g_max)), one, threads)


def integrality_a(d: Sequence[int]) -> bool:
    """g^delta d_n! prod(2d_j+1)!! / (2d_n+1)!!^3 <tau_d> in Z[1/2], for every choice of d_n.

    delta is 1 for n = 2.  For n = 1 the left side equals 1/(g (2g-1) 2^(3g)),
    so the one-point case is checked with the factor g X = g (2g-1) instead.
    """
    g = sum(d) + 1
    br = bracket(d)
    pref = Fraction({1: g * (2 * g - 1), 2: g}.get(len(d), 1))
    for x in d:
        pref *= odd_double_factorial(x)
    for dn in set(d):
        if not in_z_half(pref * factorial(dn) / odd_double_factorial(dn) ** 3 * br):
            return False
    return True


def divisibility_b(d: Sequence[int], literal: bool = False) -> bool:
    """prod d_j! divides <tau_d> away from 2.

    With literal=True the power of two is pinned to 2^(4g); that reading
    already fails at <tau_4>_5 = 3^5 5 7^2 / 2^18.
    """
    g = sum(d) + 1
    val = bracket(d)
    for x in d:
        val /= factorial(x)
    if literal:
        return (val * 2 ** (4 * g)).denominator == 1
    return in_z_half(val)


def divisibility_c(d: Sequence[int]) -> bool:
    """2^(4g) <tau_d> / (max (2d_j+1)!! prod_{p_r >= 1} (p_r - 1)!) is an integer."""
    g = sum(d) + 1
    val = bracket(d) * 2 ** (4 * g) / odd_double_factorial(max(d))
    for p in multiplicities(d).values():
        val /= factorial(p - 1)
    return val.denominator == 1


def integrality_brackets(g_max: int) -> list[tuple[int, ...]]:
    """Partitions of g-1 for g <= g_max, with and without one extra zero."""
    out = []
    for g in _genus_range(g_max, 1):
        for d in enumerate_partitions(g - 1):
            if d:
                out.append(d)
            out.append(canonical((0,) + d))
    return out


def check_integrality(g_max: int = 12, threads: int = 1) -> list[CheckReport]:
    items = integrality_brackets(g_max)
    checks = [
        ("integrality-a", True, integrality_a),
        ("denominator-power-of-2", False, lambda d: is_power_of_two(bracket(d).denominator)),
        ("divisibility-b", False, divisibility_b),
        ("divisibility-c", False, divisibility_c),
    ]
    reports = []
    for name, hard, pred in checks:
        rep = CheckReport(name, {"gmax": g_max}, hard=hard)
        reports.append(_run(rep, items, lambda d, p=pred: None if p(d) else render(d), threads))
    reports[2].notes["literal_2^4g_failures"] = sum(not divisibility_b(d, literal=True) for d in items)
    reports[0].notes["n1_without_g_failures"] = sum(
        len(d) == 1 and not in_z_half(Fraction(factorial(d[0]), odd_double_factorial(d[0]) ** 2) * bracket(d)) for d in items
    )
    return reports


def _window_route(d: tuple[int, ...], cache: dict) -> Fraction | None:
    """B(d) through B_window when d is (a, b, e^m) for some split; None if no split fits."""
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            rest = d[:i] + d[i + 1 : j] + d[j + 1 :]
            if len(set(rest)) <= 1:
                e = rest[0] if rest else 0
                a, b = d[i], d[j]
                key = (e, len(rest), max(a, b))
                if key not in cache:
                    cache[key] = B_window(e, len(rest), key[2], key[2])
                return cache[key][(a, b)]
    return None


def check_cross(g_max: int = 9, n_max: int = 4, threads: int = 1) -> CheckReport:
    """compute_B = B_npoint (C_onepoint for n = 1) = C_twopoint (n = 2) = B_window (where it applies), exactly."""
    rep = CheckReport("cross", {"gmax": g_max, "nmax": n_max}, hard=True)
    items = [d for g in _genus_range(g_max) for d in enumerate_partitions(g - 1) if len(d) <= n_max]
    windows: dict = {}
    routes = {"onepoint": 0, "npoint": 0, "twopoint": 0, "window": 0}

    def one(d):
        b = compute_B(d)
        if len(d) == 1:
            if C_onepoint(d[0]) != compute_C(d):
                return f"{render(d)}: C_onepoint"
            routes["onepoint"] += 1
            return None
        if B_npoint(d) != b:
            return f"{render(d)}: B_npoint"
        routes["npoint"] += 1
        if len(d) == 2:
            if C_twopoint(*d) != compute_C(d):
                return f"{render(d)}: C_twopoint"
            routes["twopoint"] += 1
        if len(d) >= 2:
            try:
                w = _window_route(d, windows)
            except TruncationError as exc:
                return f"{render(d)}: window {exc}"
            if w is not None:
                if w != b:
                    return f"{render(d)}: B_window"
                routes["window"] += 1
        return None

    # serial: the window cache is shared and the oracles are cheap
    _run(rep, items, one, 1)
    rep.notes.update(routes)
    return rep


def check_bounds(x_max: int = 26, digits: int = PI_MAX_DIGITS) -> CheckReport:
    """Positivity, C(d) >= C(|d|), and C(d) <= f(X, n) over all d with X(d) <= x_max."""
    rep = CheckReport("bounds", {"xmax": x_max}, hard=True)
    items = [d for x in range(1, x_max + 1) for n in range(1, x + 1) for d in multisets_with_x(x, n)]

    def one(d):
        c = compute_C(d)
        if c <= 0:
            return f"{render(d)}: not positive"
        if c < compute_C((sum(d),)):
            return f"{render(d)}: below C(|d|)"
        try:
            if not f_bound(x_of(d), len(d)).compare(c, digits) >= 0:
                return f"{render(d)}: above f(X,n)"
        except PrecisionError as exc:
            return f"{render(d)}: {exc}"
        return None

    return _run(rep, items, one)


def check_band(g_max: int = 12) -> CheckReport:
    """max over partitions of g |C(d) - 1/pi|: finite, with the empirical constant recorded."""
    rep = CheckReport("band", {"gmax": g_max}, hard=True)
    lo, hi = inv_pi_bounds(PI_MAX_DIGITS)
    worst, arg = Fraction(0), None

    def one(item):
        nonlocal worst, arg
        g, d = item
        c = compute_C(d)
        k = g * max(abs(c - lo), abs(c - hi))
        if k > worst:
            worst, arg = k, d
        return None

    items = [(g, d) for g in _genus_range(g_max) for d in enumerate_partitions(g - 1)]
    _run(rep, items, one)
    rep.notes["K"] = mpmath.nstr(mpmath.mpf(worst.numerator) / worst.denominator, 10)
    rep.notes["at"] = render(arg) if arg else ""
    if not worst < 1:
        rep.failures.append(f"g|C - 1/pi| reached {float(worst)}")
    return rep


def interval_rows(g: int) -> list[tuple[int, tuple[int, ...], Fraction]]:
    """(n, d, C(d)) for every partition d of g - 1 (the data behind I_{g,n})."""
    return [(len(d), d, compute_C(d)) for d in enumerate_partitions(g - 1)]


def interval_csv(g_max: int, g_min: int = 2, digits: int = 12) -> str:
    from .numeric import numeric

    lines = ["g,n,C"]
    for g in _genus_range(g_max, g_min):
        for n, d, c in interval_rows(g):
            lines.append(f"{g},{n},{numeric(c, digits)}")
    return "\n".join(lines) + "\n"


def _gamma_mpf(x: int):
    v = gamma_exact(x)
    return mpmath.mpf(v.coefficient.numerator) / v.coefficient.denominator * mpmath.pi ** v.pi_power


def check_interval_stats(g: int = 12) -> CheckReport:
    """Endpoints m(g,n), M(g,n) of I_{g,n}: ordering, where they sit, and the predicted gaps to gamma."""
    rep = CheckReport("intervals", {"g": g}, hard=False)
    rows = interval_rows(g)
    stats = []
    t0 = time.perf_counter()
    for n in range(1, g):
        sub = [(c, d) for nn, d, c in rows if nn == n]
        (m, dm), (M, dM) = min(sub), max(sub)
        stats.append((n, m, M, dm, dM))
        rep.total += 2
        want_min = canonical((1,) * (n - 1) + (g - n,))
        dd = (g - 1) // n
        p = (dd + 1) * n - g + 1
        want_max = canonical((dd,) * p + (dd + 1,) * (n - p))
        if dm != want_min:
            rep.failures.append(f"n={n}: min at {render(dm)}, expected {render(want_min)}")
        if dM != want_max:
            rep.failures.append(f"n={n}: max at {render(dM)}, expected {render(want_max)}")
    for (n1, _, M1, _, _), (n2, m2, _, _, _) in zip(stats, stats[1:]):
        rep.total += 1
        if not M1 < m2:
            rep.failures.append(f"I_{{{g},{n1}}} overlaps I_{{{g},{n2}}}")
    with mpmath.workdps(30):
        lengths = [float(M - m) for _, m, M, _, _ in stats]
        gaps = [float(b[1] - a[2]) for a, b in zip(stats, stats[1:])]
        ratios_min, ratios_max = [], []
        for n, m, M, _, _ in stats:
            x = 2 * g - 2 + n
            gam = _gamma_mpf(x)
            pred_m = 27 * n / (8 * mpmath.pi * mpmath.mpf(x) ** 4)
            ratios_min.append(float((gam - mpmath.mpf(m.numerator) / m.denominator) / pred_m))
            dd = (g - 1) // n
            num = (dd + 1) * n - g
            if num:
                pred_M = (
                    mpmath.mpf(odd_double_factorial(dd)) ** 3
                    / (2 ** (dd + 1) * mpmath.pi * factorial(dd + 1))
                    * num
                    / mpmath.mpf(x) ** (2 * dd + 2)
                )
                ratios_max.append(float((gam - mpmath.mpf(M.numerator) / M.denominator) / pred_M))
    rep.notes.update(
        {
            "max_length_g3": max(lengths) * g**3,
            "mean_gap_g2": (sum(gaps) / len(gaps)) * g**2 if gaps else 0,
            "gap_to_min_over_prediction": [round(r, 4) for r in ratios_min],
            "gap_to_max_over_prediction": [round(r, 4) for r in ratios_max],
        }
    )
    rep.seconds = time.perf_counter() - t0
    return rep


def chat_defect(d: int, n: int, dps: int = 60):
    """1 - C-hat(d^n) = 1 - C(d^n)/gamma(X), X = n(2d+1), to dps significant digits.

    The difference cancels almost completely for large d, so the working
    precision is raised until dps digits survive the subtraction.
    """
    x = n * (2 * d + 1)
    b = B_power(d, n) if n >= 2 else compute_B((d,))
    g = d * n + 1
    c = b * 2 ** (2 * g - 1) / factorial(x - 1)
    prec = dps + 20
    while True:
        with mpmath.workdps(prec):
            out = 1 - mpmath.mpf(c.numerator) / c.denominator / _gamma_mpf(x)
            if out and abs(out) > mpmath.mpf(10) ** (dps + 10 - prec):
                break
        prec *= 2
    with mpmath.workdps(dps):
        return +out


def check_subexp(n: int = 4, d: int = 20, n_terms: int = 10, rel: float = 1e-3) -> CheckReport:
    """n W(N; d, n(2d+1)) against 1 - C-hat(d^n) (conjectural, reported)."""
    rep = CheckReport("subexp-W", {"n": n, "d": d, "N": n_terms}, hard=False, total=1)
    t0 = time.perf_counter()
    defect = chat_defect(d, n, 60)
    w = w_truncated(n_terms, d, n * (2 * d + 1)) * n
    with mpmath.workdps(60):
        ratio = mpmath.mpf(w.numerator) / w.denominator / defect
    rep.notes.update({"defect": mpmath.nstr(defect, 12), "ratio": mpmath.nstr(ratio, 12)})
    if not abs(ratio - 1) < rel:
        rep.failures.append(f"relative error {mpmath.nstr(abs(ratio - 1), 5)}")
    rep.seconds = time.perf_counter() - t0
    return rep


def check_subexp_closed(ns: Iterable[int] = range(2, 7)) -> CheckReport:
    """First three coefficients of L_n = 24 log(1 + b_1/d + ...) against the closed forms."""
    ns = list(ns)
    rep = CheckReport("subexp-L", {"n": f"{ns[0]}..{ns[-1]}"}, hard=False)

    def one(n):
        got = tuple(l_series(n, 3)[k] for k in (1, 2, 3))
        return None if got == l_closed(n) else f"n={n}: {got}"

    return _run(rep, ns, one)


def large_defect(d: int = 100, n: int = 10, dps: int = 30):
    """Opt-in long job: 1 - C-hat(d^n) must lie in (0, 1)."""
    val = chat_defect(d, n, dps)
    if not 0 < val < 1:
        raise AssertionError(f"1 - C-hat({d}^{n}) = {val} is outside (0, 1)")
    return val
