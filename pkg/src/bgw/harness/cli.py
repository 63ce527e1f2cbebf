"""Command line entry point: ``bgw <command> ...`` or ``python -m bgw``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .. import dvv, kappa, painleve
from ..exactnum import PiMultiple
from ..partitions import parse, render, x_of
from ..series import (
    c_poly,
    chat_k_ed,
    chat_poly,
    gamma_series,
    l_closed,
    l_series,
    subexp_b_series,
    w_d_closed,
    w_lambda,
)
from . import cache as cache_mod
from . import checks
from .numeric import numeric
from .tables import cli_table, kappa_table


def _emit(args, text: str, payload=None):
    if args.json and payload is not None:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_compute(args) -> int:
    d = parse(args.partition)
    if not d:
        raise SystemExit("compute needs a nonempty partition")
    if args.m:
        val = kappa.c_kappa(args.m, d)
        br = kappa.kappa_number(args.m, d)
        _emit(args, f"<kappa^{args.m} tau_{render(d)}> = {br}\nC({args.m};{render(d)}) = {val} ~ {numeric(val, args.digits)}",
              {"bracket": str(br), "C": str(val), "decimal": numeric(val, args.digits)})
        return 0
    b = dvv.compute_B(d)
    br = dvv.bracket(d)
    c = dvv.compute_C(d)
    lines = [
        f"d = ({render(d)})  g = {sum(d) + 1}  X = {x_of(d)}",
        f"bracket = {br}",
        f"B = {b}",
        f"C = {c} ~ {numeric(c, args.digits)}",
    ]
    _emit(args, "\n".join(lines), {"d": list(d), "bracket": str(br), "B": str(b), "C": str(c), "decimal": numeric(c, args.digits)})
    return 0


def cmd_table(args) -> int:
    tab = kappa_table(args.g, args.digits) if args.kappa else cli_table(args.g, args.digits)
    _emit(args, tab.render(), tab.as_dict())
    return 0


def _status(reports, args) -> int:
    code = 0
    for r in reports:
        if not r.ok and (r.hard or args.strict_conjectures):
            code = 1
    return code


def cmd_check(args) -> int:
    name, g, t = args.name, args.gmax, args.threads
    if name == "nesting":
        reports = [checks.check_nesting(g or 12, t)]
    elif name == "monotone":
        reports = [checks.check_monotone(g or 12, t)]
    elif name == "integrality":
        reports = checks.check_integrality(g or 12, t)
    elif name == "cross":
        reports = [checks.check_cross(g or 9)]
    elif name == "bounds":
        reports = [checks.check_bounds(args.xmax), checks.check_band(g or 12)]
    elif name == "intervals":
        reports = [checks.check_interval_stats(g or 12)]
        if args.csv:
            Path(args.csv).write_text(checks.interval_csv(g or 12), encoding="utf-8")
    elif name == "subexp":
        reports = [checks.check_subexp(), checks.check_subexp_closed()]
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(f"unknown check {name}")
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
            for f in r.failures[:10]:
                print(f"    {f}")
            for k, v in r.notes.items():
                print(f"    {k}: {v}")
    return _status(reports, args)


def cmd_series(args) -> int:
    n = args.order
    kind = args.kind
    if kind == "gamma":
        s = gamma_series(n)
        _emit(args, "pi*gamma(X) = " + s.render(), [str(c) for c in s.coeffs])
    elif kind in ("ck", "chatk"):
        fn = c_poly if kind == "ck" else chat_poly
        rows = [(k, fn(k, max(n, 10))) for k in range(n + 1)]
        _emit(args, "\n".join(f"{kind[:-1]}_{k} = {p}" for k, p in rows), {str(k): str(p) for k, p in rows})
    elif kind == "wd":
        s = w_d_closed(args.d, n)
        lines = ["W_%d(X) = %s" % (args.d, s.render())]
        lines += [f"c-hat_{k}(e_{args.d}) = {chat_k_ed(k, args.d)}" for k in range(n + 1)]
        _emit(args, "\n".join(lines), [str(c) for c in s.coeffs])
    elif kind == "wlambda":
        lam = parse(args.lam)
        s = w_lambda(lam, n)
        _emit(args, f"W_({render(lam)})(X) = {s.render()}", [str(c) for c in s.coeffs])
    elif kind == "subexp":
        b = subexp_b_series(args.n, n)
        L = l_series(args.n, min(n, 3))
        lines = [f"b_{k}({args.n}) = {v}" for k, v in enumerate(b)]
        lines.append(f"L_{args.n} = {L.render('d')}")
        lines.append("closed: " + ", ".join(str(c) for c in l_closed(args.n)))
        _emit(args, "\n".join(lines), [str(v) for v in b])
    return 0


def cmd_painleve(args) -> int:
    kind, d, n = args.kind, args.d, args.n
    if kind == "y":
        seq = painleve.y_g_seq(n)
    elif kind == "ydn":
        seq = painleve.p34_solve(d, n) if args.route == "p34" else painleve.y_dn_seq(d, n)
    elif kind == "vdn":
        seq = painleve.v_dn_seq(d, n)
    else:
        y = painleve.p34_solve(d, n)
        res = painleve.p34_residual(d, y.values)
        v = painleve.v_dn_seq(d, n, y)
        res2 = painleve.p2_residual(d, v)
        ok = not any(res) and not any(res2)
        _emit(args, f"d={d} n<={n}: XXXIV residual {'0' if not any(res) else res}; II residual {'0' if not any(res2) else res2}",
              {"p34": [str(r) for r in res], "p2": [str(r) for r in res2]})
        return 0 if ok else 1
    lines = [f"{seq.kind}[{i}] = {seq[i]}" for i in seq.indices()]
    if args.json:
        print(seq.to_json())
    else:
        print("\n".join(lines))
    return 0


def cmd_kappa(args) -> int:
    kind = args.kind
    if kind == "number":
        d = parse(args.d_part)
        v = kappa.kappa_number(args.m, d)
        _emit(args, f"<kappa_1^{args.m} tau_({render(d)})> = {v} ~ {numeric(v, args.digits)}", {"value": str(v)})
    elif kind == "table":
        tab = kappa_table(args.g, args.digits)
        _emit(args, tab.render(), tab.as_dict())
    elif kind == "volume":
        vol = kappa.sw_volume(args.g, args.n)
        _emit(args, f"V_{{{args.g},{args.n}}} = {vol}", {"volume": str(vol)})
    elif kind == "gprs":
        d = parse(args.d_part)
        lines = []
        for g in range(sum(d) + 2, args.g + 1):
            lines.append(f"g={g}: {kappa.gprs_ratio(g, d)}")
        _emit(args, "\n".join(lines), lines)
    return 0


def cmd_cache(args) -> int:
    if args.action == "save":
        table = dvv.default_table()
        table.warm(args.xmax)
        cache_mod.cache_save(table, args.path)
        print(f"saved {len(table)} records (X <= {table.x_max}) to {args.path}")
    else:
        table = cache_mod.cache_load(args.path, dvv.default_table())
        print(f"loaded {len(table)} records (X <= {table.x_max}) from {args.path}")
    return 0


def cmd_numeric(args) -> int:
    from fractions import Fraction

    val = Fraction(args.value)
    print(numeric(PiMultiple(val, args.pi_power), args.digits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=6, help="significant digits for decimals")
    common.add_argument("--strict-conjectures", action="store_true", help="exit nonzero when a conjecture check fails")
    common.add_argument("--threads", type=int, default=1, help="worker threads for lattice checks")
    common.add_argument("--cache", help="cache file read before and written after the command")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="bgw", description="Exact BGW numbers and related series.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", parents=[common], help="B, bracket and C of one index vector")
    s.add_argument("partition", help="comma separated, e.g. 1,1,2")
    s.add_argument("--m", type=int, default=0, help="power of kappa_1")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("table", parents=[common], help="genus table with common denominator")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--kappa", action="store_true", help="normalized kappa table instead")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("check", parents=[common], help="identity and conjecture suites")
    s.add_argument("name", choices=["nesting", "monotone", "integrality", "cross", "bounds", "intervals", "subexp"])
    s.add_argument("--gmax", type=int, default=None)
    s.add_argument("--xmax", type=int, default=26)
    s.add_argument("--csv", help="intervals: write g,n,C rows here")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("series", parents=[common], help="asymptotic series data")
    s.add_argument("kind", choices=["gamma", "ck", "chatk", "wd", "wlambda", "subexp"])
    s.add_argument("--order", type=int, default=6)
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--lambda", dest="lam", default="1")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("painleve", parents=[common], help="Painleve hierarchy coefficients")
    s.add_argument("kind", choices=["y", "ydn", "vdn", "residual"])
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--route", choices=["numbers", "p34"], default="numbers")
    s.set_defaults(func=cmd_painleve)

    s = sub.add_parser("kappa", parents=[common], help="kappa brackets, tables, volumes")
    s.add_argument("kind", choices=["number", "table", "volume", "gprs"])
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--d", dest="d_part", default="")
    s.add_argument("--g", type=int, default=4)
    s.add_argument("--n", type=int, default=0)
    s.set_defaults(func=cmd_kappa)

    s = sub.add_parser("cache", parents=[common], help="save or load the B table")
    s.add_argument("action", choices=["save", "load"])
    s.add_argument("--path", required=True)
    s.add_argument("--xmax", type=int, default=20)
    s.set_defaults(func=cmd_cache)

    s = sub.add_parser("numeric", parents=[common], help="round value * pi^k")
    s.add_argument("value")
    s.add_argument("--pi-power", type=int, default=0, choices=[-2, 0, 2])
    s.set_defaults(func=cmd_numeric)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache and Path(args.cache).exists():
        cache_mod.cache_load(args.cache, dvv.default_table())
    code = args.func(args)
    if args.cache:
        cache_mod.cache_save(dvv.default_table(), args.cache)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
