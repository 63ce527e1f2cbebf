import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgw.dvv import BgwTable
from bgw.exactnum import DomainError, PiMultiple, PrecisionError
from bgw.harness import cache, checks
from bgw.harness.cli import main
from bgw.harness.numeric import numeric
from bgw.harness.tables import cli_table, kappa_table

from refdata import GENUS_TABLES


# --- numeric -----------------------------------------------------------------

@pytest.mark.parametrize(
    "value, digits, text",
    [
        (Fraction(189, 640), 6, "0.295313"),
        (Fraction(9, 32), 6, "0.281250"),
        (Fraction(5, 2), 1, "3"),
        (Fraction(-5, 2), 1, "-3"),
        (Fraction(1, 8), 2, "0.13"),
        (Fraction(999999, 1000), 3, "1000"),
        (Fraction(10**30, 7), 5, "1.4286e+29"),
        (Fraction(1, 10**9), 3, "1.00e-9"),
        (Fraction(1, 10**5), 2, "0.000010"),
        (Fraction(0), 3, "0.00"),
        (PiMultiple(1, 2), 10, "9.869604401"),
        (PiMultiple(1, -2), 6, "0.101321"),
        (PiMultiple(Fraction(3, 64), 0), 3, "0.0469"),
    ],
)
def test_numeric_rendering(value, digits, text):
    assert numeric(value, digits) == text


@given(st.builds(Fraction, st.integers(-10**12, 10**12), st.integers(1, 10**12)).filter(bool), st.integers(1, 15))
def test_numeric_is_close(x, digits):
    got = Fraction(numeric(x, digits))
    assert abs(got - x) <= abs(x) * Fraction(1, 10 ** (digits - 1)) / 2 + Fraction(1, 10**30)


def test_numeric_limits():
    with pytest.raises(ValueError):
        numeric(Fraction(1), 0)
    with pytest.raises(PrecisionError):
        numeric(PiMultiple(1, 2), 70)


# --- cache ---------------------------------------------------------------------

def test_cache_roundtrip_is_byte_identical(tmp_path):
    table = BgwTable()
    table.warm(12)
    path = tmp_path / "b.cache"
    cache.cache_save(table, path)
    text = path.read_text()
    assert text.startswith("# bgw-cache v1 xmax=12\nB 0 1/8\n")
    loaded = cache.cache_load(path)
    assert dict(loaded.items()) == dict(table.items())
    assert loaded.x_max == 12
    cache.cache_save(loaded, tmp_path / "c.cache")
    assert (tmp_path / "c.cache").read_text() == text


def test_cache_merges_into_existing_table():
    a = BgwTable()
    a.warm(9)
    b = BgwTable()
    b.B((1, 2))
    cache.loads(cache.dumps(a), b)
    assert len(b) == len(a)


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("# something else\n", "bad header"),
        ("# bgw-cache v2 xmax=1\n", "version"),
        ("# bgw-cache v1 xmax=1\nB 0 1/8 extra\n", "malformed"),
        ("# bgw-cache v1 xmax=3\nB 2,1 3/4\n", "not sorted"),
        ("# bgw-cache v1 xmax=3\nB 1 3/0\n", "zero denominator"),
        ("# bgw-cache v1 xmax=3\nB 1 6/256\n", "not reduced"),
        ("# bgw-cache v1 xmax=1\nB 0 1/4\n", "1/8"),
        ("# bgw-cache v1 xmax=3\nB 1 1/2\n", "!="),
    ],
)
def test_cache_rejects(text, message):
    table = BgwTable()
    if message == "!=":
        table.B((1,))
    with pytest.raises(cache.CacheError, match=message):
        cache.loads(text, table)


# --- tables --------------------------------------------------------------------

@pytest.mark.parametrize("g", sorted(GENUS_TABLES))
def test_genus_table(g):
    den, rows = GENUS_TABLES[g]
    tab = cli_table(g)
    assert tab.denominator == den
    assert [(r.value, r.scaled) for r in tab.rows] == [(c, dc) for _, c, dc in rows]
    data = tab.as_dict()
    assert data["D"] == den and len(data["rows"]) == len(rows)


def test_table_rendering():
    text = cli_table(3).render()
    assert text.splitlines()[0] == "g=3  D=1280"
    assert "C(1,1)" in text and "378" in text
    assert kappa_table(4).rows[0].label == "C(3;-)"


def test_table_domains():
    with pytest.raises(DomainError):
        cli_table(1)
    with pytest.raises(DomainError):
        kappa_table(2)


# --- checks --------------------------------------------------------------------

def test_report_line_and_json():
    rep = checks.CheckReport("demo", {"gmax": 3}, hard=True, total=4, failures=["x"], seconds=0.5)
    assert rep.line() == "FAIL demo [identity] gmax=3: 3/4 (0.50s)"
    data = json.loads(rep.to_json())
    assert data["ok"] is False and data["passed"] == 3


def test_threads_preserve_order():
    one = checks.check_integrality(8, threads=1)
    four = checks.check_integrality(8, threads=4)
    assert [r.to_dict()["failures"] for r in one] == [r.to_dict()["failures"] for r in four]
    assert checks.check_nesting(9, 3).ok


def test_integrality_predicates():
    assert checks.integrality_a((4,))
    assert checks.integrality_a((1, 3))
    assert checks.divisibility_b((4,))
    assert not checks.divisibility_b((4,), literal=True)
    assert checks.divisibility_c((1, 1, 2))
    assert (0,) in checks.integrality_brackets(3)


def test_integrality_notes():
    reports = checks.check_integrality(12)
    assert [r.name for r in reports] == ["integrality-a", "denominator-power-of-2", "divisibility-b", "divisibility-c"]
    assert reports[0].hard and all(r.ok for r in reports)
    assert reports[2].notes["literal_2^4g_failures"] > 0
    assert reports[0].notes["n1_without_g_failures"] > 0


def test_cross_small():
    rep = checks.check_cross(6, 3)
    assert rep.ok and rep.total > 0
    assert rep.notes["window"] > 0 and rep.notes["twopoint"] > 0


def test_band_and_bounds():
    band = checks.check_band(10)
    assert band.ok and 0 < float(band.notes["K"]) < 1
    assert checks.check_bounds(16).ok


def test_intervals():
    rep = checks.check_interval_stats(10)
    assert rep.total > 0
    csv = checks.interval_csv(4)
    lines = csv.splitlines()
    assert lines[0] == "g,n,C"
    assert lines[1] == "2,1,0.281250000000"
    assert len(lines) == 1 + 1 + 2 + 3


def test_small_defect_in_unit_interval():
    val = checks.chat_defect(3, 3, 30)
    assert 0 < val < 1


def test_defect_survives_cancellation():
    # about 1e-75, far below the requested digit count
    a = checks.chat_defect(60, 2, 20)
    b = checks.chat_defect(60, 2, 40)
    assert 0 < a < 1e-70
    assert abs(a - b) / b < 1e-18


# --- command line --------------------------------------------------------------

def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_compute(capsys):
    code, out = run(capsys, "compute", "1,1")
    assert code == 0
    assert "bracket = 63/512" in out and "C = 189/640 ~ 0.295313" in out
    code, out = run(capsys, "compute", "2", "--m", "2", "--json")
    assert json.loads(out)["bracket"] == "1974135/131072"


def test_cli_table(capsys):
    code, out = run(capsys, "table", "--g", "4", "--json")
    data = json.loads(out)
    assert data["D"] == 143360 and [r["DC"] for r in data["rows"]] == [42875, 43125, 43326]
    code, out = run(capsys, "table", "--g", "5", "--kappa")
    assert out.startswith("g=5  D=252313600")


def test_cli_check_exit_codes(capsys, monkeypatch):
    code, out = run(capsys, "check", "cross", "--gmax", "5")
    assert code == 0 and out.startswith("PASS cross [identity]")
    failing = checks.CheckReport("nesting", {}, hard=False, total=1, failures=["g=2"])
    monkeypatch.setattr(checks, "check_nesting", lambda g, t: failing)
    code, out = run(capsys, "check", "nesting")
    assert code == 0 and out.startswith("FAIL nesting [conjecture]")
    code, _ = run(capsys, "check", "nesting", "--strict-conjectures")
    assert code == 1
    hard = checks.CheckReport("cross", {}, hard=True, total=1, failures=["x"])
    monkeypatch.setattr(checks, "check_cross", lambda g: hard)
    code, _ = run(capsys, "check", "cross")
    assert code == 1


def test_cli_check_json_and_csv(capsys, tmp_path):
    csv = tmp_path / "iv.csv"
    code, out = run(capsys, "check", "intervals", "--gmax", "6", "--csv", str(csv), "--json")
    assert json.loads(out)[0]["name"] == "intervals"
    assert csv.read_text().startswith("g,n,C\n")


def test_cli_series(capsys):
    code, out = run(capsys, "series", "gamma", "--order", "3")
    assert out.strip() == "pi*gamma(X) = 1 - 1/2/X + 5/8/X^2 - 11/16/X^3 + O(X^-4)"
    code, out = run(capsys, "series", "ck", "--order", "4")
    assert "c_4 = 83/128 - 27/8*p1" in out
    code, out = run(capsys, "series", "wlambda", "--lambda", "1,1", "--order", "8")
    assert "1701/4/X^7" in out
    for kind in ("chatk", "wd", "subexp"):
        assert run(capsys, "series", kind, "--order", "4")[0] == 0


def test_cli_painleve(capsys):
    code, out = run(capsys, "painleve", "y", "--n", "5")
    assert "y_g[5] = 62737623/64" in out
    code, out = run(capsys, "painleve", "ydn", "--d", "2", "--n", "3", "--route", "p34", "--json")
    assert len(json.loads(out)) == 4
    code, out = run(capsys, "painleve", "vdn", "--n", "3")
    assert "v_dn[3] = 1509/2" in out
    code, out = run(capsys, "painleve", "residual", "--d", "2", "--n", "4")
    assert code == 0 and "residual 0" in out


def test_cli_kappa(capsys):
    code, out = run(capsys, "kappa", "number", "--m", "2", "--d", "1")
    assert "106911/32768" in out
    code, out = run(capsys, "kappa", "volume", "--g", "2")
    assert "3/64*pi^2" in out
    code, out = run(capsys, "kappa", "gprs", "--g", "6")
    assert out.count("g=") == 5
    assert run(capsys, "kappa", "table", "--g", "4")[0] == 0


def test_cli_cache_and_numeric(capsys, tmp_path):
    path = tmp_path / "t.cache"
    code, out = run(capsys, "cache", "save", "--path", str(path), "--xmax", "8")
    assert code == 0 and path.read_text().startswith("# bgw-cache v1 xmax=")
    code, out = run(capsys, "cache", "load", "--path", str(path))
    assert out.startswith("loaded")
    code, out = run(capsys, "compute", "3", "--cache", str(path))
    assert code == 0 and "B 3 " in path.read_text()
    code, out = run(capsys, "numeric", "1", "--pi-power", "2", "--digits", "8")
    assert out.strip() == "9.8696044"


def test_cli_rejects_empty_partition():
    with pytest.raises(SystemExit):
        main(["compute", ""])
