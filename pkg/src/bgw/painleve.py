"""The polynomials m_d, Painleve XXXIV / II hierarchy coefficients and their growth.

Jet variables u_0, u_1, ... carry weight deg u_i = i + 2.  The formal solution
of the rescaled XXXIV member of index d is

    Y(X) = sum_n y_{d,n} X^-((2d+1)n+2),   y_{d,0} = 1/4,

and y_{d,n} = ((2d+1)n+1)! C(d^n) / ((2d+1)^n n!).  The II hierarchy
coefficients v_{d,n} follow from Y = V' - V^2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

import mpmath

from ._sparse import SparsePoly
from .dvv import compute_C
from .exactnum import DomainError, odd_double_factorial
from .resolvent import B_power

Y0 = Fraction(1, 4)
V0 = Fraction(1, 2)
DVV_LIMIT = 6


class ResidualError(ArithmeticError):
    """A formal solution failed to satisfy its equation."""


class DiffPoly(SparsePoly):
    """Polynomial in jet variables; variable index i stands for u_i."""

    @classmethod
    def u(cls, i: int, power: int = 1):
        if i < 0:
            raise DomainError("jet index must be nonnegative")
        return cls.var(i, power)

    def derive(self) -> "DiffPoly":
        """The total derivative sum_i u_{i+1} d/du_i."""
        out: dict[tuple[int, ...], Fraction] = {}
        for m, c in self.terms.items():
            for i, e in enumerate(m):
                if not e:
                    continue
                new = list(m) + [0] * (i + 2 - len(m))
                new[i] -= 1
                new[i + 1] += 1
                key = tuple(new)
                out[key] = out.get(key, Fraction(0)) + c * e
        return DiffPoly(out)

    def weights(self) -> set[int]:
        """Set of monomial weights under deg u_i = i + 2."""
        return {sum(e * (i + 2) for i, e in enumerate(m)) for m in self.terms}

    def is_homogeneous(self, weight: int) -> bool:
        return self.weights() <= {weight}

    def __str__(self):
        return self.render(lambda i: f"u{i}")


def _b_coeffs(d_max: int) -> list[DiffPoly]:
    """[1, c_0, ..., c_{d_max}] with c_k = (2k+1)!! m_k, solved order by order.

    At lambda^-j the term -2 lambda b^2 contributes -4 c_j plus lower pieces,
    so c_j = (1/4) * (everything else at that order), which only involves c_k, k < j.
    """
    b = [DiffPoly.constant(1)]
    u0 = DiffPoly.u(0)
    for j in range(d_max + 1):
        # b = sum_k b[k] lambda^-k; collect lambda^-j of b b'' - (b')^2/2 + 4 u0 b^2
        rest = DiffPoly()
        for a in range(j + 1):
            bj = b[j - a]
            rest = rest + b[a] * bj.derive().derive() - b[a].derive() * bj.derive() * Fraction(1, 2) + u0 * b[a] * bj * 4
        # -2 * [lambda^-(j+1)] b^2 without the two copies of the unknown c_j
        for a in range(1, j + 1):
            rest = rest - b[a] * b[j + 1 - a] * 2
        b.append(rest * Fraction(1, 4))
    return b


@lru_cache(maxsize=None)
def _m_polys(d_max: int) -> tuple[DiffPoly, ...]:
    b = _b_coeffs(d_max)
    out = []
    for d in range(d_max + 1):
        m = b[d + 1] * Fraction(1, odd_double_factorial(d))
        if not m.is_homogeneous(2 * d + 2):
            raise ArithmeticError(f"m_{d} is not homogeneous of weight {2 * d + 2}")
        if m.nvars() > 2 * d + 1:
            raise ArithmeticError(f"m_{d} uses jets beyond u_{2 * d}")
        out.append(m)
    return tuple(out)


def m_poly(d: int) -> DiffPoly:
    """m_d(u_0, ..., u_{2d})."""
    if d < 0:
        raise DomainError("m_poly needs d >= 0")
    return _m_polys(d)[d]


def b_residual(d_max: int) -> list[DiffPoly]:
    """Coefficients lambda^1 ... lambda^-d_max of b b'' - (b')^2/2 - 2(lambda - 2u0) b^2 + 2 lambda."""
    b = [DiffPoly.constant(1)] + [m_poly(d) * odd_double_factorial(d) for d in range(d_max + 1)]
    u0 = DiffPoly.u(0)

    def at(j):
        return b[j] if 0 <= j < len(b) else DiffPoly()

    out = []
    for j in range(-1, d_max + 1):
        r = DiffPoly()
        for a in range(max(j, 0) + 1):
            r = r + at(a) * at(j - a).derive().derive() - at(a).derive() * at(j - a).derive() * Fraction(1, 2)
            r = r + u0 * at(a) * at(j - a) * 4
        for a in range(j + 2):
            r = r - at(a) * at(j + 1 - a) * 2
        if j == -1:
            r = r + 2
        out.append(r)
    return out


@dataclass
class CoeffSeq:
    """Coefficients indexed from `start`; kind is one of y_g, y_dn, v_dn, A_dn."""

    kind: str
    values: list[Fraction]
    d: int | None = None
    start: int = 0
    meta: dict = field(default_factory=dict)

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n - self.start]

    def __len__(self):
        return len(self.values)

    def indices(self) -> range:
        return range(self.start, self.start + len(self.values))

    def to_json(self) -> str:
        return json.dumps([f"{v.numerator}/{v.denominator}" for v in self.values])

    @classmethod
    def from_json(cls, text: str, kind: str, d: int | None = None, start: int = 0) -> "CoeffSeq":
        return cls(kind, [Fraction(s) for s in json.loads(text)], d, start)


def y_g_seq(g_max: int) -> CoeffSeq:
    """y_1, ..., y_{g_max} from the quadratic recursion."""
    if g_max < 1:
        raise DomainError("g_max must be >= 1")
    y = [None, Y0]
    for g in range(2, g_max + 1):
        s = sum((3 * h - 1) * y[h] * y[g - h] for h in range(1, g))
        y.append((3 * g - 2) * (3 * g - 4) * y[g - 1] + Fraction(2, g - 1) * s)
    return CoeffSeq("y_g", y[1:], 1, start=1)


def c_power(d: int, n: int) -> Fraction:
    """C(d^n): the recursion for small n, the resolvent window beyond."""
    if n <= DVV_LIMIT:
        return compute_C((d,) * n)
    x = (2 * d + 1) * n
    g = (x - n + 2) // 2
    return B_power(d, n) * 2 ** (2 * g - 1) / factorial(x - 1)


def y_dn_seq(d: int, n_max: int) -> CoeffSeq:
    """y_{d,0..n_max} from the normalized numbers C(d^n)."""
    if d < 1:
        raise DomainError("y_dn_seq needs d >= 1")
    k = 2 * d + 1
    vals = [Y0]
    for n in range(1, n_max + 1):
        vals.append(Fraction(factorial(k * n + 1), k**n * factorial(n)) * c_power(d, n))
    return CoeffSeq("y_dn", vals, d)


def a_dn_seq(d: int, n_max: int) -> CoeffSeq:
    """A_{d,n} of the unscaled XXXIV member, A_{d,0} = 1/8."""
    k = 2 * d + 1
    vals = [Fraction(1, 8)]
    for n in range(1, n_max + 1):
        c = c_power(d, n)
        vals.append(Fraction(factorial(k * n + 1), 2 ** (2 * n * d + 1) * odd_double_factorial(d) ** n * factorial(n)) * c)
    return CoeffSeq("A_dn", vals, d)


def _jet_coeffs(y: Sequence[Fraction], d: int, i: int) -> list[Fraction]:
    """u_i = Y^(i)/2 = X^-(2+i) sum_n a_n s^n with s = X^-(2d+1)."""
    k = 2 * d + 1
    out = []
    for n, yn in enumerate(y):
        e = k * n + 2
        f = Fraction(1)
        for t in range(i):
            f *= -(e + t)
        out.append(yn * f / 2)
    return out


def _series_mul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, z in enumerate(b[: n + 1 - i]):
                out[i + j] += x * z
    return out


def _eval_on_jets(poly: SparsePoly, y: Sequence[Fraction], d: int, n: int) -> list[Fraction]:
    """Series in s of X^w poly(u), with w the weight of poly; through s^n."""
    jets: dict[int, list[Fraction]] = {}
    total = [Fraction(0)] * (n + 1)
    for mono, c in poly.terms.items():
        acc = [Fraction(c)] + [Fraction(0)] * n
        for i, e in enumerate(mono):
            if e:
                if i not in jets:
                    jets[i] = _jet_coeffs(y, d, i)
                for _ in range(e):
                    acc = _series_mul(acc, jets[i], n)
        total = [t + a for t, a in zip(total, acc)]
    return total


def _p34_constant(d: int) -> int:
    return 2 ** (2 * d + 1) * odd_double_factorial(d)


def p34_solve(d: int, n_max: int) -> CoeffSeq:
    """Solve K d/dX m_d(Y/2, Y'/2, ...) - X Y' - 2Y = 0 for y_{d,1..n_max}.

    With m_d(jets) = X^-(2d+2) sum_k M_k s^k, the equation at X^-((2d+1)n+2) reads
    (2d+1) n y_n = K ((2d+1) n + 1) M_{n-1}, and M_{n-1} only sees y_0..y_{n-1}.
    y_0 = 1/4 is the chosen initial value: leading balance leaves it free.
    """
    if d < 1:
        raise DomainError("p34_solve needs d >= 1")
    k = 2 * d + 1
    m = m_poly(d)
    K = _p34_constant(d)
    y = [Y0]
    for n in range(1, n_max + 1):
        mk = _eval_on_jets(m, y, d, n - 1)[n - 1]
        y.append(Fraction(K * (k * n + 1), k * n) * mk)
    res = p34_residual(d, y)
    if any(res):
        raise ResidualError(f"p34 residual nonzero for d={d}")
    return CoeffSeq("y_dn", y, d, meta={"route": "p34"})


def p34_residual(d: int, y: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients of X^-((2d+1)n+2), n = 1..len(y)-1, of the equation's left side.

    Uses the derivation on m_d rather than differentiating the series, so it is
    an independent check of the solver.
    """
    k = 2 * d + 1
    n_max = len(y) - 1
    if n_max < 1:
        return []
    dm = m_poly(d).derive()
    series = _eval_on_jets(dm, y, d, n_max - 1)
    K = _p34_constant(d)
    return [K * series[n - 1] + k * n * y[n] for n in range(1, n_max + 1)]


def v_dn_seq(d: int, n_max: int, y: CoeffSeq | None = None) -> CoeffSeq:
    """v_{d,0..n_max}: (2d+1) n v_n = y_n + sum_{n1+n2=n, n1,n2>=1} v_n1 v_n2."""
    if y is None:
        y = p34_solve(d, n_max)
    if len(y) < n_max + 1:
        raise DomainError("y sequence too short")
    k = 2 * d + 1
    v = [V0]
    for n in range(1, n_max + 1):
        s = sum(v[a] * v[n - a] for a in range(1, n))
        v.append((y[n] + s) / (k * n))
    return CoeffSeq("v_dn", v, d)


def ydnvdn_residual(y: CoeffSeq, v: CoeffSeq) -> list[Fraction]:
    """y_n - ((2d+1)n+1) v_n + sum_{n1+n2=n, n1,n2>=0} v_n1 v_n2, for every n."""
    k = 2 * y.d + 1
    out = []
    for n in range(min(len(y), len(v))):
        conv = sum(v[a] * v[n - a] for a in range(n + 1))
        out.append(y[n] - (k * n + 1) * v[n] + conv)
    return out


def p2_residual(d: int, v: CoeffSeq) -> list[Fraction]:
    """Coefficients of X^-((2d+1)n), n = 0..len(v)-1, of the II hierarchy member with alpha = 1/2.

    K (d/dX + 2V) m_{d-1}((V'-V^2)/2, ...) - X V - 1/2 with K = 2^(2d-1) (2d-1)!!,
    where Y = V' - V^2 is rebuilt from v directly.
    """
    k = 2 * d + 1
    n_max = len(v) - 1
    y = [(k * n + 1) * v[n] - sum(v[a] * v[n - a] for a in range(n + 1)) for n in range(n_max + 1)]
    K = 2 ** (2 * d - 1) * odd_double_factorial(d - 1)
    mser = _eval_on_jets(m_poly(d - 1), y, d, max(n_max - 1, 0))
    out = [v[0] - V0]
    for n in range(1, n_max + 1):
        j = n - 1
        deriv = -(2 * d + j * k) * mser[j]
        mixed = -2 * sum(v[a] * mser[j - a] for a in range(j + 1))
        out.append(v[n] + K * (deriv + mixed))
    return out


def y_g_growth(g: int):
    """(3g-2)! / (3^(g-1) (g-1)!)."""
    return mpmath.factorial(3 * g - 2) / (mpmath.mpf(3) ** (g - 1) * mpmath.factorial(g - 1))


def y_dn_growth(d: int) -> Callable[[int], mpmath.mpf]:
    k = 2 * d + 1
    return lambda n: mpmath.factorial(k * n + 1) / (mpmath.mpf(k) ** n * mpmath.factorial(n))


def v_dn_growth(d: int) -> Callable[[int], mpmath.mpf]:
    k = 2 * d + 1
    return lambda n: mpmath.factorial(k * n - 1) / (mpmath.mpf(k) ** (n - 1) * mpmath.factorial(n - 1))


def c_smallest(g: int) -> Fraction:
    """C(g-1) = (2g-1)!!^3 / (2^(g+1) (2g-1)! g!)."""
    return Fraction(odd_double_factorial(g - 1) ** 3, 2 ** (g + 1) * factorial(2 * g - 1) * factorial(g))


def c_biggest(g: int) -> Fraction:
    """C(1^(g-1)) = 3^(g-1) (g-1)! y_g / (3g-2)!."""
    y = y_g_seq(g)[g]
    return Fraction(3 ** (g - 1) * factorial(g - 1), factorial(3 * g - 2)) * y


@dataclass
class AsymFit:
    ratios: dict[int, mpmath.mpf]
    coefficients: list[mpmath.mpf]

    @property
    def constant(self):
        return self.coefficients[0]

    @property
    def first_correction(self):
        """c_1 / c_0 in c_0 (1 + c_1/n + ...)."""
        return self.coefficients[1] / self.coefficients[0]


def asym_ratio(
    seq: CoeffSeq,
    reference: Callable[[int], mpmath.mpf],
    terms: int = 6,
    dps: int = 50,
    points: Sequence[int] | None = None,
) -> AsymFit:
    """Ratios seq_n / reference(n) and a fit r_n ~ c_0 + c_1/n + ... + c_{terms-1}/n^(terms-1).

    The fit solves exactly on the last `terms` indices (or on `points`).
    """
    idx = [n for n in seq.indices() if n > 0]
    if points is None:
        points = idx[-terms:]
    if len(points) < terms:
        raise DomainError("sequence too short for the requested fit")
    with mpmath.workdps(dps + 20):
        ratios = {}
        for n in idx:
            v = seq[n]
            ratios[n] = mpmath.mpf(v.numerator) / v.denominator / reference(n)
        mat = mpmath.matrix([[mpmath.mpf(n) ** -j for j in range(terms)] for n in points])
        rhs = mpmath.matrix([ratios[n] for n in points])
        sol = mpmath.lu_solve(mat, rhs)
        coeffs = [+sol[j] for j in range(terms)]
    with mpmath.workdps(dps):
        return AsymFit({n: +r for n, r in ratios.items()}, [+c for c in coeffs])


def c_smallest_seq(g_max: int) -> CoeffSeq:
    return CoeffSeq("C(g-1)", [c_smallest(g) for g in range(1, g_max + 1)], start=1)
