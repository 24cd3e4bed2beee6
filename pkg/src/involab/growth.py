"""Growth rates: certified root brackets, closed-form constants, empirical estimates.

Polynomials are coefficient lists, lowest degree first, with int or
Fraction entries.  Root isolation uses exact rational sign evaluation, so a
reported bracket always straddles a genuine sign change.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

import mpmath
from mpmath import libmp

__all__ = [
    "GrowthReport", "smallest_positive_root", "growth_constants",
    "upper_bound_1324", "lower_bound_1324", "empirical_growth", "poly_eval",
    "poly_mul", "poly_sub", "separable_norm_polynomial", "DEFAULT_TOL",
    "ROOT", "CLOSED", "EMPIRICAL",
]

ROOT = "root-of-polynomial"
CLOSED = "closed-form-constant"
EMPIRICAL = "empirical-nth-root"

DEFAULT_TOL = Fraction(1, 10 ** 15)
_DIGITS = 30
_SCAN_STEP = Fraction(1, 64)


@dataclass(frozen=True)
class GrowthReport:
    value: Decimal
    bracket: tuple[Fraction, Fraction]
    method: str
    source: str
    certified: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        lo, hi = self.bracket
        # the decimal value is rounded, so allow a last-digit overhang
        slack = Fraction(1, 10 ** (_DIGITS - 3))
        if self.certified and not lo - slack <= Fraction(self.value) <= hi + slack:
            raise ValueError(f"value {self.value} outside bracket {self.bracket}")

    @property
    def width(self) -> Fraction:
        return self.bracket[1] - self.bracket[0]

    def to_dict(self) -> dict:
        lo, hi = self.bracket
        out = {
            "source": self.source,
            "method": self.method,
            "value": str(self.value),
            "bracket": [f"{lo.numerator}/{lo.denominator}",
                        f"{hi.numerator}/{hi.denominator}"],
            "certified": self.certified,
        }
        for k, v in self.extra.items():
            out[k] = str(v) if isinstance(v, (Decimal, Fraction)) else v
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# -- exact polynomial helpers --------------------------------------------

def poly_eval(poly: Sequence, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _decimal(x: Fraction | mpmath.mpf) -> Decimal:
    if isinstance(x, Fraction):
        with mpmath.workdps(_DIGITS + 10):
            x = mpmath.mpf(x.numerator) / x.denominator
    return Decimal(mpmath.nstr(x, _DIGITS, min_fixed=-50, max_fixed=50))


def _mpf_fraction(x) -> Fraction:
    """The exact rational value of a binary mpf (or raw mpf tuple)."""
    raw = x if isinstance(x, tuple) else x._mpf_
    p, q = libmp.to_rational(raw)
    return Fraction(int(p), int(q))


def _bisect(poly: Sequence, lo: Fraction, hi: Fraction, tol: Fraction):
    slo = _sign(poly_eval(poly, lo))
    shi = _sign(poly_eval(poly, hi))
    if slo == 0:
        return lo, lo
    if shi == 0:
        return hi, hi
    if slo == shi:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _sign(poly_eval(poly, mid))
        if s == 0:
            return mid, mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def smallest_positive_root(poly: Sequence, tol: Fraction = DEFAULT_TOL,
                           reciprocal: bool = False, source: str = "polynomial",
                           scan_to: Fraction = Fraction(1)) -> GrowthReport:
    """Bracket the smallest positive root of ``poly`` by exact bisection.

    Scans (0, scan_to] in steps of 1/64 for the first sign change.  With
    ``reciprocal`` the report describes 1/root (the growth rate), and the
    bracket is inverted accordingly.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    poly = [Fraction(c) for c in poly]
    prev = Fraction(0)
    sprev = _sign(poly_eval(poly, prev))
    x = _SCAN_STEP
    found = None
    while x <= scan_to:
        s = _sign(poly_eval(poly, x))
        if s == 0:
            found = (x, x)
            break
        if sprev != 0 and s != sprev:
            found = (prev, x)
            break
        prev, sprev = x, s
        x += _SCAN_STEP
    if found is None:
        raise ValueError(f"no sign change of the polynomial on (0, {scan_to}]")
    lo, hi = found
    if lo == 0:
        # a root at 0 itself is not positive
        raise ValueError("polynomial vanishes at 0")
    if lo != hi:
        # tighten enough that the reciprocal bracket also meets tol
        inner = tol * lo * lo / 4 if reciprocal else tol
        lo, hi = _bisect(poly, lo, hi, inner)
    if reciprocal:
        lo, hi = 1 / hi, 1 / lo
    mid = (lo + hi) / 2
    return GrowthReport(_decimal(mid), (lo, hi), ROOT, source)


# -- closed-form constants ---------------------------------------------

def _iv_report(expr, source: str, tol: Fraction, **extra) -> GrowthReport:
    """Evaluate ``expr(iv)`` in interval arithmetic until the bracket is narrow."""
    iv = mpmath.iv
    saved = iv.prec
    prec = 80
    try:
        while True:
            iv.prec = prec
            lo_raw, hi_raw = expr(iv)._mpi_
            lo, hi = _mpf_fraction(lo_raw), _mpf_fraction(hi_raw)
            if hi - lo <= tol:
                break
            prec *= 2
    finally:
        iv.prec = saved
    with mpmath.workdps(_DIGITS + 10):
        value = expr(mpmath.mp)
    return GrowthReport(_decimal(value), (lo, hi), CLOSED, source, extra=extra)


def _sqrt2_plus_sqrt3(m):
    return m.sqrt(2) + m.sqrt(3)


def _one_plus_phi(m):
    return 1 + (1 + m.sqrt(5)) / 2


def _bound_1324(m):
    r = m.exp(m.log(8 + 6 * m.sqrt(78)) / 3)
    return 3 * r / (14 + r - r * r)


SEPARABLE_Q_PARTS = ((-6, -20, 38, 24, -18, -4, 2), (10, 12, -12, -4, 2))
RADICAND = (1, 0, -6, 0, 1)
Q_1342 = (1, -3, 1)
H_DENOMINATOR = (1, -5, 1, -1)


def separable_norm_polynomial() -> list:
    """P1^2 - (1 - 6x^2 + x^4) P2^2 where the inner radicand is q = P1 + r P2.

    Its roots are where either conjugate of q vanishes.
    """
    p1, p2 = SEPARABLE_Q_PARTS
    return poly_sub(poly_mul(p1, p1), poly_mul(RADICAND, poly_mul(p2, p2)))


def growth_constants(tol: Fraction = DEFAULT_TOL) -> dict[str, GrowthReport]:
    """Certified growth rates of the classes with closed-form answers.

    Each closed-form constant is paired with the reciprocal smallest
    positive root of a polynomial from the generating function; the two are
    computed independently and must agree.
    """
    out: dict[str, GrowthReport] = {}
    sep = _iv_report(_sqrt2_plus_sqrt3, "av-i-2413", tol)
    sep_root = smallest_positive_root(separable_norm_polynomial(), tol, True, "av-i-2413")
    out["av-i-2413"] = _with_check(sep, sep_root)

    av1342 = _iv_report(_one_plus_phi, "av-i-1342", tol)
    root1342 = smallest_positive_root(Q_1342, tol, True, "av-i-1342")
    out["av-i-1342"] = _with_check(av1342, root1342)

    out["av-i-1234"] = _iv_report(lambda m: m.mpf(3), "av-i-1234", tol)
    out["av-i-2341"] = growth_2341(tol)
    return out


def _with_check(closed: GrowthReport, root: GrowthReport) -> GrowthReport:
    gap = abs(Fraction(closed.value) - Fraction(root.value))
    if gap > Fraction(1, 10 ** 9):
        raise ArithmeticError(f"{closed.source}: closed form {closed.value} "
                              f"and root {root.value} disagree")
    extra = dict(closed.extra, cross_check=str(root.value), cross_check_method=ROOT)
    return GrowthReport(closed.value, closed.bracket, closed.method, closed.source,
                        extra=extra)


def growth_2341(tol: Fraction = DEFAULT_TOL, ratio_order: int = 200) -> GrowthReport:
    """Reciprocal of the smallest positive root of q, cross-checked by the
    ratio of consecutive coefficients of the closed-form series.

    The pole at that root dominates the sqrt(1 - 4x^2) branch point, so
    the ratio converges geometrically.
    """
    from .series.assembly import Q_2341, closed_2341

    report = smallest_positive_root(Q_2341, tol, True, "av-i-2341")
    g = closed_2341(ratio_order)
    ratio = Fraction(g[ratio_order], g[ratio_order - 1])
    extra = {"cross_check": str(_decimal(ratio)),
             "cross_check_method": f"coefficient ratio at n={ratio_order}"}
    return GrowthReport(report.value, report.bracket, ROOT, "av-i-2341", extra=extra)


def upper_bound_1324(tol: Fraction = DEFAULT_TOL) -> GrowthReport:
    """3r/(14 + r - r^2) with r = cbrt(8 + 6 sqrt(78)): the reciprocal root of
    1 - 5x + x^2 - x^3, which bounds the growth rate of Av^I(1324)."""
    closed = _iv_report(_bound_1324, "av-i-1324-upper", tol)
    root = smallest_positive_root(H_DENOMINATOR, tol, True, "av-i-1324-upper")
    report = _with_check(closed, root)
    if not report.bracket[1] < Fraction(484, 100):
        raise ArithmeticError(f"upper bound {report.value} is not below 4.84")
    return report


def lower_bound_1324(class_bound: Fraction = Fraction(981, 100),
                     tol: Fraction = DEFAULT_TOL) -> GrowthReport:
    """sqrt of a lower bound on gr(Av(1324)): squaring preserves order, and
    merging pi with its inverse embeds Av_n into Av^I_2n."""
    b = class_bound
    report = _iv_report(lambda m: m.sqrt(m.mpf(b.numerator) / b.denominator),
                        "av-i-1324-lower", tol)
    return report


def empirical_growth(counts: Sequence[int], start: int = 1,
                     source: str = "counts") -> GrowthReport:
    """Uncertified estimates from the last terms of a counting sequence.

    ``counts[k]`` is the count at length ``start + k``.  The value is the
    ratio of the last two terms; the n-th root of the last term is
    reported alongside, and the bracket spans the two estimates.
    """
    if len(counts) < 4:
        raise ValueError("need at least 4 terms")
    if any(c <= 0 for c in counts):
        raise ValueError("every term must be positive")
    n = start + len(counts) - 1
    ratio = Fraction(counts[-1], counts[-2])
    with mpmath.workdps(_DIGITS + 10):
        root = mpmath.root(mpmath.mpf(counts[-1]), n) if n > 0 else mpmath.mpf(1)
        root_q = _mpf_fraction(mpmath.mpf(root))
    lo, hi = min(ratio, root_q), max(ratio, root_q)
    extra = {"ratio": str(_decimal(ratio)), "nth_root": str(_decimal(root_q)), "n": n}
    return GrowthReport(_decimal(ratio), (lo, hi), EMPIRICAL, source,
                        certified=False, extra=extra)
