"""Generating functions for involutions avoiding 1342 and avoiding 2341.

Each is built twice: from its closed form, and from the
substitution decomposition (sums, skew sums, and inflations of simple
123-avoiding involutions counted by the refined staircase series).  The
two must agree coefficientwise or an ``ArithmeticError`` is raised.
"""

from __future__ import annotations

from .catalog import _check_start, catalan, central_binomial, large_schroder
from .core import DEFAULT_ORDER, UniSeries, solve_quadratic
from .staircase import staircase_closed_refined

__all__ = ["assemble_1342", "assemble_2341", "closed_1342", "closed_2341",
           "structural_1342", "structural_2341", "P_2341", "Q_2341"]

P_2341 = (1, -8, 17, 24, -151, 162, 221, -624, 231, 684, -801,
          -60, 627, -334, -101, 158, -48)
Q_2341 = (1, -6, 4, 50, -141, 55, 326, -514, -26, 725, -561,
          -223, 540, -206, -113, 120, -32)


def _simple_terms(order: int, u2: UniSeries, v2: UniSeries):
    """ŝ^(0), ŝ^(1)/v, ŝ^(1)(v,u)/u and ŝ^(2)/(uv) at u^2 = u2, v^2 = v2."""
    # two extra degrees survive the monomial divisions below
    s0, s1, s2 = (staircase_closed_refined(i, order + 2) for i in (0, 1, 2))
    at = {"u": u2, "v": v2}
    t0 = s0.substitute_squares(at)
    t1 = s1.div_monomial(v=1).substitute_squares(at)
    t1_swapped = s1.swap("u", "v").div_monomial(u=1).substitute_squares(at)
    t2 = s2.div_monomial(u=1, v=1).substitute_squares(at)
    return t0, t1, t1_swapped, t2


def closed_1342(order: int = DEFAULT_ORDER) -> UniSeries:
    """x(1 - 2x + x^2 + sqrt(1 - 6x^2 + x^4)) / (2(1 - 3x + x^2))."""
    p = lambda *cs: UniSeries.poly(list(cs), order)  # noqa: E731
    return p(0, 1) * (p(1, -2, 1) + p(1, 0, -6, 0, 1).sqrt()) / (p(1, -3, 1) * 2)


def structural_1342(order: int = DEFAULT_ORDER) -> UniSeries:
    """Solve g = x + g_sum + g_skew + (inflations of simples) for g.

    g_sum = gx/(1-x); g_skew = F(x^2)(1+g) with F the small Schroder
    series; simple roots are inflated with u^2 = f(x^2) (large Schroder)
    on left-to-right minima and v^2 = x^2/(1-x^2) on right-to-left maxima.
    Every term is linear in g.
    """
    x = UniSeries.x(order)
    one = UniSeries.one(order)
    f = large_schroder(order // 2 + 1)
    u2 = f.subs_power(2).truncate(order)
    v2 = (x * x) / (one - x * x)
    F = (f / (f + 1)).subs_power(2).truncate(order)
    dec = x / (one - x)
    t0, t1, t1s, t2 = _simple_terms(order, u2, v2)
    # g * (1 - dec - F - t1s - t2*dec) = x + F + t0 + t1*dec
    coeff_g = dec + F + t1s + t2 * dec - one
    constant = x + F + t0 + t1 * dec
    g = solve_quadratic(0, coeff_g, constant)
    _check_start(g)
    return g


def closed_2341(order: int = DEFAULT_ORDER) -> UniSeries:
    """((x+1)^4 (x-1)^10 sqrt(1 - 4x^2) - p(x)) / (2 q(x))."""
    p = lambda *cs: UniSeries.poly(list(cs), order)  # noqa: E731
    lead = p(1, 1) ** 4 * p(-1, 1) ** 10 * p(1, 0, -4).sqrt()
    return (lead - p(*P_2341)) / (p(*Q_2341) * 2)


def structural_2341(order: int = DEFAULT_ORDER) -> UniSeries:
    """Solve g = x + g^2/(1+g) + K, where K collects everything but sums.

    K = g_skew + inflations of 5274163 + inflations of simple 123-avoiding
    involutions (every entry inflated by a decreasing permutation).
    Clearing 1 + g cancels g^2, leaving g(1 - x - K) = x + K.
    """
    x = UniSeries.x(order)
    one = UniSeries.one(order)
    dec = x / (one - x)
    pair = (x * x) / (one - x * x)
    c2 = catalan(order // 2 + 1).subs_power(2).truncate(order)
    skew = x * x * (c2 + 1) * (central_binomial(order) + 1)
    special = pair ** 2 * dec ** 3
    t0, t1, _, t2 = _simple_terms(order, pair, pair)
    K = skew + special + t0 + t1 * dec * 2 + t2 * dec ** 2
    # from (1+g) g = (1+g)(x + K) + g^2
    g = solve_quadratic(0, x + K - one, x + K)
    _check_start(g)
    return g


def _agree(a: UniSeries, b: UniSeries, label: str) -> UniSeries:
    if a != b:
        k = next(k for k in range(min(a.order, b.order) + 1) if a[k] != b[k])
        raise ArithmeticError(f"{label}: closed form and decomposition differ at x^{k}: "
                              f"{a[k]} vs {b[k]}")
    return a


def assemble_1342(order: int = DEFAULT_ORDER) -> UniSeries:
    """Involutions avoiding 1342, checked by both constructions."""
    return _agree(closed_1342(order), structural_1342(order), "Av^I(1342)")


def assemble_2341(order: int = DEFAULT_ORDER) -> UniSeries:
    """Involutions avoiding 2341, checked by both constructions."""
    return _agree(closed_2341(order), structural_2341(order), "Av^I(2341)")
