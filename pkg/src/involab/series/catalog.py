"""Closed-form generating functions for the classes that appear as building blocks.

Class generating functions omit the empty permutation, so c_0 = 0.
"""

from __future__ import annotations

from .core import DEFAULT_ORDER, UniSeries, solve_quadratic

__all__ = ["KNOWN", "gf_known", "gf_separable_involutions",
           "separable_involutions_structural", "gf_word_pairs",
           "large_schroder", "small_schroder", "catalan", "central_binomial",
           "motzkin", "layered"]

# slack for divisions by series of positive valuation
_PAD = 4


def _poly(cs, order):
    return UniSeries.poly(cs, order)


def catalan(order: int = DEFAULT_ORDER) -> UniSeries:
    """(1 - 2x - sqrt(1 - 4x)) / (2x): Av(123), Av(132), ..."""
    n = order + _PAD
    num = _poly([1, -2], n) - _poly([1, -4], n).sqrt()
    return (num / _poly([0, 2], n)).truncate(order)


def large_schroder(order: int = DEFAULT_ORDER) -> UniSeries:
    """(1 - x - sqrt(1 - 6x + x^2)) / 2."""
    n = order
    return (_poly([1, -1], n) - _poly([1, -6, 1], n).sqrt()) / 2


def small_schroder(order: int = DEFAULT_ORDER) -> UniSeries:
    """f / (1 + f) for the large Schroder f, i.e. (1 + x - sqrt(1 - 6x + x^2)) / 4."""
    return (_poly([1, 1], order) - _poly([1, -6, 1], order).sqrt()) / 4


def layered(order: int = DEFAULT_ORDER) -> UniSeries:
    """x / (1 - 2x): sums of decreasing permutations."""
    return _poly([0, 1], order) / _poly([1, -2], order)


def central_binomial(order: int = DEFAULT_ORDER) -> UniSeries:
    """(1 - 4x^2 - sqrt(1 - 4x^2)) / (4x^2 - 2x): involutions avoiding 123 (or 321)."""
    n = order + _PAD
    num = _poly([1, 0, -4], n) - _poly([1, 0, -4], n).sqrt()
    return (num / _poly([0, -2, 4], n)).truncate(order)


def motzkin(order: int = DEFAULT_ORDER) -> UniSeries:
    """sum_{n>=1} M_n x^n: involutions avoiding 1234 (or 4321).

    M(x) = (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2) counts Motzkin paths.
    """
    n = order + _PAD
    m = (_poly([1, -1], n) - _poly([1, -2, -3], n).sqrt()) / _poly([0, 0, 2], n)
    return (m - 1).truncate(order)


KNOWN = {
    "catalan": catalan,
    "large_schroder": large_schroder,
    "small_schroder": small_schroder,
    "layered": layered,
    "central_binomial_involutions": central_binomial,
    "motzkin": motzkin,
}


def gf_known(name: str, order: int = DEFAULT_ORDER) -> UniSeries:
    try:
        build = KNOWN[name]
    except KeyError:
        raise KeyError(f"unknown series {name!r}; choose from {sorted(KNOWN)}") from None
    return build(order)


def gf_separable_involutions(order: int = DEFAULT_ORDER) -> UniSeries:
    """Involutions avoiding 2413 and 3142, from the radical closed form.

    g = (1 - 3x + x^2 + x^3 + r(1+x) - sqrt(q)) / (2(1 - r - x^2)) with
    r = sqrt(1 - 6x^2 + x^4) and q a polynomial in x and r.
    """
    n = order + _PAD
    p = lambda *cs: _poly(list(cs), n)  # noqa: E731
    r = p(1, 0, -6, 0, 1).sqrt()
    q = p(-6, -20, 38, 24, -18, -4, 2) + r * p(10, 12, -12, -4, 2)
    num = p(1, -3, 1, 1) + r * p(1, 1) - q.sqrt()
    den = (p(1, 0, -1) - r) * 2
    g = (num / den).truncate(order)
    return g


def separable_involutions_structural(order: int = DEFAULT_ORDER) -> UniSeries:
    """The same series from g = x + g^2/(1+g) + F(x^2)(1+g).

    F is the small Schroder series (skew-indecomposable separables); the
    equation rearranges to F g^2 + (x - 1 + 2F) g + (x + F) = 0.
    """
    F = small_schroder(order // 2 + 1).subs_power(2).truncate(order)
    x = UniSeries.x(order)
    g = solve_quadratic(F, x - 1 + F * 2, x + F)
    _check_start(g)
    return g


def gf_word_pairs(order: int = DEFAULT_ORDER) -> UniSeries:
    """h(x) = (1 + x) / (1 - 5x + x^2 - x^3), counting compatible label word pairs."""
    return _poly([1, 1], order) / _poly([1, -5, 1, -1], order)


def _check_start(g: UniSeries) -> None:
    # the class GF branch: no empty permutation, one permutation of length 1
    if g[0] != 0 or (g.order >= 1 and g[1] != 1):
        raise ArithmeticError(f"wrong branch: g starts {g.coeffs[:2]}")

