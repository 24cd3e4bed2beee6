"""Simple 123-avoiding involutions by number of fixed points.

Two routes to the same series:

* closed forms in x (and refined ones in u, v, with u marking left-to-right
  minima and v right-to-left maxima);
* the staircase recurrence itself: a stage-2 configuration series in which
  marker variables stand for hollow dots still to be filled, advanced one
  cell at a time by substituting for the markers, and finally evaluated at
  the fixed point of the advance map.

Case i counts the involutions with i fixed points (i = 0, 1, 2; a 123-avoider
has at most two).  For i = 1 the refined series covers only the case where
the fixed point is a right-to-left maximum; swapping u and v gives the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import DEFAULT_ORDER, UniSeries
from .multi import BiSeries, MultiSeries, bivariate

__all__ = ["SubstitutionState", "staircase_closed", "staircase_closed_refined",
           "staircase_iterate", "stage_two", "stage_two_sum", "CASES"]

CASES = (0, 1, 2)

PLAIN = (("x", "y", "z", "w"), (1, 0, 0, 0))
REFINED = (("u", "v", "yu", "yv", "z", "w"), (1, 1, 0, 0, 0, 0))


def _check_case(i: int) -> None:
    if i not in CASES:
        raise ValueError(f"fixed-point count must be 0, 1 or 2, got {i}")


def _ring(refined: bool, order: int) -> MultiSeries:
    names, weights = REFINED if refined else PLAIN
    return MultiSeries.ring(names, weights, order)


# -- closed forms -------------------------------------------------------

def staircase_closed(i: int, order: int = DEFAULT_ORDER) -> UniSeries:
    """s^(i)(x) from its closed form, D = 1 - 2x^2 - 3x^4."""
    _check_case(i)
    n = order
    p = lambda *cs: UniSeries.poly(list(cs), n)  # noqa: E731
    d = p(1, 0, -2, 0, -3).sqrt()
    if i == 1:
        num = p(0, 0, 0, 0, 0, 2) * (p(1, 0, 1) + d)
        den = p(1, 0, 1) ** 2 * (p(1, 0, -3) + p(1, 0, -2) * d)
    elif i == 0:
        num = p(0, 0, 0, 0, 0, 0, 2) * (p(1, 0, 1) - d)
        den = p(2, 0, -2, 0, -10, 0, -6) + p(2, 0, 0, 0, -6, 0, -4) * d
    else:
        num = p(0, 0, 0, 0, 1) * (p(2, 0, 5, 0, 3) - p(2, 0, 1) * d)
        den = p(1, 0, -1, 0, -5, 0, -3) + p(1, 0, 2, 0, 1) * d
    return num / den


def _radical(ring: BiSeries) -> tuple[BiSeries, BiSeries]:
    """R = 1 - 6u^2v^2 - 4u^2v^4 - 4u^4v^2 - 3u^4v^4 and r = sqrt(R)."""
    R = ring._like({(0, 0): 1, (2, 2): -6, (2, 4): -4, (4, 2): -4, (4, 4): -3})
    return R, R.sqrt()


def staircase_closed_refined(i: int, order: int = DEFAULT_ORDER) -> BiSeries:
    """ŝ^(i)(u, v) from its closed form, truncated at total degree ``order``."""
    _check_case(i)
    ring = bivariate(order)
    R, r = _radical(ring)
    m = lambda terms: ring._like(terms)  # noqa: E731
    if i == 1:
        num = m({(2, 3): 1, (4, 3): 1}) * (m({(0, 0): 1, (0, 2): 2, (2, 2): 1}) + r)
        den = m({(0, 0): 1, (0, 2): 1}) * (R + m({(0, 0): 1, (2, 2): -3, (4, 2): -2}) * r)
    elif i == 0:
        num = m({(2, 4): 2, (4, 4): 2}) * (m({(0, 0): 1, (2, 0): 2, (2, 2): 1}) - r)
        den = ((m({(0, 0): 1, (2, 2): -1}) + r)
               * (R + m({(0, 0): 1, (0, 2): 2, (2, 2): 1}) * r))
    else:
        num = m({(1, 3): 1}) * (m({(0, 0): 2, (2, 0): 7, (2, 2): 4, (4, 0): 4, (4, 2): 3})
                                - m({(0, 0): 2, (2, 0): 1}) * r)
        den = R + m({(0, 0): 1, (0, 2): 2, (2, 2): 1}) * r
    return num / den


# -- the recurrence -----------------------------------------------------

def _names(refined: bool) -> dict[str, str]:
    # filled dots in the initial cell / below it, and the hollow-dot marker below it
    if refined:
        return {"top": "v", "low": "u", "y": "yu"}
    return {"top": "x", "low": "x", "y": "y"}


def stage_two(i: int, refined: bool = False, order: int = DEFAULT_ORDER) -> MultiSeries:
    """The stage-2 configuration series in closed form.

    Unrefined: s_2^(1) = 2x^3 z (1+y) / ((1-x^2y)(1-2x^2y-x^2y^2)),
    s_2^(0) = x^4 y z (1+y) / (same), s_2^(2) = x^2(w + 2x^2y + x^2y^2)/(1-2x^2y-x^2y^2).
    The refined versions put v on the initial cell, u on the cell below and
    y_u on its hollow dots, and drop the factor 2 of the one-fixed-point case.
    """
    _check_case(i)
    ring = _ring(refined, order)
    nm = _names(refined)
    t, lo, y = ring.var(nm["top"]), ring.var(nm["low"]), ring.var(nm["y"])
    z, w = ring.var("z"), ring.var("w")
    one = ring.const(1)
    geo = one - t * t * y
    quad = one - t * t * y * 2 - t * t * y * y
    if i == 1:
        lead = 1 if refined else 2
        return t ** 3 * z * (one + y) * lead / (geo * quad)
    if i == 0:
        return t ** 4 * y * z * (one + y) / (geo * quad)
    # two fixed points: one in the initial cell, one at its south-west corner
    pair = t * lo
    return pair * (w + t * t * y * 2 + t * t * y * y) / quad


def stage_two_sum(i: int, refined: bool = False, order: int = DEFAULT_ORDER) -> MultiSeries:
    """Stage 2 built term by term from the hollow-dot placements.

    An initial cell holding 2k (+1) entries has 2^(k-j) C(k, j) ways to put
    k + j hollow dots in the cell below.  The skew-decomposable placements
    are subtracted and the topmost hollow dot is re-marked by z.
    """
    _check_case(i)
    ring = _ring(refined, order)
    nm = _names(refined)
    ti, yi = ring.names.index(nm["top"]), ring.names.index(nm["y"])
    t, y = ring.var(nm["top"]), ring.var(nm["y"])
    lo = ring.var(nm["low"])
    z, w = ring.var("z"), ring.var("w")

    def mono(top: int, ys: int, c: int) -> dict:
        e = [0] * len(ring.names)
        e[ti], e[yi] = top, ys
        return {tuple(e): c}

    terms: dict = {}

    def add(d):
        for e, c in d.items():
            terms[e] = terms.get(e, 0) + c

    kmax = order // 2 + 1
    if i == 1:
        for k in range(kmax + 1):
            for j in range(k + 1):
                add(mono(2 * k + 1, k + j, 2 ** (k - j) * comb(k, j)))
        body = ring._like(terms) - t / (1 - t * t * y)
        lead = 1 if refined else 2
        return (body * z * lead).div_monomial(**{nm["y"]: 1})
    if i == 0:
        for k in range(1, kmax + 1):
            for j in range(k):
                add(mono(2 * k, k + j, 2 ** (k - j - 1) * comb(k - 1, j)))
        body = ring._like(terms) - t * t * y / (1 - t * t * y)
        return (body * z).div_monomial(**{nm["y"]: 1})
    for k in range(kmax + 1):
        for j in range(k + 1):
            add(mono(2 * k, k + j, 2 ** (k - j) * comb(k, j)))
    return t * lo * (1 + w) * ring._like(terms) - t * lo


def _advance_map(ring: MultiSeries, refined: bool, stage: int, i: int) -> dict:
    """Marker substitutions that turn stage n into stage n + 1."""
    one = ring.const(1)
    if refined:
        u, v, yu, yv = ring.var("u"), ring.var("v"), ring.var("yu"), ring.var("yv")
        mapping = {
            "yu": u * u * (one + yv) / (one - u * u * yv),
            "yv": v * v * (one + yu) / (one - v * v * yu),
        }
        low, ylow = u, yv
    else:
        x, y = ring.var("x"), ring.var("y")
        mapping = {"y": x * x * (one + y) / (one - x * x * y)}
        low, ylow = x, y
    if stage == 2:
        # the required top hollow dot may not have a new dot to its left
        mapping["z"] = low * low / (one - low * low * ylow)
        # the w-dot must spawn at least one dot in the next cell
        mapping["w"] = low * low * ylow / (one - low * low * ylow)
    return mapping


def _fixed_point(ring: MultiSeries, refined: bool) -> dict:
    """Marker values fixed by the advance map (computed two orders deeper)."""
    deep = MultiSeries.ring(ring.names, ring.weights, ring.order + 2)
    one = deep.const(1)
    if refined:
        u, v = deep.var("u"), deep.var("v")
        uv = u * u * v * v
        R = one - uv * 6 - uv * v * v * 4 - uv * u * u * 4 - uv * uv * 3
        yv = (one - uv - R.sqrt()).div_monomial(u=2) / ((one + v * v) * 2)
        yv = yv.truncate(ring.order)
        uu = ring.var("u") * ring.var("u")
        yu = uu * (ring.const(1) + yv) / (ring.const(1) - uu * yv)
        return {"yu": yu, "yv": yv}
    x = deep.var("x")
    D = one - x * x * 2 - x ** 4 * 3
    y = (one - x * x - D.sqrt()).div_monomial(x=2) / 2
    return {"y": y.truncate(ring.order)}


@dataclass(frozen=True)
class SubstitutionState:
    """Stage ``stage`` of the staircase recurrence for ``fixed_points`` fixed points."""

    fixed_points: int
    stage: int
    refined: bool
    expr: MultiSeries

    def advance(self) -> "SubstitutionState":
        mapping = _advance_map(self.expr, self.refined, self.stage, self.fixed_points)
        return SubstitutionState(self.fixed_points, self.stage + 1, self.refined,
                                 self.expr.substitute(mapping))

    def completed(self) -> UniSeries | BiSeries:
        """Configurations with no hollow dots left: finished permutations."""
        markers = [n for n, w in zip(self.expr.names, self.expr.weights) if w == 0]
        done = self.expr.substitute({m: 0 for m in markers})
        return self._project(done)

    def at_fixed_point(self) -> UniSeries | BiSeries:
        """Fill every remaining hollow dot by the fixed point of the advance map.

        Only meaningful from stage 3 on, once z and w have been substituted.
        """
        if self.stage < 3:
            raise ValueError("z and w are only resolved from stage 3 on")
        done = self.expr.substitute(_fixed_point(self.expr, self.refined))
        return self._project(done)

    def _project(self, s: MultiSeries) -> UniSeries | BiSeries:
        if self.refined:
            out = s.restrict(("u", "v"))
            return BiSeries(out.terms, out.order)
        return s.restrict(("x",)).to_uni()


def staircase_iterate(i: int, stage: int, refined: bool = False,
                      order: int = DEFAULT_ORDER) -> SubstitutionState:
    """The stage-``stage`` configuration series, starting from stage 2."""
    _check_case(i)
    if stage < 2:
        raise ValueError("the recurrence starts at stage 2")
    state = SubstitutionState(i, 2, refined, stage_two(i, refined, order))
    while state.stage < stage:
        state = state.advance()
    return state
