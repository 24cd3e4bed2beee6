"""Sparse truncated series in several variables.

Each variable carries a weight.  Terms whose weighted degree exceeds the
order are dropped.  Weight-0 variables act as formal markers (hollow dots
in the staircase construction); they are only safe where every marker is
accompanied by enough weighted variables to keep the number of terms
finite, which is the caller's responsibility.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import Number, UniSeries, normalize, rational_sqrt

Exp = tuple[int, ...]


class MultiSeries:
    __slots__ = ("names", "weights", "terms", "order")

    def __init__(self, names: Sequence[str], weights: Sequence[int],
                 terms: Mapping[Exp, Number] | None = None, order: int = 24):
        if len(names) != len(weights):
            raise ValueError("one weight per variable")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.order = order
        self.terms: dict[Exp, Number] = {}
        for e, c in (terms or {}).items():
            if c and self.degree(e) <= order:
                self.terms[tuple(e)] = normalize(c)

    # -- constructors -------------------------------------------------
    def _like(self, terms: Mapping[Exp, Number], order: int | None = None) -> "MultiSeries":
        out = object.__new__(type(self))
        out.names, out.weights = self.names, self.weights
        out.order = self.order if order is None else order
        out.terms = {e: normalize(c) for e, c in terms.items()
                     if c and self.degree(e) <= out.order}
        return out

    def const(self, c: Number) -> "MultiSeries":
        return self._like({(0,) * len(self.names): c})

    def var(self, name: str) -> "MultiSeries":
        e = [0] * len(self.names)
        e[self.names.index(name)] = 1
        return self._like({tuple(e): 1})

    def gens(self) -> tuple["MultiSeries", ...]:
        return tuple(self.var(n) for n in self.names)

    @classmethod
    def ring(cls, names: Sequence[str], weights: Sequence[int], order: int) -> "MultiSeries":
        """The zero series of a ring; use ``.gens()`` and ``.const()`` from it."""
        return cls(names, weights, {}, order)

    # -- structure ----------------------------------------------------
    def degree(self, e: Exp) -> int:
        return sum(a * w for a, w in zip(e, self.weights))

    def _check(self, other: "MultiSeries") -> None:
        if other.names != self.names or other.weights != self.weights:
            raise ValueError(f"series over {other.names} and {self.names} do not mix")

    def _coerce(self, other):
        if isinstance(other, MultiSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.const(other)
        return NotImplemented

    def constant_term(self) -> Number:
        return self.terms.get((0,) * len(self.names), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, **exps: int) -> Number:
        e = tuple(exps.get(n, 0) for n in self.names)
        return self.terms.get(e, 0)

    def max_exponent(self, name: str) -> int:
        i = self.names.index(name)
        return max((e[i] for e in self.terms), default=0)

    def truncate(self, order: int) -> "MultiSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return self._like(self.terms, order)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        a = {e: c for e, c in self.terms.items() if self.degree(e) <= n}
        b = {e: c for e, c in other.terms.items() if self.degree(e) <= n}
        return a == b

    def __hash__(self):
        raise TypeError("MultiSeries is unhashable")

    # -- arithmetic ---------------------------------------------------
    def __neg__(self) -> "MultiSeries":
        return self._like({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MultiSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out, min(self.order, other.order))

    __radd__ = __add__

    def __sub__(self, other) -> "MultiSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiSeries":
        return (-self) + other

    def __mul__(self, other) -> "MultiSeries":
        if isinstance(other, (int, Fraction)):
            return self._like({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        left = [(e, c, self.degree(e)) for e, c in self.terms.items()]
        right = sorted(((e, c, self.degree(e)) for e, c in other.terms.items()),
                       key=lambda t: t[2])
        out: dict[Exp, Number] = {}
        for e1, c1, d1 in left:
            room = n - d1
            for e2, c2, d2 in right:
                if d2 > room:
                    break
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _positive_part(self) -> tuple[Number, "MultiSeries"]:
        """Split into constant c and a remainder of positive weighted valuation."""
        zero = (0,) * len(self.names)
        rest = {e: c for e, c in self.terms.items() if e != zero}
        if any(self.degree(e) == 0 for e in rest):
            raise ValueError("weight-0 part is not a constant; series is not invertible here")
        return self.terms.get(zero, 0), self._like(rest)

    def _apply_uni(self, coeffs: Sequence[Number], t: "MultiSeries") -> "MultiSeries":
        # sum coeffs[k] t^k by Horner; t has weighted valuation >= 1
        result = self.const(coeffs[-1]) if coeffs else self.const(0)
        for c in reversed(coeffs[:-1]):
            result = result * t + c
        return result

    def inverse(self) -> "MultiSeries":
        c, t = self._positive_part()
        if not c:
            raise ZeroDivisionError("inverse needs a nonzero constant term")
        inv = Fraction(1) / c
        # 1/(c + t) = (1/c) sum (-t/c)^k
        coeffs = [normalize(inv * (-inv) ** k) for k in range(self.order + 1)]
        return self._apply_uni(coeffs, t)

    def __truediv__(self, other) -> "MultiSeries":
        if isinstance(other, (int, Fraction)):
            return self._like({e: Fraction(c) / other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "MultiSeries":
        return self._coerce(other) / self

    def sqrt(self) -> "MultiSeries":
        """Square root via the binomial series around a rational square constant."""
        c, t = self._positive_part()
        s0 = rational_sqrt(c)
        if not s0:
            raise ValueError("sqrt needs a nonzero constant term")
        # sqrt(c + t) = s0 * sum binom(1/2, k) (t/c)^k
        coeffs, b = [], Fraction(1)
        for k in range(self.order + 1):
            coeffs.append(normalize(s0 * b / Fraction(c) ** k))
            b = b * (Fraction(1, 2) - k) / (k + 1)
        return self._apply_uni(coeffs, t)

    def div_monomial(self, **exps: int) -> "MultiSeries":
        """Exact division by a monomial; raises if some term is not divisible."""
        d = tuple(exps.get(n, 0) for n in self.names)
        out = {}
        for e, c in self.terms.items():
            q = tuple(a - b for a, b in zip(e, d))
            if min(q) < 0:
                raise ZeroDivisionError(f"term {e} is not divisible by {d}")
            out[q] = c
        return self._like(out, self.order - self.degree(d))

    def mul_monomial(self, **exps: int) -> "MultiSeries":
        d = tuple(exps.get(n, 0) for n in self.names)
        return self._like({tuple(a + b for a, b in zip(e, d)): c
                           for e, c in self.terms.items()})

    # -- substitution -------------------------------------------------
    def substitute(self, mapping: Mapping[str, "MultiSeries | Number"]) -> "MultiSeries":
        """Simultaneously replace variables by series of the same ring.

        Terms are grouped by the exponents of the replaced variables so each
        distinct power product is formed once.
        """
        idx = [self.names.index(n) for n in mapping]
        vals = [self._coerce(mapping[n]) for n in mapping]
        groups: dict[Exp, dict[Exp, Number]] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            g = groups.setdefault(key, {})
            g[tuple(rest)] = c
        powers: list[dict[int, MultiSeries]] = [{0: self.const(1)} for _ in idx]

        def power(j: int, k: int) -> MultiSeries:
            cache = powers[j]
            if k not in cache:
                cache[k] = power(j, k - 1) * vals[j]
            return cache[k]

        out = self.const(0)
        for key, rest in groups.items():
            prod = self._like(rest)
            for j, k in enumerate(key):
                if k:
                    prod = prod * power(j, k)
            out = out + prod
        return out.truncate(min([self.order] + [v.order for v in vals]))

    def restrict(self, names: Sequence[str], weights: Sequence[int] | None = None,
                 order: int | None = None) -> "MultiSeries":
        """Move into a ring with fewer variables; dropped variables must be absent."""
        keep = [self.names.index(n) for n in names]
        drop = [i for i in range(len(self.names)) if i not in keep]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise ValueError(f"variable {self.names[next(i for i in drop if e[i])]} "
                                 "still present")
            out[tuple(e[i] for i in keep)] = c
        w = tuple(weights) if weights is not None else tuple(self.weights[i] for i in keep)
        return MultiSeries(names, w, out, self.order if order is None else order)

    def to_uni(self, var: str | None = None) -> UniSeries:
        """The series as a UniSeries in its single weighted variable."""
        if var is None:
            if len(self.names) != 1:
                raise ValueError("name the variable to read off")
            var = self.names[0]
        i = self.names.index(var)
        coeffs = [0] * (self.order + 1)
        for e, c in self.terms.items():
            if any(a for j, a in enumerate(e) if j != i):
                raise ValueError(f"other variables remain in term {e}")
            coeffs[e[i]] += c
        return UniSeries(coeffs, self.order)

    def specialize_equal(self, order: int | None = None) -> UniSeries:
        """Set every weighted variable to the same x (markers must be absent)."""
        n = self.order if order is None else order
        coeffs = [0] * (n + 1)
        for e, c in self.terms.items():
            if any(a for a, w in zip(e, self.weights) if w == 0):
                raise ValueError("markers remain")
            d = self.degree(e)
            if d <= n:
                coeffs[d] += c
        return UniSeries(coeffs, n)

    def substitute_squares(self, values: Mapping[str, UniSeries]) -> UniSeries:
        """Evaluate with var^2 -> values[var]; every exponent must be even.

        Each value must have valuation >= its variable's weight times 2, so
        the result is correct to the series order.
        """
        order = self.order
        for n, v in values.items():
            order = min(order, v.order)
        idx = [self.names.index(n) for n in values]
        vals = list(values.values())
        cache: dict[tuple[int, int], UniSeries] = {}

        def power(j: int, k: int) -> UniSeries:
            if (j, k) not in cache:
                cache[(j, k)] = UniSeries.one(order) if k == 0 else power(j, k - 1) * vals[j]
            return cache[(j, k)]

        total = UniSeries.zero(order)
        for e, c in self.terms.items():
            if len(idx) != len(self.names) and any(
                    a for i, a in enumerate(e) if i not in idx):
                raise ValueError("unsubstituted variables remain")
            if any(e[i] % 2 for i in idx):
                raise ValueError(f"odd exponent in term {e}")
            term = UniSeries([c], order)
            for j, i in enumerate(idx):
                if e[i]:
                    term = term * power(j, e[i] // 2)
            total = total + term
        return total

    def swap(self, a: str, b: str) -> "MultiSeries":
        """Exchange two variables of equal weight."""
        i, j = self.names.index(a), self.names.index(b)
        if self.weights[i] != self.weights[j]:
            raise ValueError("swapped variables must share a weight")
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = c
        return self._like(out)

    def coefficients(self) -> dict[Exp, Number]:
        return dict(self.terms)

    def __repr__(self) -> str:
        def mono(e):
            parts = [n if a == 1 else f"{n}^{a}" for n, a in zip(self.names, e) if a]
            return "*".join(parts) or "1"
        items = sorted(self.terms.items(), key=lambda t: (self.degree(t[0]), t[0]))
        body = " + ".join(f"{c}*{mono(e)}" for e, c in items) or "0"
        return f"{body} + O(deg {self.order + 1})"


class BiSeries(MultiSeries):
    """A series in u and v truncated at total degree ``order``."""

    __slots__ = ()

    def __init__(self, terms: Mapping[Exp, Number] | None = None, order: int = 24,
                 names: tuple[str, str] = ("u", "v")):
        super().__init__(names, (1, 1), terms, order)

    def __getitem__(self, ij: tuple[int, int]) -> Number:
        return self.terms.get(tuple(ij), 0)


def bivariate(order: int, names: tuple[str, str] = ("u", "v")) -> BiSeries:
    """The zero series of Q[[u, v]] truncated at total degree ``order``."""
    return BiSeries({}, order, names)


def expand_double_sum(ring: MultiSeries, weight: Iterable[tuple[Exp, Number]]) -> MultiSeries:
    """Build a series from explicit (exponent, coefficient) pairs."""
    out: dict[Exp, Number] = {}
    for e, c in weight:
        out[e] = out.get(e, 0) + c
    return ring._like(out)


__all__ = ["MultiSeries", "BiSeries", "bivariate", "expand_double_sum"]
