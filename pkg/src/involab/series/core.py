"""Truncated power series in one variable with exact rational coefficients.

A ``UniSeries`` of order N knows its coefficients c_0..c_N exactly and
nothing beyond.  Every operation returns a series whose order is the
smallest order that is still correct; dividing by a series of valuation v
costs v orders.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

DEFAULT_ORDER = 24


def normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def rational_sqrt(c: Number) -> Number:
    """Exact square root of a nonnegative rational square, else ValueError."""
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"{c} has no real square root")
    p, q = isqrt(c.numerator), isqrt(c.denominator)
    if p * p != c.numerator or q * q != c.denominator:
        raise ValueError(f"{c} is not the square of a rational")
    return normalize(Fraction(p, q))


class UniSeries:
    """c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = []
        for c in coeffs:
            if not isinstance(c, (int, Fraction)):
                raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
            cs.append(normalize(c))
        if order is None:
            order = len(cs) - 1
        if order < -1:
            raise ValueError("order must be >= -1")
        cs = cs[:order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        self.coeffs: list[Number] = cs
        self.order = order

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "UniSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "UniSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "UniSeries":
        return cls([0, 1], order)

    @classmethod
    def poly(cls, coeffs: Sequence[Number], order: int = DEFAULT_ORDER) -> "UniSeries":
        """An exact polynomial truncated to ``order``."""
        return cls(coeffs, order)

    @classmethod
    def monomial(cls, k: int, order: int = DEFAULT_ORDER, c: Number = 1) -> "UniSeries":
        return cls([0] * k + [c], order)

    # -- access -------------------------------------------------------
    def __getitem__(self, k: int) -> Number:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} outside order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order + 1

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if zero to this order."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return UniSeries(self.coeffs, order)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def integers(self) -> list[int]:
        """Coefficients as ints; raises if any is not an integer."""
        if not self.is_integral():
            bad = next(k for k, c in enumerate(self.coeffs) if not isinstance(c, int))
            raise ValueError(f"coefficient {bad} is not an integer: {self.coeffs[bad]}")
        return list(self.coeffs)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "UniSeries":
        if isinstance(other, UniSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return UniSeries([other], self.order)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n + 1] == other.coeffs[:n + 1]

    def __hash__(self):
        raise TypeError("UniSeries is unhashable")

    def __neg__(self) -> "UniSeries":
        return UniSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "UniSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return UniSeries([a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __sub__(self, other) -> "UniSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniSeries":
        return (-self) + other

    def __mul__(self, other) -> "UniSeries":
        if isinstance(other, (int, Fraction)):
            return UniSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, UniSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return UniSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = UniSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "UniSeries":
        """Multiply by x^k (k >= 0) or divide exactly by x^(-k)."""
        if k >= 0:
            return UniSeries([0] * k + self.coeffs, self.order + k)
        k = -k
        if any(self.coeffs[:k]):
            raise ZeroDivisionError(f"series is not divisible by x^{k}")
        return UniSeries(self.coeffs[k:], self.order - k)

    def inverse(self) -> "UniSeries":
        """1/self; the constant term must be nonzero."""
        c0 = self.coeffs[0] if self.order >= 0 else 0
        if not c0:
            raise ZeroDivisionError("inverse needs a nonzero constant term")
        n = self.order
        inv0 = Fraction(1) / c0
        out: list[Number] = [normalize(inv0)]
        a = self.coeffs
        for k in range(1, n + 1):
            s = sum(a[i] * out[k - i] for i in range(1, k + 1) if a[i])
            out.append(normalize(-s * inv0))
        return UniSeries(out, n)

    def __truediv__(self, other) -> "UniSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return UniSeries([normalize(Fraction(c) / other) for c in self.coeffs], self.order)
        if not isinstance(other, UniSeries):
            return NotImplemented
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that is zero to its order")
        num, den = self, other
        if v:
            num, den = num.shift(-v), den.shift(-v)
        return num * den.inverse()

    def __rtruediv__(self, other) -> "UniSeries":
        return self._coerce(other) / self

    # -- analytic operations ------------------------------------------
    def sqrt(self) -> "UniSeries":
        """Square root with the same sign of constant term as its rational root.

        Newton iteration s <- (s + a/s) / 2, doubling the correct precision
        each round.  The constant term must be the square of a nonzero
        rational.
        """
        n = self.order
        s0 = rational_sqrt(self.coeffs[0])
        if not s0:
            raise ValueError("sqrt needs a nonzero constant term")
        s = UniSeries([s0], 0)
        prec = 0
        while prec < n:
            prec = min(2 * prec + 1, n)
            a = self.truncate(prec)
            s = UniSeries(s.coeffs, prec)
            s = (s + a / s) * Fraction(1, 2)
        return UniSeries(s.coeffs, n)

    def compose(self, g: "UniSeries") -> "UniSeries":
        """self(g(x)); g must have zero constant term."""
        if g.order >= 0 and g.coeffs[0]:
            raise ValueError("compose needs g(0) = 0")
        n = min(self.order, g.order) if g.order >= 0 else self.order
        g = g.truncate(n) if g.order > n else g
        result = UniSeries([self.coeffs[n]] if n >= 0 else [], n)
        for k in range(n - 1, -1, -1):
            result = result * g + self.coeffs[k]
        return result

    def subs_power(self, k: int) -> "UniSeries":
        """self(x^k) for k >= 1, with order k * N."""
        if k < 1:
            raise ValueError("power must be positive")
        out = [0] * (k * self.order + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return UniSeries(out, k * self.order)

    def derivative(self) -> "UniSeries":
        return UniSeries([k * c for k, c in enumerate(self.coeffs)][1:], self.order - 1)

    # -- output -------------------------------------------------------
    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(c)
            if mon and c == 1:
                coef = ""
            elif mon and c == -1:
                coef = "-"
            elif mon and isinstance(c, Fraction):
                coef = f"({c})"
            terms.append(f"{coef}{'*' if coef not in ('', '-') and mon else ''}{mon}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(x^{self.order + 1})"

    def bfile(self, start: int = 1) -> str:
        """OEIS b-file lines ``n a(n)`` for n = start..order."""
        return "".join(f"{k} {c}\n" for k, c in enumerate(self.integers()) if k >= start)

    def to_json(self, start: int = 0) -> str:
        return json.dumps([str(c) for c in self.coeffs[start:]])


def solve_quadratic(A: UniSeries | Number, B: UniSeries, C: UniSeries) -> UniSeries:
    """The root g with g(0) = 0 of A g^2 + B g + C = 0.

    Newton iteration from g = 0; needs C(0) = 0 and B(0) != 0 (A may be 0,
    in which case the equation is linear).
    """
    if C.coeffs[0]:
        raise ValueError("a root with g(0) = 0 needs C(0) = 0")
    if not B.coeffs[0]:
        raise ValueError("B(0) must be nonzero for a unique power series root")
    if not isinstance(A, UniSeries):
        A = UniSeries([A], B.order)
    n = min(A.order, B.order, C.order)
    A, B, C = A.truncate(n), B.truncate(n), C.truncate(n)
    g = UniSeries.zero(n)
    prec = 0
    while True:
        step = (A * g * g + B * g + C) / (A * g * 2 + B)
        g = g - step
        if step.valuation() is None:
            break
        prec += 1
        if prec > n + 2:
            raise ArithmeticError("Newton iteration did not converge")
    return g
