import json
from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from involab import enumeration as en
from involab.perm import Permutation
from involab.series import (BiSeries, MultiSeries, UniSeries, catalan,
                            central_binomial, gf_known, gf_separable_involutions,
                            gf_word_pairs, large_schroder, layered, motzkin,
                            separable_involutions_structural, small_schroder,
                            solve_quadratic)

from conftest import brute_count

N = 12
coeff = st.integers(-5, 5)
series = st.lists(coeff, min_size=N + 1, max_size=N + 1).map(lambda cs: UniSeries(cs, N))
unit = series.map(lambda s: s - s[0] + 1)
no_const = series.map(lambda s: s - s[0])


def binomial_half(a, n):
    """Coefficients of (1 + a x)^(1/2) from the generalized binomial theorem."""
    out, c = [], Fraction(1)
    for k in range(n + 1):
        out.append(c * Fraction(a) ** k)
        c = c * (Fraction(1, 2) - k) / (k + 1)
    return out


class TestUniSeries:
    def test_sqrt_against_binomial(self):
        s = UniSeries.poly([1, -4], 15).sqrt()
        assert s.coeffs == binomial_half(-4, 15)
        assert s.coeffs[:4] == [1, -2, -2, -4]

    def test_sqrt_of_square_constant(self):
        s = UniSeries.poly([4, 4, 1], 10).sqrt()
        assert s == UniSeries.poly([2, 1], 10)
        with pytest.raises(ValueError):
            UniSeries.poly([2, 1], 5).sqrt()
        with pytest.raises(ValueError):
            UniSeries.poly([0, 1], 5).sqrt()

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            UniSeries([1.0, 2])

    def test_compose_with_zero(self):
        f = UniSeries.poly([3, 1, 4, 1, 5], 6)
        assert f.compose(UniSeries.zero(6)) == UniSeries([3], 6)
        with pytest.raises(ValueError):
            f.compose(UniSeries.poly([1, 1], 6))

    def test_division_costs_valuation(self):
        q = UniSeries.poly([0, 0, 1, 1], 10) / UniSeries.poly([0, 0, 1], 10)
        assert q.order == 8 and q == UniSeries.poly([1, 1], 8)
        with pytest.raises(ZeroDivisionError):
            UniSeries.zero(4).inverse()

    def test_output_formats(self):
        g = UniSeries([0, 1, 2, 5], 3)
        assert g.bfile() == "1 1\n2 2\n3 5\n"
        assert json.loads(g.to_json()) == ["0", "1", "2", "5"]
        big = UniSeries([0, 10 ** 30], 1)
        assert json.loads(big.to_json())[1] == str(10 ** 30)
        with pytest.raises(ValueError):
            UniSeries([Fraction(1, 2)]).integers()

    @settings(max_examples=40, deadline=None)
    @given(series, series, series)
    def test_ring_laws(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(unit)
    def test_inverse_and_sqrt(self, a):
        assert a * a.inverse() == UniSeries.one(N)
        r = a.sqrt()
        assert r * r == a

    @settings(max_examples=30, deadline=None)
    @given(series, no_const, no_const)
    def test_compose_associative(self, f, g, h):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))

    @settings(max_examples=30, deadline=None)
    @given(series, unit, no_const)
    def test_solve_quadratic_residual(self, a, b, c):
        g = solve_quadratic(a, b, c)
        assert g[0] == 0
        assert a * g * g + b * g + c == UniSeries.zero(N)

    def test_solve_quadratic_preconditions(self):
        x = UniSeries.x(5)
        with pytest.raises(ValueError):
            solve_quadratic(1, UniSeries.one(5), x + 1)
        with pytest.raises(ValueError):
            solve_quadratic(1, x, x)


def _large_schroder_seq(n):
    # large Schroder r_k by (k+1) r_k = 3(2k-1) r_{k-1} - (k-2) r_{k-2}
    r = [1, 2]
    while len(r) <= n:
        k = len(r)
        r.append((3 * (2 * k - 1) * r[-1] - (k - 2) * r[-2]) // (k + 1))
    return r


class TestCatalog:
    def test_catalan(self):
        c = catalan(12)
        assert c.coeffs[1:5] == [1, 2, 5, 14]
        assert all(c[n] == comb(2 * n, n) // (n + 1) for n in range(1, 13))
        assert c[0] == 0  # no empty permutation

    def test_schroder(self):
        r = _large_schroder_seq(15)
        f = large_schroder(15)
        assert [f[n] for n in range(1, 16)] == r[:15]
        s = small_schroder(10)
        assert [s[n] for n in range(1, 6)] == [1, 1, 3, 11, 45]
        # large = 2 * small beyond the first term
        assert all(f[n] == 2 * s[n] for n in range(2, 11))

    def test_small_schroder_from_quadratic(self):
        # f^2 - (1 - x) f + x = 0
        x = UniSeries.x(14)
        f = solve_quadratic(-1, UniSeries.one(14) - x, -x)
        assert f == large_schroder(14)
        assert f / (f + 1) == small_schroder(14)

    def test_layered_and_central_binomial(self):
        assert layered(8).coeffs == [0] + [2 ** (n - 1) for n in range(1, 9)]
        cb = central_binomial(14)
        assert cb.coeffs[1:5] == [1, 2, 3, 6]
        assert all(cb[n] == comb(n, n // 2) for n in range(1, 15))

    def test_motzkin(self):
        m = [1, 1]
        for n in range(2, 16):
            m.append(m[-1] + sum(m[k] * m[n - 2 - k] for k in range(n - 1)))
        assert motzkin(15).coeffs == [0] + m[1:16]

    def test_known_names(self):
        assert gf_known("catalan", 5) == catalan(5)
        with pytest.raises(KeyError):
            gf_known("fibonacci")

    def test_enumeration_agrees_for_small_classes(self):
        t123 = en.count_table([Permutation.parse("123")], 14)
        t1234 = en.count_table([Permutation.parse("1234")], 14)
        cb, m = central_binomial(14), motzkin(14)
        for n in range(1, 15):
            assert cb[n] == t123[n]
            assert m[n] == t1234[n]


class TestSeparable:
    def test_reference_values(self):
        g = gf_separable_involutions(20)
        assert g[11] == 9600
        assert g[20] == 133517130

    def test_two_constructions_agree(self):
        assert gf_separable_involutions(24) == separable_involutions_structural(24)

    def test_brute_force(self):
        g = gf_separable_involutions(8)
        basis = [(2, 4, 1, 3), (3, 1, 4, 2)]
        for n in range(1, 9):
            assert g[n] == brute_count(basis, n)

    def test_enumeration(self):
        g = gf_separable_involutions(14)
        t = en.count_table([(2, 4, 1, 3), (3, 1, 4, 2)], 14)
        assert all(g[n] == t[n] for n in range(1, 15))


class TestWordPairs:
    def test_first_terms(self):
        h = gf_word_pairs(12)
        assert h[0] == 1 and h[1] == 6
        # brute force over all 16 letter pairs for h_1
        letters = "abcd"
        ok = [(p, q) for p in letters for q in letters
              if (p == "a") == (q == "a") and (p == "d") == (q == "d")]
        assert len(ok) == h[1]

    def test_brute_force_small_lengths(self):
        h = gf_word_pairs(4)
        for n in range(5):
            words = ["".join(w) for w in product("abcd", repeat=n)]
            good = [w for w in words if "cb" not in w]
            count = sum(1 for e in good for v in good
                        if all((p == "a") == (q == "a") and (p == "d") == (q == "d")
                               for p, q in zip(e, v)))
            assert count == h[n]


class TestMultiSeries:
    def test_arithmetic_and_truncation(self):
        ring = MultiSeries.ring(("x", "y"), (1, 0), 4)
        x, y = ring.gens()
        s = (x + y) * (x - y)
        assert s.coefficient(x=2) == 1 and s.coefficient(y=2) == -1
        inv = (ring.const(1) - x * y).inverse()
        assert inv.coefficient(x=3, y=3) == 1
        assert inv.coefficient(x=5, y=5) == 0

    def test_substitute_matches_univariate(self):
        ring = MultiSeries.ring(("x", "y"), (1, 0), 10)
        x, y = ring.gens()
        expr = (ring.const(1) + y) / (ring.const(1) - x * y)
        done = expr.substitute({"y": x * x}).restrict(("x",)).to_uni()
        X = UniSeries.x(10)
        assert done == (1 + X * X) / (1 - X ** 3)

    def test_sqrt_and_monomial_division(self):
        ring = MultiSeries.ring(("u", "v"), (1, 1), 8)
        u, v = ring.gens()
        a = ring.const(1) + u * v * 3 + u * u
        r = a.sqrt()
        assert (r * r - a).is_zero()
        assert (u * u * v + u ** 3).div_monomial(u=2) == (v + u)._like((v + u).terms, 5)

    def test_bivariate_indexing_and_swap(self):
        b = BiSeries({(1, 2): 5, (2, 0): 1}, 6)
        assert b[(1, 2)] == 5 and b[(0, 0)] == 0
        assert b.swap("u", "v")[(2, 1)] == 5
