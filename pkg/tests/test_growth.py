from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from involab import enumeration as en
from involab.growth import (CLOSED, EMPIRICAL, ROOT, GrowthReport, empirical_growth,
                            growth_2341, growth_constants, lower_bound_1324,
                            poly_eval, separable_norm_polynomial,
                            smallest_positive_root, upper_bound_1324)
from involab.series.assembly import Q_2341
from involab.perm import Permutation

getcontext().prec = 50
TOL9 = Decimal("1e-9")


def D(x):
    return Decimal(x)


def check_bracket(report, poly=None):
    lo, hi = report.bracket
    assert lo <= Fraction(report.value) + Fraction(1, 10**25)
    assert Fraction(report.value) - Fraction(1, 10**25) <= hi
    if poly is not None and lo != hi:
        # reciprocal report: the root lies in [1/hi, 1/lo]
        a, b = poly_eval(poly, 1 / hi), poly_eval(poly, 1 / lo)
        assert (a > 0) != (b > 0)


class TestRootIsolation:
    def test_large_schroder_radicand(self):
        rep = smallest_positive_root([1, -6, 1], reciprocal=True)
        assert rep.method == ROOT
        assert abs(rep.value - (3 + 2 * D(2).sqrt())) < Decimal("1e-14")
        assert rep.width <= Fraction(1, 10**15)
        check_bracket(rep, [1, -6, 1])

    def test_direct_root(self):
        rep = smallest_positive_root([1, -6, 1])
        assert abs(rep.value - (3 - 2 * D(2).sqrt())) < Decimal("1e-14")

    def test_exact_rational_root(self):
        rep = smallest_positive_root([-1, 4])
        assert rep.bracket == (Fraction(1, 4), Fraction(1, 4))

    def test_errors(self):
        with pytest.raises(ValueError):
            smallest_positive_root([1, 0, 1])
        with pytest.raises(ValueError):
            smallest_positive_root([1, -2], tol=0)

    def test_report_validates_bracket(self):
        with pytest.raises(ValueError):
            GrowthReport(Decimal(5), (Fraction(1), Fraction(2)), ROOT, "x")

    def test_serialization(self):
        rep = smallest_positive_root([1, -6, 1], reciprocal=True, source="demo")
        d = rep.to_dict()
        lo, hi = (Fraction(s) for s in d["bracket"])
        assert (lo, hi) == rep.bracket
        assert d["source"] == "demo" and d["certified"] is True
        assert Decimal(d["value"]) == rep.value


class TestConstants:
    def test_separable(self):
        rep = growth_constants()["av-i-2413"]
        assert rep.method == CLOSED
        assert abs(rep.value - (D(2).sqrt() + D(3).sqrt())) < TOL9
        assert abs(Decimal(rep.extra["cross_check"]) - rep.value) < TOL9
        assert f"{rep.value:.2f}" == "3.15"

    def test_1342(self):
        rep = growth_constants()["av-i-1342"]
        assert abs(rep.value - (1 + (1 + D(5).sqrt()) / 2)) < TOL9
        assert f"{rep.value:.2f}" == "2.62"

    def test_1234(self):
        assert growth_constants()["av-i-1234"].value == 3

    def test_2341(self):
        rep = growth_2341()
        check_bracket(rep, Q_2341)
        assert abs(Decimal(rep.extra["cross_check"]) - rep.value) < Decimal("1e-6")
        assert f"{rep.value:.2f}" == "2.54"

    def test_norm_polynomial_has_the_separable_pole(self):
        # x^4 - 10x^2 + 1 vanishes at 1/(sqrt2 + sqrt3) and divides the norm
        norm = separable_norm_polynomial()
        assert norm == [64 * c for c in (-1, 0, 10, 0, -1)]
        rep = smallest_positive_root(norm, reciprocal=True)
        assert abs(rep.value - (D(2).sqrt() + D(3).sqrt())) < TOL9


class Test1324Bounds:
    def test_upper_bound_closed_form(self):
        r = (8 + 6 * D(78).sqrt()) ** (Decimal(1) / 3)
        want = 3 * r / (14 + r - r * r)
        rep = upper_bound_1324()
        assert abs(rep.value - want) < TOL9
        assert rep.value < Decimal("4.84")
        assert rep.bracket[1] < Fraction(484, 100)

    def test_upper_bound_is_reciprocal_root(self):
        root = smallest_positive_root([1, -5, 1, -1], reciprocal=True)
        assert abs(root.value - upper_bound_1324().value) < TOL9

    def test_lower_bound(self):
        rep = lower_bound_1324()
        assert abs(rep.value - D("9.81").sqrt()) < TOL9
        assert rep.value > Decimal("3.13")


class TestEmpirical:
    def test_trivial_sequences(self):
        assert empirical_growth([1, 1, 1, 1]).value == 1
        rep = empirical_growth([2 ** n for n in range(1, 9)])
        assert rep.value == 2
        assert rep.method == EMPIRICAL and rep.certified is False

    def test_1234_counts(self):
        t = en.count_table([Permutation.parse("1234")], 16)
        rep = empirical_growth([t[n] for n in range(1, 17)])
        assert Decimal("2.5") < rep.value < Decimal("3.0")

    def test_errors(self):
        with pytest.raises(ValueError):
            empirical_growth([1, 2, 3])
        with pytest.raises(ValueError):
            empirical_growth([1, 0, 1, 1])
