import pytest

from involab import enumeration as en
from involab.series import (assemble_1342, assemble_2341, closed_1342, closed_2341,
                            structural_1342, structural_2341)
from involab.series import assembly

from conftest import brute_count


def test_1342_reference_values():
    g = assemble_1342(20)
    assert g[7] == 156
    assert g[20] == 39469786


def test_2341_reference_values():
    g = assemble_2341(20)
    assert g[8] == 441
    assert g[20] == 31900554


@pytest.mark.parametrize("closed, structural", [(closed_1342, structural_1342),
                                                (closed_2341, structural_2341)])
def test_routes_agree_through_24(closed, structural):
    a, b = closed(24), structural(24)
    assert a.order >= 24 and b.order >= 24
    assert a == b
    assert a.is_integral()


@pytest.mark.parametrize("build, basis", [(assemble_1342, [(1, 3, 4, 2), (1, 4, 2, 3)]),
                                          (assemble_2341, [(2, 3, 4, 1), (4, 1, 2, 3)])])
def test_against_enumeration(build, basis):
    g = build(14)
    t = en.count_table(basis, 14)
    assert [g[n] for n in range(1, 15)] == [t[n] for n in range(1, 15)]
    for n in range(1, 8):
        assert g[n] == brute_count(basis, n)


def test_disagreement_is_reported(monkeypatch):
    bad = closed_1342(10) + assembly.UniSeries.monomial(9, 10)
    monkeypatch.setattr(assembly, "closed_1342", lambda order: bad)
    with pytest.raises(ArithmeticError, match="x\\^9"):
        assembly.assemble_1342(10)
