from itertools import product

import pytest

from involab import enumeration as en
from involab.coloring import (ALLOWED_PAIRS, ColoredPerm, LabelWordPair,
                              color_1324, coloring_violations, count_word_pairs,
                              encode, verify_encoding)
from involab.perm import Permutation, contains, right_to_left_maxima
from involab.series import gf_word_pairs


def P(s):
    return Permutation.parse(s)


def test_examples():
    assert color_1324(P("321")).colors == "BBB"
    assert color_1324(P("1")).colors == "B"
    assert encode(P("321")) == LabelWordPair("ddd", "ddd")
    assert encode(P("1")) == LabelWordPair("d", "d")
    assert encode(P("12")) == LabelWordPair("ad", "ad")


def test_rejects_1324():
    with pytest.raises(ValueError):
        color_1324(P("1324"))
    with pytest.raises(ValueError):
        encode(P("21435"))


def test_colored_perm_accessors():
    c = ColoredPerm(P("2413"), "RBRB")
    assert c.entries("R") == [2, 1] and c.entries("B") == [4, 3]
    assert str(c) == "2R 4B 1R 3B"


def test_greedy_rule_by_hand():
    # 132: the 2 would complete a red 132, so it turns blue; then the
    # right-to-left maxima 3 and 2 are blue
    assert color_1324(P("132")).colors == "RBB"
    # 2413: 1 and 2 are red left-to-right minima, 4 and 3 are right-to-left maxima
    assert encode(P("2413")) == LabelWordPair("adad", "aadd")


def test_invariants_over_all_1324_avoiders_to_9():
    for n in range(1, 10):
        for pi in en.avoiders([(1, 3, 2, 4)], n, involutions_only=False):
            assert coloring_violations(pi) == []
            c = color_1324(pi)
            assert not contains(c.entries("R"), (1, 3, 2))
            assert not contains(c.entries("B"), (2, 1, 3))
            assert all(c.colors[p - 1] == "B" for p in right_to_left_maxima(pi))


def test_encoding_over_involutions():
    expected_counts = [1, 2, 4, 9, 21, 51, 126, 321, 820, 2160]
    for n in range(1, 11):
        rep = verify_encoding(n)
        assert rep["violations"] == []
        assert rep["avoider_count"] == expected_counts[n - 1]
        assert rep["distinct_pairs"] == rep["avoider_count"]
        assert count_word_pairs(n) >= rep["avoider_count"]
    with pytest.raises(ValueError):
        verify_encoding(0)


def test_allowed_pairs():
    assert sorted(a + b for a, b in ALLOWED_PAIRS) == ["aa", "bb", "bc", "cb", "cc", "dd"]


def test_automaton_against_series():
    h = gf_word_pairs(20)
    assert count_word_pairs(0) == 1
    assert [count_word_pairs(n) for n in range(21)] == h.coeffs


def test_automaton_against_brute_force():
    for n in range(5):
        words = ["".join(w) for w in product("abcd", repeat=n) if "cb" not in "".join(w)]
        count = sum(1 for e in words for v in words
                    if all((x == "a") == (y == "a") and (x == "d") == (y == "d")
                           for x, y in zip(e, v)))
        assert count == count_word_pairs(n)


def test_ratio_approaches_upper_bound():
    from involab.growth import upper_bound_1324

    ratio = count_word_pairs(40) / count_word_pairs(39)
    assert abs(ratio - float(upper_bound_1324().value)) < 1e-3
