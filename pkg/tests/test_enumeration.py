import pytest

from involab import enumeration as en
from involab.perm import Permutation, inverse, is_involution, is_simple, stats

from conftest import all_involutions, brute_contains, brute_count, involution_numbers

PATTERNS = ["1324", "1234", "4231", "2431", "1342", "2341", "3421", "2413"]


def P(s):
    return Permutation.parse(s)


class TestInvolutionStream:
    def test_small(self):
        assert list(en.involutions(0)) == [P("")]
        assert sorted(en.involutions(3)) == [P("123"), P("132"), P("213"), P("321")]

    def test_counts_follow_recurrence(self):
        numbers = involution_numbers(10)
        for n in range(11):
            stream = list(en.involutions(n))
            assert len(stream) == len(set(stream)) == numbers[n] == en.involution_count(n)
            assert all(is_involution(p) for p in stream)
        assert numbers[10] == 9496


class TestCounts:
    @pytest.mark.parametrize("pattern", PATTERNS)
    def test_against_filtered_stream(self, pattern):
        beta = P(pattern)
        table = en.count_table([beta], 8)
        for n in range(9):
            assert table[n] == brute_count([beta], n)

    @pytest.mark.parametrize("pattern", PATTERNS)
    def test_walk_agrees_with_dfs_stream_at_10(self, pattern):
        beta = P(pattern)
        want = sum(1 for p in en.involutions(10) if not brute_contains(p, beta))
        assert en.count_avoiders([beta], 10) == want

    def test_reference_examples(self):
        assert en.count_avoiders([P("1342")], 7) == 156
        assert en.count_avoiders([P("2413")], 11) == 9600
        assert en.count_avoiders([P("2431")], 12) == 16238

    def test_small_n_equal_involution_numbers(self):
        numbers = involution_numbers(3)
        for pattern in PATTERNS:
            table = en.count_table([P(pattern)], 3)
            assert [table[n] for n in range(4)] == numbers

    def test_class_counts(self):
        # |Av_n(123)| are Catalan numbers
        table = en.count_table([P("123")], 8, involutions_only=False)
        assert [table[n] for n in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
        for n in range(7):
            assert en.count_avoiders([P("1342")], n, False) == brute_count([P("1342")], n, False)

    @pytest.mark.parametrize("pattern", PATTERNS)
    def test_inverse_symmetry(self, pattern):
        beta = P(pattern)
        a = en.count_table([beta], 10)
        b = en.count_table([inverse(beta)], 10)
        assert dict(a) == dict(b)

    def test_thread_count_does_not_change_totals(self):
        one = en.count_table([P("1324")], 12, threads=1)
        four = en.count_table([P("1324")], 12, threads=4)
        assert dict(one) == dict(four)

    def test_supermultiplicative(self):
        for pattern in ("1324", "1234", "2413", "1342"):
            t = en.count_table([P(pattern)], 14)
            for m in range(1, 14):
                for n in range(1, 15 - m):
                    assert t[m + n] >= t[m] * t[n]

    def test_errors(self, monkeypatch):
        with pytest.raises(ValueError):
            en.count_avoiders([], 4)
        with pytest.raises(ValueError):
            en.count_avoiders([P("12")], -1)
        monkeypatch.setenv("INVOLAB_MAX_N", "6")
        with pytest.raises(ValueError, match="INVOLAB_MAX_N"):
            en.count_avoiders([P("123")], 7)


class TestAvoidersAndSimples:
    def test_avoiders_listing(self):
        got = en.avoiders([P("1324")], 6)
        want = sorted(Permutation(p) for p in all_involutions(6)
                      if not brute_contains(p, P("1324")))
        assert got == want
        assert len(en.avoiders([], 5)) == involution_numbers(5)[5]

    def test_simple_counts(self):
        assert en.count_simple_avoiders(P("1234"), 8) == 35
        assert en.count_simple_avoiders(P("2341"), 7) == 3
        assert all(en.count_simple_avoiders(P("2413"), n) == 0 for n in range(5, 13))

    def test_simple_listing_matches_filter(self):
        for n in range(4, 8):
            got = en.simple_involutions([P("1324")], n)
            want = {Permutation(p) for p in all_involutions(n)
                    if is_simple(p) and not brute_contains(p, P("1324"))}
            assert got == want

    def test_simples_of_class(self):
        assert en.simples_of_class([], 4) == {P("2413"), P("3142")}
        with pytest.raises(ValueError):
            en.simples_of_class([], 1)

    def test_only_one_extra_simple_involution_avoiding_2341(self):
        extra = en.simple_involutions([P("2341")], 7) - en.simple_involutions([P("123")], 7)
        assert extra == {P("5274163")}


class TestRefinedCounts:
    def test_reference_totals(self):
        assert en.refined_simple_123_counts(5).total(fp=1) == 2
        assert en.refined_simple_123_counts(6).total(fp=2) == 3
        assert en.refined_simple_123_counts(8).total(fp=0) == 1

    def test_invariants(self):
        for n in range(4, 11):
            counts = en.refined_simple_123_counts(n)
            for (fp, lo, hi), c in counts.items():
                assert fp in (0, 1, 2)
                assert lo + hi == n
                assert c > 0
            assert counts.total() == len(en.simple_involutions([P("123")], n))

    def test_statistics_by_direct_scan(self):
        counts = en.refined_simple_123_counts(7)
        direct = {}
        for p in all_involutions(7):
            if is_simple(p) and not brute_contains(p, P("123")):
                s = stats(p)
                direct[(s.fp, s.lrmin, s.rlmax)] = direct.get((s.fp, s.lrmin, s.rlmax), 0) + 1
        assert dict(counts) == direct

    def test_precondition(self):
        with pytest.raises(ValueError):
            en.refined_simple_123_counts(3)


class TestMergeInjection:
    @pytest.mark.parametrize("beta", ["1324", "1234"])
    def test_injects(self, beta):
        for n in range(1, 7):
            assert en.merge_injection_check(P(beta), n)

    def test_rejects_skew_decomposable(self):
        with pytest.raises(ValueError):
            en.merge_injection_check(P("21"), 1)
        with pytest.raises(ValueError):
            en.merge_injection_check(P("2413"), 3)
