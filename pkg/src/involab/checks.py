"""Cross-checks between the independent routes, grouped into suites.

Each check returns a ``CheckResult``; a failing check carries the first
mismatches it found.  The ``verify`` command runs these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import enumeration as en
from . import tables
from .coloring import count_word_pairs, verify_encoding
from .perm import Permutation
from .series import (assemble_1342, assemble_2341, central_binomial,
                     gf_separable_involutions, gf_word_pairs, motzkin,
                     separable_involutions_structural, staircase_closed,
                     staircase_closed_refined, staircase_iterate)

__all__ = ["CheckResult", "SUITES", "run_suite", "GF_CLASSES"]

_SHOWN = 5  # mismatches kept per failing check


@dataclass
class CheckResult:
    name: str
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: " + "; ".join(self.mismatches[:_SHOWN])


def _compare(name: str, pairs: Iterator[tuple[str, object, object]]) -> CheckResult:
    res = CheckResult(name)
    for label, got, want in pairs:
        if got != want:
            res.mismatches.append(f"{label}: got {got}, expected {want}")
    return res


# generating functions of involution sets, keyed by the pattern they avoid
GF_CLASSES: dict[str, tuple[tuple[int, ...], Callable]] = {
    "av-i-123": ((1, 2, 3), central_binomial),
    "av-i-1234": ((1, 2, 3, 4), motzkin),
    "av-i-2413": ((2, 4, 1, 3), gf_separable_involutions),
    "av-i-1342": ((1, 3, 4, 2), assemble_1342),
    "av-i-2341": ((2, 3, 4, 1), assemble_2341),
}


def _enumeration(max_n: int, threads) -> list[CheckResult]:
    top = min(max_n, 10)
    dfs = ((f"n={n}", sum(1 for _ in en.involutions(n)), en.involution_count(n))
           for n in range(top + 1))
    return [_compare("involution stream matches involution count", dfs)]


def _tables(max_n: int, threads) -> list[CheckResult]:
    out = []
    for key in ("1", "2"):
        cols, rows = tables.TABLES[key]
        ns = [n for n in rows if n <= max_n]
        if not ns:
            continue

        def pairs(cols=cols, rows=rows, ns=ns):
            for pat in cols:
                counts = en.count_table([Permutation.parse(pat)], max(ns), True, threads)
                for n in ns:
                    yield f"{pat} n={n}", counts[n], rows[n][pat]
        out.append(_compare(f"table {key} counts (n <= {max(ns)})", pairs()))
    cols, rows = tables.TABLE_3
    ns = [n for n in rows if n <= max_n]
    if ns:
        def simple_pairs():
            for pat in cols:
                counts = en.simple_count_table([Permutation.parse(pat)], max(ns),
                                               True, threads)
                for n in ns:
                    yield f"{pat} n={n}", counts[n], rows[n][pat]
        out.append(_compare(f"table 3 simple counts (n <= {max(ns)})", simple_pairs()))
    return out


def _gf(max_n: int, threads) -> list[CheckResult]:
    out = []
    order = max(max_n, 1)
    for name, (pattern, build) in GF_CLASSES.items():
        g = build(order)
        counts = en.count_table([pattern], max_n, True, threads)
        out.append(_compare(f"{name} series equals enumeration (n <= {max_n})",
                            ((f"n={n}", g[n], counts[n]) for n in range(1, max_n + 1))))
    sep = gf_separable_involutions(order)
    out.append(_compare("separable closed form equals decomposition",
                        ((f"n={n}", sep[n], s) for n, s in
                         enumerate(separable_involutions_structural(order).coeffs))))
    return out


def _staircase(max_n: int, threads) -> list[CheckResult]:
    out = []
    order = max(max_n, 8)
    for i in (0, 1, 2):
        closed = staircase_closed(i, order)
        it = staircase_iterate(i, 3, order=order).at_fixed_point()
        out.append(_compare(f"s^({i}) recurrence equals closed form",
                            ((f"x^{k}", it[k], closed[k]) for k in range(order + 1))))
    refined = [staircase_closed_refined(i, max(max_n, 4)) for i in (0, 1, 2)]

    def refined_pairs():
        for n in range(4, min(max_n, 13) + 1):
            counts = en.refined_simple_123_counts(n)
            for (fp, lo, hi), c in counts.items():
                # one fixed point: the series covers only a right-to-left maximum
                if fp == 1 and hi % 2 == 0:
                    continue
                yield f"n={n} fp={fp} u^{lo}v^{hi}", refined[fp][(lo, hi)], c
            for fp, s in enumerate(refined):
                for (a, b), c in s.terms.items():
                    if a + b == n and (fp, a, b) not in counts:
                        yield f"n={n} fp={fp} u^{a}v^{b}", c, 0
    out.append(_compare("refined series equal refined counts", refined_pairs()))
    return out


def _growth(max_n: int, threads) -> list[CheckResult]:
    from .growth import growth_constants, upper_bound_1324

    res = CheckResult("growth constants agree with their cross-checks")
    try:
        reports = growth_constants()
        bound = upper_bound_1324()
    except ArithmeticError as exc:
        res.mismatches.append(str(exc))
        return [res]
    rounded = {"av-i-2413": "3.15", "av-i-1342": "2.62", "av-i-2341": "2.54"}
    for key, want in rounded.items():
        got = f"{reports[key].value:.2f}"
        if got != want:
            res.mismatches.append(f"{key}: {got} does not round to {want}")
    r2341 = reports["av-i-2341"]
    if abs(Fraction(r2341.extra["cross_check"]) - Fraction(r2341.value)) > Fraction(1, 10**6):
        res.mismatches.append("av-i-2341: root and coefficient ratio differ")
    if not bound.value < 4.84:
        res.mismatches.append(f"1324 upper bound {bound.value} is not below 4.84")
    return [res]


def _simples(max_n: int, threads) -> list[CheckResult]:
    def class_pairs():
        for n in range(4, min(max_n, 10) + 1):
            yield (f"n={n}", en.simples_of_class([(1, 3, 4, 2), (1, 4, 2, 3)], n),
                   en.simples_of_class([(1, 2, 3)], n))

    special = Permutation.parse("5274163")

    def involution_pairs():
        for n in range(4, min(max_n, 13) + 1):
            want = en.simple_involutions([(1, 2, 3)], n)
            if n == len(special):
                want = want | {special}
            yield f"n={n}", en.simple_involutions([(2, 3, 4, 1)], n), want
    return [_compare("simples of Av(1342,1423) equal simples of Av(123)", class_pairs()),
            _compare("simple involutions avoiding 2341 are those avoiding 123 plus 5274163",
                     involution_pairs())]


def _coloring(max_n: int, threads) -> list[CheckResult]:
    res = CheckResult(f"1324 coloring and encoding (n <= {max_n})")
    for n in range(1, max_n + 1):
        rep = verify_encoding(n)
        res.mismatches.extend(rep["violations"])
        if rep["distinct_pairs"] != rep["avoider_count"]:
            res.mismatches.append(f"n={n}: encoding not injective")
        if count_word_pairs(n) < rep["avoider_count"]:
            res.mismatches.append(f"n={n}: fewer word pairs than avoiders")
    order = max(max_n, 20)
    h = gf_word_pairs(order)
    automaton = _compare("word-pair automaton equals h(x)",
                         ((f"n={n}", count_word_pairs(n), h[n]) for n in range(order + 1)))
    return [res, automaton]


def _merge(max_n: int, threads) -> list[CheckResult]:
    res = CheckResult("merge injection and supermultiplicativity")
    for beta in ((1, 3, 2, 4), (1, 2, 3, 4)):
        for n in range(1, min(max_n, 6) + 1):
            if not en.merge_injection_check(beta, n):
                res.mismatches.append(f"{Permutation(beta)} n={n}: injection fails")
        counts = en.count_table([beta], max_n, True, threads)
        for m in range(1, max_n):
            for n in range(1, max_n - m + 1):
                if counts[m + n] < counts[m] * counts[n]:
                    res.mismatches.append(f"{Permutation(beta)} m={m} n={n}")
    return [res]


SUITES: dict[str, Callable[[int, int | None], list[CheckResult]]] = {
    "enumeration": _enumeration,
    "tables": _tables,
    "gf": _gf,
    "staircase": _staircase,
    "growth": _growth,
    "simples": _simples,
    "coloring": _coloring,
    "merge": _merge,
}


def run_suite(name: str, max_n: int, threads: int | None = None) -> Iterator[CheckResult]:
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}; choose from all, {', '.join(SUITES)}")
        yield from SUITES[n](max_n, threads)
