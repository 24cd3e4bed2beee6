"""Brute-force counting of pattern-avoiding permutations and involutions.

These are the oracles every generating function is checked against.  The
counts come from a pruned walk of a generating tree (see ``_kernels``),
split into independent subtrees that may run on several threads.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .perm import (Permutation, contains, inverse, is_involution, is_simple,
                   is_skew_decomposable, skew_sum, stats)

__all__ = [
    "CountTable", "RefinedCount", "involutions", "involution_count",
    "count_avoiders", "count_table", "avoiders", "count_simple_avoiders",
    "simple_count_table", "simples_of_class", "simple_involutions",
    "refined_simple_123_counts", "merge_injection_check", "max_n",
]

Basis = Iterable[Sequence[int]]

# subtrees rooted below this length become separate tasks
_SPLIT_LEN = 4


def max_n(default: int = 24) -> int:
    """Enumeration depth cap, overridable through INVOLAB_MAX_N."""
    raw = os.environ.get("INVOLAB_MAX_N")
    return int(raw) if raw else default


class CountTable(dict):
    """Counts keyed by length for one basis."""

    def __init__(self, basis: Basis, rows: dict[int, int] | None = None):
        super().__init__(rows or {})
        self.basis = tuple(sorted(Permutation(b) for b in basis))

    def __repr__(self) -> str:
        pat = ",".join(map(str, self.basis))
        return f"CountTable({pat}: {dict(self)})"


class RefinedCount(Counter):
    """Counter over (fp, lrmin, rlmax) triples."""

    def total(self, fp: int | None = None) -> int:  # type: ignore[override]
        return sum(c for (f, _, _), c in self.items() if fp is None or f == fp)


def involutions(n: int) -> Iterator[Permutation]:
    """Every involution of length n, each exactly once.

    The smallest unplaced position is either fixed or paired with a larger
    unplaced position.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    vals = [0] * n

    def rec(start: int):
        while start < n and vals[start]:
            start += 1
        if start == n:
            yield Permutation._trusted(vals)
            return
        vals[start] = start + 1
        yield from rec(start + 1)
        for j in range(start + 1, n):
            if not vals[j]:
                vals[start], vals[j] = j + 1, start + 1
                yield from rec(start + 1)
                vals[j] = 0
        vals[start] = 0

    yield from rec(0)


def involution_count(n: int) -> int:
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n >= 1 else 1


def _pattern_array(patterns: Sequence[Sequence[int]]):
    k = max((len(p) for p in patterns), default=1)
    pats = np.zeros((len(patterns), k), np.int64)
    lens = np.zeros(len(patterns), np.int64)
    for i, p in enumerate(patterns):
        pats[i, :len(p)] = np.asarray(p, np.int64) - 1
        lens[i] = len(p)
    return pats, lens


def _normalize(basis: Basis, involutions_only: bool) -> tuple[Permutation, ...]:
    pats = {Permutation(b) for b in basis}
    if involutions_only:
        # an involution contains beta iff it contains beta^-1
        pats |= {inverse(b) for b in pats}
    # a superpattern of another basis element is redundant
    keep = [p for p in pats
            if not any(q != p and len(q) < len(p) and contains(p, q) for q in pats)]
    return tuple(sorted(keep, key=lambda p: (len(p), p)))


def _children(perm: np.ndarray, m: int, limit: int, pats, lens, involutive: bool):
    idx = np.zeros(lens.max(initial=1) + 1, np.int64)
    out = []
    if involutive:
        if m + 1 <= limit:
            ch = np.empty(m + 1, np.int64)
            ch[:m] = perm[:m]
            ch[m] = m
            out.append(ch)
        if m + 2 <= limit:
            for t in range(m + 1):
                ch = np.empty(m + 2, np.int64)
                head = perm[:t]
                tail = perm[t:m]
                ch[:t] = head + (head >= t)
                ch[t] = m + 1
                ch[t + 1:m + 1] = tail + (tail >= t)
                ch[m + 1] = t
                out.append(ch)
    elif m + 1 <= limit:
        for c in range(m + 1):
            ch = np.empty(m + 1, np.int64)
            ch[:m] = perm[:m] + (perm[:m] >= c)
            ch[m] = c
            out.append(ch)
    return [ch for ch in out
            if _kernels.avoids_at_end(ch, len(ch), pats, lens, idx)]


def _walk(patterns: tuple[Permutation, ...], limit: int, involutive: bool,
          simple_only: bool = False, target: int = -1, collect: int = 0,
          threads: int | None = None):
    """Walk the generating tree up to length ``limit``.

    Returns per-length counts and (when ``collect`` > 0) up to ``collect``
    rows of length-``target`` nodes.
    """
    pats, lens = _pattern_array(patterns)
    counts = np.zeros(limit + 1, np.int64)
    rows: list[np.ndarray] = []
    width = max(target, 1)

    # expand the top of the tree here; deeper subtrees become tasks
    tasks = []
    frontier = [np.zeros(0, np.int64)]
    while frontier:
        node = frontier.pop()
        m = len(node)
        if m > _SPLIT_LEN:
            tasks.append(node)
            continue
        if not simple_only or _kernels.is_simple(node, m):
            counts[m] += 1
            if m == target and len(rows) < collect:
                rows.append(node.copy())
        frontier.extend(_children(node, m, limit, pats, lens, involutive))

    def run(node):
        buf = np.zeros((collect, width), np.int64)
        c, w = _kernels.walk(node, len(node), limit, pats, lens, involutive,
                             simple_only, target, buf)
        return c, buf[:w]

    workers = threads or os.cpu_count() or 1
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]
    for c, buf in results:
        counts += c
        rows.extend(buf)
    return counts, rows


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = max_n()
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap} (INVOLAB_MAX_N)")


@lru_cache(maxsize=None)
def _count_table_cached(patterns, limit, involutive, simple_only, threads):
    counts, _ = _walk(patterns, limit, involutive, simple_only, threads=threads)
    return tuple(int(c) for c in counts)


def count_table(basis: Basis, max_len: int, involutions_only: bool = True,
                threads: int | None = None) -> CountTable:
    """Counts of avoiders for every length 0..max_len in one walk."""
    _check_n(max_len)
    basis = list(basis)
    if not basis:
        raise ValueError("basis must be nonempty")
    patterns = _normalize(basis, involutions_only)
    counts = _count_table_cached(patterns, max_len, involutions_only, False, threads)
    return CountTable(basis, dict(enumerate(counts)))


def count_avoiders(basis: Basis, n: int, involutions_only: bool = True,
                   threads: int | None = None) -> int:
    """|Av^I_n(basis)|, or |Av_n(basis)| when ``involutions_only`` is false."""
    return count_table(basis, n, involutions_only, threads)[n]


def simple_count_table(beta: Basis, max_len: int, involutions_only: bool = True,
                       threads: int | None = None) -> CountTable:
    """Counts of simple avoiders for every length 0..max_len."""
    _check_n(max_len)
    basis = list(beta)
    patterns = _normalize(basis, involutions_only)
    counts = _count_table_cached(patterns, max_len, involutions_only, True, threads)
    return CountTable(basis, dict(enumerate(counts)))


def count_simple_avoiders(beta: Sequence[int], n: int,
                          threads: int | None = None) -> int:
    """Number of simple involutions of length n avoiding beta."""
    if n < 2:
        raise ValueError("simple permutations have length >= 2")
    return simple_count_table([beta], n, True, threads)[n]


def avoiders(basis: Basis, n: int, involutions_only: bool = True,
             simple_only: bool = False) -> list[Permutation]:
    """All avoiders of length n (optionally only the simple ones)."""
    _check_n(n)
    patterns = _normalize(list(basis), involutions_only) if basis else ()
    counts, _ = _walk(patterns, n, involutions_only, simple_only, threads=1)
    total = int(counts[n])
    _, rows = _walk(patterns, n, involutions_only, simple_only,
                    target=n, collect=total, threads=1)
    return sorted(Permutation._trusted(int(v) + 1 for v in row) for row in rows)


def simples_of_class(basis: Basis, n: int) -> set[Permutation]:
    """Simple permutations of length n avoiding every basis element."""
    if n < 2:
        raise ValueError("simple permutations have length >= 2")
    return set(avoiders(list(basis), n, involutions_only=False, simple_only=True))


def simple_involutions(basis: Basis, n: int) -> set[Permutation]:
    """Simple involutions of length n avoiding every basis element."""
    if n < 2:
        raise ValueError("simple permutations have length >= 2")
    return set(avoiders(list(basis), n, involutions_only=True, simple_only=True))


def refined_simple_123_counts(n: int) -> RefinedCount:
    """Joint (fp, lrmin, rlmax) distribution over simple 123-avoiding involutions."""
    if n < 4:
        raise ValueError("refined counts are defined for n >= 4")
    out = RefinedCount()
    for sigma in simple_involutions([(1, 2, 3)], n):
        s = stats(sigma)
        out[(s.fp, s.lrmin, s.rlmax)] += 1
    return out


def merge_injection_check(beta: Sequence[int], n: int) -> bool:
    """Check that pi -> pi (skew) pi^-1 injects Av_n(beta) into Av^I_2n(beta)."""
    beta = Permutation(beta)
    if not is_involution(beta) or is_skew_decomposable(beta):
        raise ValueError(f"{beta} is not a skew-indecomposable involution")
    images = set()
    for pi in avoiders([beta], n, involutions_only=False):
        image = skew_sum(pi, inverse(pi))
        if not is_involution(image) or contains(image, beta):
            return False
        images.add(image)
    return len(images) == count_avoiders([beta], n, involutions_only=False)
