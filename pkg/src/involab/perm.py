"""Permutations in one-line notation and their structural operations.

Permutations are 1-indexed: ``Permutation((2, 4, 1, 3))`` is 2413, and the
entry at position i (counting from 1) is ``pi[i - 1]``.  The empty
permutation is a legitimate value of length 0.

>>> pi = Permutation.parse("2413")
>>> inverse(pi)
Permutation('3142')
>>> inflate(pi, [Permutation.parse(s) for s in ("1", "132", "321", "12")])
Permutation('479832156')
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "StatProfile", "Decomposition", "Gridding", "SUM", "SKEW",
    "standardize", "contains", "avoids", "occurrence", "inverse",
    "is_involution", "direct_sum", "skew_sum", "inflate", "intervals",
    "is_simple", "is_sum_decomposable", "is_skew_decomposable", "decompose",
    "stats", "left_to_right_minima", "right_to_left_maxima", "fixed_points",
    "greedy_gridding",
]


class Permutation(tuple):
    """An immutable permutation of 1..n in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")
        return super().__new__(cls, vals)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        # skips validation; callers guarantee a bijection on 1..n
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse "2413" (digits, for n <= 9) or "10,3,1,..." (comma separated)."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            return cls(int(p) for p in parts)
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(int(ch) for ch in text)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation('{self}')"

    # tuple's + and * would silently build non-permutations
    def __add__(self, other):
        return NotImplemented

    def __mul__(self, other):
        return NotImplemented


SUM = Permutation((1, 2))
SKEW = Permutation((2, 1))


@dataclass(frozen=True)
class StatProfile:
    fp: int
    lrmin: int
    rlmax: int


@dataclass(frozen=True)
class Decomposition:
    """``root[parts]`` with ``root`` simple (or SUM/SKEW with two parts)."""

    root: Permutation
    parts: tuple[Permutation, ...]

    def inflate(self) -> Permutation:
        return inflate(self.root, self.parts)


@dataclass(frozen=True)
class Gridding:
    """Cells of a staircase gridding, each a tuple of 1-based positions.

    Cells alternate east/south starting from the first (north-west) cell.
    An empty cell only appears when the permutation is not simple.
    """

    cells: tuple[tuple[int, ...], ...]

    def values(self, pi: Sequence[int]) -> list[tuple[int, ...]]:
        return [tuple(pi[i - 1] for i in cell) for cell in self.cells]


def standardize(seq: Sequence[int]) -> Permutation:
    """The permutation order isomorphic to a sequence of distinct integers."""
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return Permutation._trusted(rank[v] for v in seq)


def occurrence(pi: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...] | None:
    """Positions (1-based) of the leftmost occurrence of sigma in pi, or None.

    Backtracks over positions; each candidate entry must sit in the value
    window left open by the entries already chosen.
    """
    n, k = len(pi), len(sigma)
    if k == 0:
        return ()
    if k > n:
        return None
    chosen: list[int] = []

    def extend(start: int) -> bool:
        level = len(chosen)
        if level == k:
            return True
        target = sigma[level]
        lo, hi = 0, n + 1
        for l, pos in enumerate(chosen):
            if sigma[l] < target:
                lo = max(lo, pi[pos])
            else:
                hi = min(hi, pi[pos])
        for pos in range(start, n - (k - level) + 1):
            if lo < pi[pos] < hi:
                chosen.append(pos)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(p + 1 for p in chosen)
    return None


def contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    return occurrence(pi, sigma) is not None


def avoids(pi: Sequence[int], *patterns: Sequence[int]) -> bool:
    return not any(contains(pi, s) for s in patterns)


def inverse(pi: Sequence[int]) -> Permutation:
    inv = [0] * len(pi)
    for i, v in enumerate(pi, 1):
        inv[v - 1] = i
    return Permutation._trusted(inv)


def is_involution(pi: Sequence[int]) -> bool:
    return all(pi[v - 1] == i for i, v in enumerate(pi, 1))


def direct_sum(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    m = len(sigma)
    return Permutation._trusted(tuple(sigma) + tuple(t + m for t in tau))


def skew_sum(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    n = len(tau)
    return Permutation._trusted(tuple(s + n for s in sigma) + tuple(tau))


def inflate(sigma: Sequence[int], parts: Sequence[Sequence[int]]) -> Permutation:
    """Replace entry i of sigma by an interval order isomorphic to parts[i]."""
    if len(parts) != len(sigma):
        raise ValueError(f"inflation of a length-{len(sigma)} permutation "
                         f"needs {len(sigma)} parts, got {len(parts)}")
    if any(len(p) == 0 for p in parts):
        raise ValueError("inflation parts must be nonempty")
    # offset[v] = number of entries in the blocks replacing values < v
    sizes_by_value = [0] * (len(sigma) + 1)
    for s, part in zip(sigma, parts):
        sizes_by_value[s] = len(part)
    offset = [0] * (len(sigma) + 2)
    for v in range(1, len(sigma) + 1):
        offset[v + 1] = offset[v] + sizes_by_value[v]
    out: list[int] = []
    for s, part in zip(sigma, parts):
        out.extend(offset[s] + p for p in part)
    return Permutation._trusted(out)


def intervals(pi: Sequence[int], proper: bool = True) -> list[tuple[int, int]]:
    """All intervals [a, b] (1-based, inclusive) of length >= 2.

    With ``proper`` the whole permutation is excluded.
    """
    n = len(pi)
    found = []
    for a in range(n):
        lo = hi = pi[a]
        for b in range(a + 1, n):
            lo = min(lo, pi[b])
            hi = max(hi, pi[b])
            if hi - lo == b - a and not (proper and a == 0 and b == n - 1):
                found.append((a + 1, b + 1))
    return found


def is_simple(pi: Sequence[int]) -> bool:
    n = len(pi)
    if n < 2:
        return False
    for a in range(n):
        lo = hi = pi[a]
        for b in range(a + 1, n):
            v = pi[b]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == b - a and (a > 0 or b < n - 1):
                return False
    return True


def _sum_cut(pi: Sequence[int]) -> int:
    """Smallest k < n with pi[:k] a permutation of 1..k, else 0."""
    hi = 0
    for k, v in enumerate(pi[:-1], 1):
        hi = max(hi, v)
        if hi == k:
            return k
    return 0


def _skew_cut(pi: Sequence[int]) -> int:
    n = len(pi)
    lo = n + 1
    for k, v in enumerate(pi[:-1], 1):
        lo = min(lo, v)
        if lo == n - k + 1:
            return k
    return 0


def is_sum_decomposable(pi: Sequence[int]) -> bool:
    return len(pi) >= 2 and _sum_cut(pi) > 0


def is_skew_decomposable(pi: Sequence[int]) -> bool:
    return len(pi) >= 2 and _skew_cut(pi) > 0


def decompose(pi: Sequence[int]) -> Decomposition:
    """The substitution decomposition of pi.

    Sums and skew sums are split at the first possible cut, so the first
    part is sum (resp. skew) indecomposable; otherwise the parts are the
    maximal proper intervals and the root is simple of length >= 4.
    """
    n = len(pi)
    if n < 2:
        raise ValueError("only permutations of length >= 2 decompose")
    k = _sum_cut(pi)
    if k:
        return Decomposition(SUM, (standardize(pi[:k]), standardize(pi[k:])))
    k = _skew_cut(pi)
    if k:
        return Decomposition(SKEW, (standardize(pi[:k]), standardize(pi[k:])))
    blocks = []
    a = 0
    while a < n:
        end = a
        lo = hi = pi[a]
        for b in range(a + 1, n):
            lo = min(lo, pi[b])
            hi = max(hi, pi[b])
            if hi - lo == b - a and b - a + 1 < n:
                end = b
        blocks.append((a, end))
        a = end + 1
    root = standardize([pi[a] for a, _ in blocks])
    parts = tuple(standardize(pi[a:b + 1]) for a, b in blocks)
    return Decomposition(root, parts)


def fixed_points(pi: Sequence[int]) -> list[int]:
    return [i for i, v in enumerate(pi, 1) if v == i]


def left_to_right_minima(pi: Sequence[int]) -> list[int]:
    """Positions (1-based) of entries smaller than everything before them."""
    out, best = [], len(pi) + 1
    for i, v in enumerate(pi, 1):
        if v < best:
            out.append(i)
            best = v
    return out


def right_to_left_maxima(pi: Sequence[int]) -> list[int]:
    """Positions (1-based) of entries larger than everything after them."""
    out, best = [], 0
    for i in range(len(pi), 0, -1):
        if pi[i - 1] > best:
            out.append(i)
            best = pi[i - 1]
    return out[::-1]


def stats(pi: Sequence[int]) -> StatProfile:
    return StatProfile(len(fixed_points(pi)), len(left_to_right_minima(pi)),
                       len(right_to_left_maxima(pi)))


def greedy_gridding(pi: Sequence[int]) -> Gridding:
    """The greedy staircase gridding of a 123-avoider.

    The first cell is the longest decreasing prefix.  After that, cells
    alternate: an eastward cell takes every remaining entry whose value
    exceeds the smallest value placed so far, a southward cell takes every
    remaining entry whose position precedes the largest position placed so
    far.  If both directions come up empty the remainder lies entirely to
    the south-east, and a fresh decreasing prefix of it starts the next cell.
    """
    if contains(pi, (1, 2, 3)):
        raise ValueError(f"{Permutation(pi)} contains 123")
    n = len(pi)
    if n == 0:
        return Gridding(())

    def decreasing_prefix(positions: list[int]) -> list[int]:
        cell = [positions[0]]
        for p in positions[1:]:
            if pi[p - 1] > pi[cell[-1] - 1]:
                break
            cell.append(p)
        return cell

    remaining = list(range(1, n + 1))
    first = decreasing_prefix(remaining)
    cells = [tuple(first)]
    placed = set(first)
    remaining = [p for p in remaining if p not in placed]
    east = True
    empty_run = 0
    while remaining:
        if empty_run == 2:
            cell = decreasing_prefix(remaining)
            empty_run = 0
        elif east:
            low = min(pi[p - 1] for p in placed)
            cell = [p for p in remaining if pi[p - 1] > low]
        else:
            right = max(placed)
            cell = [p for p in remaining if p < right]
        cells.append(tuple(cell))
        empty_run = empty_run + 1 if not cell else 0
        placed.update(cell)
        remaining = [p for p in remaining if p not in placed]
        east = not east
    return Gridding(tuple(cells))
