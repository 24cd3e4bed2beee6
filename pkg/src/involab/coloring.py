"""Red/blue colorings of 1324-avoiders and their two-word encoding.

A 1324-avoider is colored greedily from left to right: an entry is red
unless it would be the '2' of a red 132 with earlier red entries.  The
modified coloring then turns every right-to-left maximum blue.  Labels:
red left-to-right minimum -> a, other red -> b, blue right-to-left
maximum -> d, other blue -> c.  The word e lists labels by position, the
word v by value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import (Permutation, contains, left_to_right_minima,
                   right_to_left_maxima)

__all__ = ["ColoredPerm", "LabelWordPair", "color_1324", "encode",
           "coloring_violations", "verify_encoding", "count_word_pairs",
           "ALLOWED_PAIRS"]

RED, BLUE = "R", "B"

# label pairs (e_i, v_i) allowed at one index: a and d must coincide
ALLOWED_PAIRS = tuple((p, q) for p in "abcd" for q in "abcd"
                      if (p == "a") == (q == "a") and (p == "d") == (q == "d"))


@dataclass(frozen=True)
class ColoredPerm:
    perm: Permutation
    colors: str  # colors[i] is the color of the entry at position i + 1

    def entries(self, color: str) -> list[int]:
        return [v for v, c in zip(self.perm, self.colors) if c == color]

    def __str__(self) -> str:
        return " ".join(f"{v}{c}" for v, c in zip(self.perm, self.colors))


@dataclass(frozen=True)
class LabelWordPair:
    e: str
    v: str

    def has_cb(self) -> bool:
        return "cb" in self.e or "cb" in self.v

    def positions(self, letter: str) -> tuple[set[int], set[int]]:
        return ({i for i, c in enumerate(self.e) if c == letter},
                {i for i, c in enumerate(self.v) if c == letter})


def _require_1324_avoider(pi: Sequence[int]) -> Permutation:
    pi = Permutation(pi)
    if contains(pi, (1, 3, 2, 4)):
        raise ValueError(f"{pi} contains 1324")
    return pi


def _greedy_colors(pi: Sequence[int]) -> list[str]:
    colors = []
    # for each red entry: (its value, smallest red value before it)
    reds: list[tuple[int, int]] = []
    low = None
    for v in pi:
        blocked = any(top > v > below for top, below in reds if below is not None)
        if blocked:
            colors.append(BLUE)
        else:
            colors.append(RED)
            reds.append((v, low))
            low = v if low is None else min(low, v)
    return colors


def color_1324(pi: Sequence[int]) -> ColoredPerm:
    """Greedy coloring with every right-to-left maximum recolored blue."""
    pi = _require_1324_avoider(pi)
    colors = _greedy_colors(pi)
    for p in right_to_left_maxima(pi):
        colors[p - 1] = BLUE
    return ColoredPerm(pi, "".join(colors))


def _labels(colored: ColoredPerm) -> list[str]:
    pi = colored.perm
    lrmin = set(left_to_right_minima(pi))
    rlmax = set(right_to_left_maxima(pi))
    out = []
    for pos, c in enumerate(colored.colors, 1):
        if c == RED:
            out.append("a" if pos in lrmin else "b")
        else:
            out.append("d" if pos in rlmax else "c")
    return out


def encode(pi: Sequence[int]) -> LabelWordPair:
    """The pair (e, v): labels read by position and by value."""
    colored = color_1324(pi)
    labels = _labels(colored)
    by_value = [""] * len(labels)
    for pos, val in enumerate(colored.perm):
        by_value[val - 1] = labels[pos]
    return LabelWordPair("".join(labels), "".join(by_value))


def coloring_violations(pi: Sequence[int]) -> list[str]:
    """Broken coloring invariants for one 1324-avoider (empty when all hold)."""
    colored = color_1324(pi)
    problems = []
    if contains(colored.entries(RED), (1, 3, 2)):
        problems.append(f"{colored.perm}: red entries contain 132")
    if contains(colored.entries(BLUE), (2, 1, 3)):
        problems.append(f"{colored.perm}: blue entries contain 213")
    if any(colored.colors[p - 1] != BLUE for p in right_to_left_maxima(colored.perm)):
        problems.append(f"{colored.perm}: a right-to-left maximum is red")
    return problems


def verify_encoding(n: int, involutions_only: bool = True) -> dict:
    """Check the encoding over every 1324-avoiding involution of length n.

    Returns {n, violations, distinct_pairs, avoider_count}; the map is
    injective exactly when distinct_pairs equals avoider_count.
    """
    from .enumeration import avoiders

    if n < 1:
        raise ValueError("n must be positive")
    perms = avoiders([(1, 3, 2, 4)], n, involutions_only=involutions_only)
    violations: list[str] = []
    seen: dict[LabelWordPair, Permutation] = {}
    for pi in perms:
        violations.extend(coloring_violations(pi))
        pair = encode(pi)
        if pair.has_cb():
            violations.append(f"{pi}: cb factor in ({pair.e}, {pair.v})")
        if involutions_only:
            for letter in "ad":
                pe, pv = pair.positions(letter)
                if pe != pv:
                    violations.append(f"{pi}: {letter} positions differ in "
                                      f"({pair.e}, {pair.v})")
        if pair in seen:
            violations.append(f"{pi} and {seen[pair]} share ({pair.e}, {pair.v})")
        else:
            seen[pair] = pi
    return {"n": n, "violations": violations, "distinct_pairs": len(seen),
            "avoider_count": len(perms)}


def count_word_pairs(n: int) -> int:
    """Pairs of length-n words over {a,b,c,d} with matching a and d
    positions and no factor cb in either word.

    Transfer matrix over the last letter pair; the start state allows any
    allowed pair.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    counts = {pair: 1 for pair in ALLOWED_PAIRS}
    for _ in range(n - 1):
        nxt = dict.fromkeys(ALLOWED_PAIRS, 0)
        for (pe, pv), c in counts.items():
            for qe, qv in ALLOWED_PAIRS:
                if (pe, qe) == ("c", "b") or (pv, qv) == ("c", "b"):
                    continue
                nxt[(qe, qv)] += c
        counts = nxt
    return sum(counts.values())
