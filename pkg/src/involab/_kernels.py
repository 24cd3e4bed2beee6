"""Compiled inner loops for the avoidance searches.

Everything here works on 0-based int64 arrays: a permutation of length n is
an array whose first n slots hold the values 0..n-1, and a basis is a 2-D
array with one (padded) pattern per row plus a vector of pattern lengths.

The search walks a generating tree in which every node is itself an avoider:

* class mode: a child appends one new last entry (any value, the old values
  shift up to make room);
* involution mode: a child either appends a new fixed point at the top right,
  or inserts a 2-cycle ``(t, n)`` so that the new maximum sits at position t
  and the new last entry has value t.

Removing the last entry (and, for involutions, its partner) always yields a
smaller avoider, so every avoider has exactly one parent and the tree lists
each of them once.  A child only needs checking for occurrences that end at
its last entry; in involution mode the basis is closed under inverses first,
which also covers occurrences that use the new maximum.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def ends_with(q, n, pat, k, idx):
    """True if ``pat`` occurs in ``q[:n]`` with its last letter at q[n-1]."""
    if k > n:
        return False
    if k == 1:
        return True
    last = q[n - 1]
    plast = pat[k - 1]
    level = 0
    idx[0] = -1
    while level >= 0:
        idx[level] += 1
        if idx[level] > n - k + level:
            level -= 1
            continue
        v = q[idx[level]]
        pv = pat[level]
        if (v < last) != (pv < plast):
            continue
        ok = True
        for l in range(level):
            if (q[idx[l]] < v) != (pat[l] < pv):
                ok = False
                break
        if not ok:
            continue
        if level == k - 2:
            return True
        level += 1
        idx[level] = idx[level - 1]
    return False


@njit(cache=True, nogil=True)
def avoids_at_end(q, n, pats, lens, idx):
    for p in range(pats.shape[0]):
        if ends_with(q, n, pats[p], lens[p], idx):
            return False
    return True


@njit(cache=True, nogil=True)
def is_simple(q, n):
    if n < 2:
        return False
    for a in range(n):
        mn = q[a]
        mx = q[a]
        for b in range(a + 1, n):
            v = q[b]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == b - a and not (a == 0 and b == n - 1):
                return False
    return True


@njit(cache=True, nogil=True)
def contains(q, n, pat, k):
    """Plain containment test, used for whole permutations."""
    idx = np.zeros(k + 1, np.int64)
    for end in range(k - 1, n):
        if ends_with(q, end + 1, pat, k, idx):
            return True
    return False


@njit(cache=True, nogil=True)
def walk(root, rlen, max_n, pats, lens, involutive, simple_only, target, out):
    """Depth-first walk of the generating tree below ``root``.

    Returns ``(counts, written)``: ``counts[m]`` is the number of nodes of
    length m in the subtree (only simple ones when ``simple_only``), and the
    first ``written`` rows of ``out`` receive the counted nodes of length
    ``target``.  Pass an ``out`` with zero rows to count only.
    """
    counts = np.zeros(max_n + 1, np.int64)
    size = max_n + 2
    stack = np.zeros((size, size), np.int64)
    slen = np.zeros(size, np.int64)
    snext = np.zeros(size, np.int64)
    kmax = 1
    for p in range(lens.shape[0]):
        if lens[p] > kmax:
            kmax = lens[p]
    idx = np.zeros(kmax + 1, np.int64)
    written = 0

    for j in range(rlen):
        stack[0, j] = root[j]
    slen[0] = rlen
    snext[0] = 0
    if not simple_only or is_simple(root, rlen):
        counts[rlen] += 1
        if rlen == target and written < out.shape[0]:
            for j in range(rlen):
                out[written, j] = root[j]
            written += 1

    d = 0
    while d >= 0:
        m = slen[d]
        c = snext[d]
        snext[d] = c + 1
        par = stack[d]
        ch = stack[d + 1]
        if involutive:
            if c == 0:
                if m + 1 > max_n:
                    d -= 1
                    continue
                for j in range(m):
                    ch[j] = par[j]
                ch[m] = m
                nl = m + 1
            elif c <= m + 1 and m + 2 <= max_n:
                t = c - 1
                for j in range(t):
                    v = par[j]
                    ch[j] = v + 1 if v >= t else v
                ch[t] = m + 1
                for j in range(t + 1, m + 1):
                    v = par[j - 1]
                    ch[j] = v + 1 if v >= t else v
                ch[m + 1] = t
                nl = m + 2
            else:
                d -= 1
                continue
        else:
            if c <= m and m + 1 <= max_n:
                for j in range(m):
                    v = par[j]
                    ch[j] = v + 1 if v >= c else v
                ch[m] = c
                nl = m + 1
            else:
                d -= 1
                continue

        if not avoids_at_end(ch, nl, pats, lens, idx):
            continue
        d += 1
        slen[d] = nl
        snext[d] = 0
        if simple_only and not is_simple(ch, nl):
            continue
        counts[nl] += 1
        if nl == target and written < out.shape[0]:
            for j in range(nl):
                out[written, j] = ch[j]
            written += 1
    return counts, written
