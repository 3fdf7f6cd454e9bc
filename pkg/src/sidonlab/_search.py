"""Compiled depth-first search for Sidon sets with both endpoints fixed.

The kernel looks for a Sidon set {1 = a_0 < a_1 < ... < a_{k-1} = N} and
returns the lexicographically first one it meets. Candidates are tried in
increasing order, so the first leaf is the lexicographic minimum among the
sets the search admits.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def search_endpoints(N, k, h, bound, use_bound, mirror, a1_lo, a1_hi):
    """Search k-element Sidon sets in [1, N] that contain 1 and N.

    h[n] must hold the exact maximum for every n < N; it bounds how many
    marks still fit between the current mark and N.
    use_bound: only accept sets lexicographically smaller than ``bound``
    (a k-tuple whose last entry is < N).
    mirror: keep one set of each reflection pair (first gap < last gap);
    only valid for existence questions.
    a1_lo, a1_hi: inclusive range for the second element.

    Returns (marks, nodes); marks[0] == 0 when nothing was found.
    """
    out = np.zeros(k, np.int64)
    marks = np.zeros(k, np.int64)
    marks[0] = 1
    marks[k - 1] = N
    used = np.zeros(N + 1, np.bool_)
    used[N - 1] = True
    cand = np.zeros(k, np.int64)
    tight = np.zeros(k, np.bool_)
    tight[0] = use_bound and bound[0] == 1
    nodes = 0
    i = 1
    cand[1] = max(a1_lo, 2)
    while i >= 1:
        c = cand[i]
        hi = N - 1
        if i == 1:
            hi = min(hi, a1_hi)
        elif mirror:
            hi = min(hi, N - marks[1])
        placed = False
        while c <= hi:
            # marks left in [c, N] must fit: k - i <= h(N - c + 1); h is monotone
            if k - i > h[N - c + 1]:
                break
            if tight[i - 1] and c > bound[i]:
                break
            d = N - c
            ok = not used[d]
            if ok:
                for j in range(i):
                    e = c - marks[j]
                    if used[e] or e == d:
                        ok = False
                        break
            if ok:
                # the gaps between the remaining marks in [c, N] are distinct
                # unused differences summing to d
                r1 = k - 1 - i
                if r1 >= 2:
                    tot = 0
                    cnt = 0
                    x = 1
                    while cnt < r1 and tot <= d:
                        if not used[x] and x != d:
                            fresh = True
                            for j in range(i):
                                if c - marks[j] == x:
                                    fresh = False
                                    break
                            if fresh:
                                tot += x
                                cnt += 1
                        x += 1
                    if tot > d:
                        ok = False
            if ok:
                nodes += 1
                marks[i] = c
                used[d] = True
                for j in range(i):
                    used[c - marks[j]] = True
                cand[i] = c + 1
                tight[i] = tight[i - 1] and c == bound[i]
                placed = True
                break
            c += 1
        if placed:
            if i < k - 2:
                i += 1
                cand[i] = marks[i - 1] + 1
                continue
            # leaf; with a tight prefix the last entry N exceeds bound[k-1]
            if not tight[i]:
                for t in range(k):
                    out[t] = marks[t]
                return out, nodes
            c = marks[i]
            used[N - c] = False
            for j in range(i):
                used[c - marks[j]] = False
            continue
        i -= 1
        if i >= 1:
            c = marks[i]
            used[N - c] = False
            for j in range(i):
                used[c - marks[j]] = False
    return out, nodes


def warmup() -> None:
    h = np.array([0, 1, 2, 2, 3, 3], np.int64)
    search_endpoints(5, 3, h, np.zeros(3, np.int64), False, False, 2, 4)
