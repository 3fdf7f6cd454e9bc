"""Exact h(N) and the finite upper/lower bounds around it.

h(N) is built incrementally. A maximum set in {1..N} that is not also a
maximum set in {1..N-1} must contain both 1 and N, so each step asks one
question: is there an (h(N-1)+1)-element Sidon set with endpoints 1 and N?
The lexicographically smallest witness is carried forward the same way: the
new witness either keeps the old one or contains N and beats it lexically.
"""

from __future__ import annotations

import csv
import io
import json
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from . import _search
from .primes import bertrand_prime, gap_prime
from .sidon import IntSet, as_intset, is_interval_sidon, is_sidon
from .singer import build_singer_set
from .transfer import full_transfer, singer_threshold

DEFAULT_CAP = 200


@dataclass(frozen=True)
class HResult:
    N: int
    h: int
    witness: IntSet
    nodes: int = field(default=0, compare=False)

    def to_json(self) -> str:
        rec = {"kind": "hmax", "N": self.N, "h": self.h, "witness": list(self.witness)}
        return json.dumps(rec, sort_keys=True, separators=(",", ":"))


class HSolver:
    """Memoized exact solver for h(n), n = 1, 2, ...

    ``workers`` > 1 splits each search by the value of the second element
    across threads (the kernel releases the GIL). Results, including node
    counts, do not depend on the worker count.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError("workers must be >= 1")
        self.workers = workers
        self._h = [0, 1]
        self._wit: list[IntSet] = [(), (1,)]
        self._nodes = [0, 0]
        self._lock = threading.Lock()

    @property
    def frontier(self) -> int:
        return len(self._h) - 1

    def _search(self, n: int, k: int, bound: IntSet | None, mirror: bool):
        h = np.array(self._h + [0], dtype=np.int64)
        b = np.array(bound if bound else [0] * k, dtype=np.int64)
        use_bound = bound is not None
        if self.workers == 1 or n < 8:
            out, nodes = _search.search_endpoints(n, k, h, b, use_bound, mirror, 2, n - 1)
            return (tuple(int(v) for v in out) if out[0] else None), int(nodes)
        lo, hi = 2, n - 1
        chunks = min(4 * self.workers, hi - lo + 1)
        edges = [lo + (hi - lo + 1) * i // chunks for i in range(chunks + 1)]
        with ThreadPoolExecutor(self.workers) as pool:
            results = list(pool.map(
                lambda r: _search.search_endpoints(n, k, h, b, use_bound, mirror, r[0], r[1] - 1),
                zip(edges[:-1], edges[1:]),
            ))
        total = 0
        for out, nodes in results:
            total += int(nodes)
            if out[0]:
                return tuple(int(v) for v in out), total
        return None, total

    def _step(self, n: int) -> None:
        prev_h, prev_w = self._h[n - 1], self._wit[n - 1]
        k = prev_h + 1
        nodes = 0
        found = None
        # pair-difference bound: k(k-1)/2 distinct positive differences below n
        if k * (k - 1) // 2 <= n - 1:
            if k <= 2:
                found = tuple(range(1, k)) + (n,)
            else:
                exists, nodes = self._search(n, k, None, mirror=True)
                if exists:
                    found, more = self._search(n, k, None, mirror=False)
                    nodes += more
        if found:
            h, w = k, found
        else:
            h, w = prev_h, prev_w
            if prev_h >= 3:
                better, more = self._search(n, prev_h, prev_w, mirror=False)
                nodes += more
                if better:
                    w = better
        self._h.append(h)
        self._wit.append(w)
        self._nodes.append(self._nodes[-1] + nodes)

    def solve(self, N: int) -> HResult:
        if N < 1:
            raise ValueError(f"N must be >= 1, got {N}")
        with self._lock:
            for n in range(len(self._h), N + 1):
                self._step(n)
        return HResult(N, self._h[N], self._wit[N], self._nodes[N])

    def table(self, N: int) -> list[int]:
        self.solve(N)
        return self._h[: N + 1]


_default_solver = HSolver()


def h_exact(N: int, cap: int = DEFAULT_CAP, workers: int = 1, solver: HSolver | None = None) -> HResult:
    """Maximum size of a Sidon set in {1..N} with its lexicographically smallest witness."""
    if not 1 <= N <= cap:
        raise ValueError(f"N must satisfy 1 <= N <= cap = {cap}, got {N}")
    if solver is None:
        solver = _default_solver if workers == 1 else HSolver(workers)
    res = solver.solve(N)
    if not is_interval_sidon(N, res.witness) or len(res.witness) != res.h:
        raise RuntimeError(f"solver produced an invalid witness for N={N}")
    return res


# -- closed-form bounds, all in exact integer arithmetic -----------------------


def sandwich_lower(N: int) -> int:
    """floor((floor(sqrt N) + 1) / 2); h(N) exceeds this for N >= 5."""
    return (isqrt(N) + 1) // 2


def pair_diff_upper(N: int) -> int:
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    return isqrt(2 * N) + 1


def johnson_upper(N: int) -> int:
    if N < 16:
        raise ValueError(f"the shift-incidence bound needs N >= 16, got {N}")
    s = isqrt(N)
    return s + isqrt(s) + 2


def partial_check(N: int, h: int) -> bool:
    """h^2 <= 4N, i.e. |h - sqrt N| <= sqrt N for h >= 0."""
    if N < 5:
        raise ValueError(f"need N >= 5, got {N}")
    return h >= 0 and h * h <= 4 * N


# -- combinatorial checks on a single set -----------------------------------------


@dataclass
class CrossReport:
    ok: bool
    rows: list[dict]


def cross_difference_check(A, N: int) -> CrossReport:
    """For each split k, the cross-differences a_j - a_i (i <= k < j) are distinct in {1..N-1}."""
    A = as_intset(A)
    cert = is_interval_sidon(N, A)
    if not cert:
        raise ValueError(f"not an interval Sidon set in {{1..{N}}}: {cert.reason}")
    m = len(A)
    rows = []
    for k in range(1, m + 1):
        diffs = [A[j] - A[i] for i in range(k) for j in range(k, m)]
        rows.append({
            "k": k,
            "count": len(diffs),
            "distinct": len(set(diffs)) == len(diffs),
            "in_range": all(1 <= d <= N - 1 for d in diffs),
            "inequality": (m - k) * k <= N - 1,
        })
    ok = all(r["distinct"] and r["in_range"] and r["inequality"] for r in rows)
    return CrossReport(ok, rows)


def shift_intersections(A) -> dict[int, int]:
    """|A & (A + t)| for every nonzero |t| <= max(A) - min(A)."""
    A = as_intset(A)
    if len(A) < 2:
        return {}
    S = set(A)
    span = A[-1] - A[0]
    return {t: len(S & {a + t for a in A}) for t in range(-span, span + 1) if t}


@dataclass
class ShiftReport:
    ok: bool
    max_intersection: int
    worst_shift: int | None


def shift_intersection_check(A) -> ShiftReport:
    cert = is_sidon(A)
    if not cert:
        raise ValueError(f"not a Sidon set: {cert.reason}")
    inter = shift_intersections(A)
    if not inter:
        return ShiftReport(True, 0, None)
    worst = max(inter, key=lambda t: (inter[t], -abs(t), -t))
    return ShiftReport(inter[worst] <= 1, inter[worst], worst)


# -- lower-bound pipelines ---------------------------------------------------------


@dataclass(frozen=True)
class LowerResult:
    N: int
    witness: IntSet
    bound: int
    p: int | None = None
    threshold: int | None = None

    @property
    def ok(self) -> bool:
        return len(self.witness) > self.bound


def _singer_interval_witness(p: int) -> tuple[IntSet, int]:
    S = build_singer_set(p)
    thr = singer_threshold(p)
    return full_transfer(S.residues, S.modulus, thr).image, thr


def bertrand_lower(N: int) -> LowerResult:
    """Interval Sidon witness of size > floor((floor(sqrt N)+1)/2) via Singer + Bertrand."""
    if N < 5:
        raise ValueError(f"need N >= 5, got {N}")
    bound = sandwich_lower(N)
    if N < 9:
        return LowerResult(N, (1, 2), bound)
    m = isqrt(N)
    n = (m - 1) // 2
    p = bertrand_prime(n)
    witness, thr = _singer_interval_witness(p)
    chain = [thr, p * p + 1, 4 * n * n + 1, (2 * n + 1) ** 2, m * m, N]
    if any(a > b for a, b in zip(chain, chain[1:])) or thr > N:
        raise RuntimeError(f"containment chain fails for N={N}: {chain}")
    if not is_interval_sidon(N, witness) or len(witness) != p + 1:
        raise RuntimeError(f"transferred witness invalid for N={N}")
    return LowerResult(N, witness, bound, p, thr)


def gap_transfer_lower(N: int, delta) -> LowerResult | None:
    """Singer witness from a prime in (x - x^delta, x], x = floor(sqrt N), when one exists and fits."""
    x = isqrt(N)
    if x < 2:
        return None
    p = gap_prime(x, Fraction(delta))
    if p is None or singer_threshold(p) > N:
        return None
    witness, thr = _singer_interval_witness(p)
    return LowerResult(N, witness, sandwich_lower(N), p, thr)


# -- tables ----------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundsRow:
    N: int
    h: int
    lower: int
    upper_pd: int
    upper_johnson: int | None
    lower_ok: bool
    upper_pd_ok: bool
    johnson_ok: bool | None
    partial_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_pd_ok and self.johnson_ok is not False and self.partial_ok


CSV_HEADER = ["N", "h", "lower", "upper_pd", "upper_johnson", "partial_ok"]


def bounds_row(N: int, cap: int = DEFAULT_CAP, solver: HSolver | None = None) -> BoundsRow:
    if not 5 <= N <= cap:
        raise ValueError(f"N must satisfy 5 <= N <= cap = {cap}, got {N}")
    h = h_exact(N, cap=cap, solver=solver).h
    lower, upper = sandwich_lower(N), pair_diff_upper(N)
    uj = johnson_upper(N) if N >= 16 else None
    return BoundsRow(
        N=N, h=h, lower=lower, upper_pd=upper, upper_johnson=uj,
        lower_ok=lower < h, upper_pd_ok=h <= upper,
        johnson_ok=None if uj is None else h <= uj,
        partial_ok=partial_check(N, h),
    )


def bounds_csv(rows: list[BoundsRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.N, r.h, r.lower, r.upper_pd,
                    "" if r.upper_johnson is None else r.upper_johnson,
                    "true" if r.partial_ok else "false"])
    return buf.getvalue()


@dataclass
class MonotoneReport:
    ok: bool
    monotone: bool
    positive: bool
    step_le_one: bool
    first_failure: int | None = None


def h_monotone_check(lo: int, hi: int, solver: HSolver | None = None) -> MonotoneReport:
    """h(n) <= h(n+1) and h(n) >= 1 on [lo, hi]; also h(n+1) <= h(n) + 1 as a sanity check."""
    if not 1 <= lo <= hi:
        raise ValueError(f"bad range [{lo}, {hi}]")
    solver = solver or _default_solver
    h = solver.table(hi)
    mono = pos = step = True
    first = None
    for n in range(lo, hi + 1):
        if h[n] < 1:
            pos = False
            first = first or n
        if n < hi:
            if h[n] > h[n + 1]:
                mono = False
                first = first or n
            if h[n + 1] > h[n] + 1:
                step = False
                first = first or n
    return MonotoneReport(mono and pos, mono, pos, step, first)
