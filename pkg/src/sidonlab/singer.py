"""Singer perfect difference sets from the trace kernel of GF(q^3)/GF(q)."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from ._intmath import prime_power
from .ff import (
    FFElement,
    FieldSpec,
    find_generator,
    get_field,
    is_in_subfield,
    quotient_log,
    rel_trace,
)

MAX_Q = 256


class ConstructionError(RuntimeError):
    """An internal invariant of the construction failed (a bug, not bad input)."""


def singer_field(q: int) -> FieldSpec:
    p, k = prime_power(q)
    if q > MAX_Q:
        raise ValueError(f"q = {q} exceeds the supported maximum {MAX_Q}")
    return get_field(p, 3 * k, k)


def _check_singer_spec(spec: FieldSpec, q: int) -> None:
    if spec.d != 3 * spec.k or spec.q != q:
        raise ValueError(f"{spec!r} is not GF({q}^3) over GF({q})")


def _nullspace_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {v : rows @ v == 0} over GF(p)."""
    a = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][free] % p
        basis.append(v)
    return basis


def trace_kernel(spec: FieldSpec, q: int) -> list[int]:
    """Encodings of all q^2 elements with zero relative trace, sorted.

    The trace is GF(p)-linear, so the kernel is the null space of the d x d
    matrix whose columns are the traces of 1, x, ..., x^(d-1).
    """
    _check_singer_spec(spec, q)
    p, d = spec.p, spec.d
    cols = [rel_trace(spec(p ** i), q).coeffs for i in range(d)]
    rows = [[cols[j][i] for j in range(d)] for i in range(d)]
    kernel = {0}
    for vec in _nullspace_mod_p(rows, d, p):
        b = spec.encode(vec)
        multiples = [0]
        for _ in range(p - 1):
            multiples.append(spec.add(multiples[-1], b))
        kernel = {spec.add(s, m) for s in kernel for m in multiples}
    if len(kernel) != q * q:
        raise ConstructionError(f"trace kernel has {len(kernel)} elements, expected {q * q}")
    return sorted(kernel)


def trace_kernel_nonzero(spec: FieldSpec, q: int) -> list[FFElement]:
    return [spec(v) for v in trace_kernel(spec, q)[1:]]


def subfield_elements(spec: FieldSpec) -> list[FFElement]:
    """GF(q) inside GF(p^d), sorted by encoding: 0 together with <g^((p^d-1)/(q-1))>."""
    g = find_generator(spec)
    h = spec.pow(g.value, (spec.order - 1) // (spec.q - 1))
    vals = {0}
    x = 1
    for _ in range(spec.q - 1):
        vals.add(x)
        x = spec.mul(x, h)
    return [spec(v) for v in sorted(vals)]


@dataclass(frozen=True)
class SingerSet:
    p: int
    k: int
    q: int
    modulus: int
    residues: tuple[int, ...]
    generator: int = field(default=0, compare=False)
    field_modulus: str = field(default="", compare=False)

    def to_json(self) -> str:
        rec = {
            "kind": "singer",
            "p": self.p,
            "k": self.k,
            "q": self.q,
            "modulus": self.modulus,
            "residues": list(self.residues),
        }
        return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def kernel_log_multiplicities(q: int, log=None) -> Counter:
    """Multiset {log_g(u) mod M : u nonzero in the trace kernel} as a Counter.

    ``log(g, u, M)`` defaults to :func:`quotient_log`; pass a different
    discrete-log route to cross-check.
    """
    spec = singer_field(q)
    g = find_generator(spec)
    M = q * q + q + 1
    log = log or quotient_log
    return Counter(log(g, u, M) for u in trace_kernel_nonzero(spec, q))


@lru_cache(maxsize=None)
def build_singer_set(q: int) -> SingerSet:
    """The canonical (q^2+q+1, q+1, 1) Singer difference set."""
    p, k = prime_power(q)
    spec = singer_field(q)
    M = q * q + q + 1
    counts = kernel_log_multiplicities(q)
    if len(counts) != q + 1 or any(c != q - 1 for c in counts.values()):
        raise ConstructionError(f"scalar-orbit structure broken for q={q}: {dict(counts)}")
    return SingerSet(
        p=p,
        k=k,
        q=q,
        modulus=M,
        residues=tuple(sorted(counts)),
        generator=find_generator(spec).value,
        field_modulus=str(spec.modulus),
    )


@dataclass
class PDSReport:
    ok: bool
    modulus: int
    size: int
    representations: list[int]
    violation: tuple[int, int] | None = None  # (residue, count)
    reason: str | None = None


def verify_perfect_difference_set(residues, modulus: int) -> PDSReport:
    """Count every ordered difference mod ``modulus``; lambda must be 1 everywhere."""
    S = list(residues)
    reps = [0] * max(modulus, 1)
    if modulus < 1:
        return PDSReport(False, modulus, len(S), reps, reason="modulus must be positive")
    if len(set(S)) != len(S):
        return PDSReport(False, modulus, len(S), reps, reason="duplicate residues")
    if any(not 0 <= s < modulus for s in S):
        return PDSReport(False, modulus, len(S), reps, reason=f"residues must lie in [0, {modulus})")
    for a in S:
        for b in S:
            if a != b:
                reps[(a - b) % modulus] += 1
    for r in range(1, modulus):
        if reps[r] != 1:
            return PDSReport(False, modulus, len(S), reps, violation=(r, reps[r]),
                             reason=f"residue {r} has {reps[r]} representations")
    return PDSReport(True, modulus, len(S), reps)


@dataclass
class ProjectiveReps:
    basis: tuple[FFElement, FFElement]
    reps: list[FFElement]  # affine v1 + t*v2 in subfield order, then v2 (the point at infinity)


def projective_representatives(spec: FieldSpec, q: int) -> ProjectiveReps:
    _check_singer_spec(spec, q)
    kernel = trace_kernel_nonzero(spec, q)
    scalars = subfield_elements(spec)
    v1 = kernel[0]
    line = {(t * v1).value for t in scalars}
    v2 = next(u for u in kernel if u.value not in line)
    reps = [v1 + t * v2 for t in scalars] + [v2]
    for i, a in enumerate(reps):
        if a.value == 0 or rel_trace(a, q).value != 0:
            raise ConstructionError(f"representative {a!r} is not a nonzero kernel element")
        for b in reps[i + 1:]:
            if is_in_subfield(a / b, q):
                raise ConstructionError(f"{a!r} and {b!r} are proportional over GF({q})")
    return ProjectiveReps((v1, v2), reps)


@dataclass
class CollisionReport:
    q: int
    quadruples: int
    violations: list[tuple[int, int, int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def collision_degeneration_check(q: int) -> CollisionReport:
    """Product collisions in the quotient degenerate into pair equalities.

    Over all ordered quadruples (u, v, w, x) of nonzero kernel elements with
    u*v = alpha*w*x for some alpha in GF(q)^x, checks that
    {log u, log v} == {log w, log x} mod q^2+q+1. Pairs are bucketed by the
    GF(q)^x-class of their product (computed in the field, without logs), and
    every quadruple inside a bucket is a candidate collision.
    """
    spec = singer_field(q)
    g = find_generator(spec)
    M = q * q + q + 1
    kernel = trace_kernel(spec, q)[1:]
    scalars = [s.value for s in subfield_elements(spec) if s.value]
    log = {u: quotient_log(g, spec(u), M) for u in kernel}

    def scalar_class(x: int) -> int:
        return min(spec.mul(a, x) for a in scalars)

    buckets: dict[int, dict[frozenset, tuple[int, int]]] = {}
    sizes: Counter = Counter()
    for u in kernel:
        for v in kernel:
            c = scalar_class(spec.mul(u, v))
            sizes[c] += 1
            # one representative pair per distinct coset pair in the bucket
            buckets.setdefault(c, {}).setdefault(frozenset((log[u], log[v])), (u, v))
    violations = []
    for pairs in buckets.values():
        if len(pairs) > 1:
            (u, v), (w, x) = list(pairs.values())[:2]
            violations.append((u, v, w, x))
    return CollisionReport(q, sum(n * n for n in sizes.values()), violations)
