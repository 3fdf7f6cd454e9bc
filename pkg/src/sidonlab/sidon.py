"""Sidon predicates (integer, modular, interval) and the exact identities for Sidon sets.

Sets are passed as any iterable of ints and normalized to a sorted,
duplicate-free tuple. A collision is always a sum with repetition allowed
(a <= b), so {1, 2, 3} fails through 1 + 3 == 2 + 2.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

INT_LIMIT = 1 << 62

IntSet = tuple[int, ...]


def as_intset(A) -> IntSet:
    s = tuple(sorted(set(int(a) for a in A)))
    if s and max(abs(s[0]), abs(s[-1])) >= INT_LIMIT // 2:
        raise OverflowError("set elements must satisfy 2*|a| < 2**62")
    return s


@dataclass(frozen=True)
class SidonCert:
    level: str  # "integer" | "modular" | "interval"
    set: IntSet
    verified: bool
    M: int | None = None
    N: int | None = None
    violation: tuple[int, int, int, int] | None = None
    reason: str | None = field(default=None, compare=False)

    def __bool__(self):
        return self.verified

    def to_dict(self) -> dict:
        return {
            "kind": "sidon-cert",
            "level": self.level,
            "set": list(self.set),
            "M": self.M,
            "N": self.N,
            "verified": self.verified,
            "violation": list(self.violation) if self.violation else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _first_collision(A: IntSet, key) -> tuple[int, int, int, int] | None:
    seen: dict[int, tuple[int, int]] = {}
    for i, a in enumerate(A):
        for b in A[i:]:
            s = key(a + b)
            if s in seen:
                return seen[s] + (a, b)
            seen[s] = (a, b)
    return None


def is_sidon(A) -> SidonCert:
    A = as_intset(A)
    v = _first_collision(A, lambda s: s)
    return SidonCert("integer", A, v is None, violation=v,
                     reason=None if v is None else f"{v[0]}+{v[1]} == {v[2]}+{v[3]}")


def is_sidon_mod(M: int, A) -> SidonCert:
    if M < 1:
        raise ValueError(f"modulus must be >= 1, got {M}")
    A = as_intset(A)
    v = _first_collision(A, lambda s: s % M)
    return SidonCert("modular", A, v is None, M=M, violation=v,
                     reason=None if v is None else f"{v[0]}+{v[1]} == {v[2]}+{v[3]} (mod {M})")


def is_interval_sidon(N: int, A) -> SidonCert:
    if N < 1:
        raise ValueError(f"interval bound must be >= 1, got {N}")
    A = as_intset(A)
    outside = [a for a in A if not 1 <= a <= N]
    if outside:
        return SidonCert("interval", A, False, N=N, reason=f"{outside[0]} lies outside {{1..{N}}}")
    base = is_sidon(A)
    return SidonCert("interval", A, base.verified, N=N, violation=base.violation, reason=base.reason)


def no_wraparound(A, N: int, M: int) -> SidonCert:
    """Interval Sidon in {1..N} with M >= 2N-1 implies Sidon mod M; re-checked."""
    if M < 2 * N - 1:
        raise ValueError(f"need M >= 2N-1 = {2 * N - 1}, got M={M}")
    if not is_interval_sidon(N, A):
        raise ValueError(f"input is not an interval Sidon set in {{1..{N}}}")
    cert = is_sidon_mod(M, A)
    if not cert:
        raise RuntimeError(f"no-wraparound re-check failed for M={M}: {cert.reason}")
    return cert


def sumset(A) -> IntSet:
    A = as_intset(A)
    return tuple(sorted({a + b for a in A for b in A}))


def diffset(A) -> IntSet:
    A = as_intset(A)
    return tuple(sorted({a - b for a in A for b in A}))


def _ordered_sums(A: IntSet) -> Counter:
    return Counter(a + b for a in A for b in A)


def additive_energy(A) -> int:
    return sum(r * r for r in _ordered_sums(as_intset(A)).values())


@dataclass(frozen=True)
class RepProfile:
    set: IntSet
    pairs: dict[int, int]  # n -> r_A(n), over n in A+A


def rep_profile(A) -> RepProfile:
    A = as_intset(A)
    return RepProfile(A, dict(sorted(_ordered_sums(A).items())))


@dataclass
class IdentityReport:
    m: int
    checks: dict[str, bool | None]  # None means the identity does not apply at this size

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]


def check_identities(A) -> IdentityReport:
    """Evaluate every exact cardinality/representation identity of a Sidon set."""
    A = as_intset(A)
    cert = is_sidon(A)
    if not cert:
        raise ValueError(f"identities only hold for Sidon sets: {cert.reason}")
    m = len(A)
    r = rep_profile(A).pairs
    n_add, n_sub = len(sumset(A)), len(diffset(A))
    return IdentityReport(m, {
        "card_add": n_add == m * (m + 1) // 2,
        "card_sub": n_sub == m * m - m + 1 if m >= 1 else None,
        "energy": additive_energy(A) == 2 * m * m - m,
        "repr_le_two": all(v <= 2 for v in r.values()),
        "sum_repr": sum(r.values()) == m * m,
        "sum_repr_sq": sum(v * v for v in r.values()) == 2 * m * m - m,
        "deficiency": sum(2 - v for v in r.values()) == m,
        "card_sub_ge_add": n_sub >= n_add if m >= 1 else None,
        "card_sub_gt_add": n_sub > n_add if m >= 3 else None,
    })


def sidon_iff_card_add(A) -> tuple[bool, bool]:
    A = as_intset(A)
    m = len(A)
    pair = (is_sidon(A).verified, len(sumset(A)) == m * (m + 1) // 2)
    if pair[0] != pair[1]:
        raise RuntimeError(f"Sidon/sumset characterization disagrees on {A}")
    return pair
