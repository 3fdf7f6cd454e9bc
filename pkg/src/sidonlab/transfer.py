"""Moving modular Sidon sets into integer intervals through cyclic windows."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .sidon import is_interval_sidon, is_sidon_mod


class ThresholdError(ValueError):
    def __init__(self, N: int, minimal: int):
        super().__init__(f"N = {N} is below the full-transfer threshold; need N >= {minimal}")
        self.N = N
        self.minimal = minimal


def _residues(S, M: int) -> tuple[int, ...]:
    if M < 1:
        raise ValueError(f"modulus must be >= 1, got {M}")
    S = tuple(sorted(set(S)))
    if any(not 0 <= x < M for x in S):
        raise ValueError(f"residues must lie in [0, {M})")
    return S


def _require_modular_sidon(S, M):
    cert = is_sidon_mod(M, S)
    if not cert:
        raise ValueError(f"source is not Sidon mod {M}: {cert.reason}")


@dataclass(frozen=True)
class TransferResult:
    source: tuple[int, ...]
    M: int
    offset: int
    N: int
    image: tuple[int, ...]

    @property
    def full(self) -> bool:
        return len(self.image) == len(self.source)

    def to_dict(self) -> dict:
        source = {"kind": "sidon-cert", "level": "modular", "set": list(self.source),
                  "M": self.M, "N": None, "verified": True, "violation": None}
        return {"kind": "transfer", "source": source, "offset": self.offset,
                "N": self.N, "image": list(self.image), "full": self.full}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def window_image(S, M: int, u: int, N: int) -> tuple[int, ...]:
    return tuple(sorted((x - u) % M + 1 for x in S if (x - u) % M < N))


def window_restrict(S, M: int, u: int, N: int) -> TransferResult:
    S = _residues(S, M)
    if not 0 < N <= M:
        raise ValueError(f"window length must satisfy 0 < N <= M = {M}, got {N}")
    _require_modular_sidon(S, M)
    u %= M
    image = window_image(S, M, u, N)
    cert = is_interval_sidon(N, image)
    if not cert:
        raise RuntimeError(f"window image is not interval Sidon: {cert.reason}")
    return TransferResult(S, M, u, N, image)


def window_counts(S, M: int, N: int) -> list[int]:
    """card(u) = #{x in S : (x - u) mod M < N} for every offset u.

    Each x is captured by the N offsets x-N+1, ..., x (mod M), so this is a
    cyclic difference-array sweep.
    """
    S = _residues(S, M)
    if not 0 < N <= M:
        raise ValueError(f"window length must satisfy 0 < N <= M = {M}, got {N}")
    delta = [0] * (M + 1)
    for x in S:
        lo = x - N + 1
        if lo >= 0:
            delta[lo] += 1
            delta[x + 1] -= 1
        else:
            delta[0] += 1
            delta[x + 1] -= 1
            delta[lo + M] += 1
            delta[M] -= 1
    out, run = [], 0
    for u in range(M):
        run += delta[u]
        out.append(run)
    return out


def best_offset(S, M: int, N: int) -> tuple[int, int]:
    """Smallest offset whose window captures the most elements, and that count."""
    counts = window_counts(S, M, N)
    best = max(counts)
    return counts.index(best), best


@dataclass(frozen=True)
class GapProfile:
    residues: tuple[int, ...]
    M: int
    gaps: tuple[int, ...]  # gaps[i] runs from residues[i] to the next residue cyclically
    g_max: int
    index: int

    @property
    def floor_bound(self) -> int:
        s = len(self.residues)
        return (self.M + s * (s - 1) // 2) // s


def gap_profile(S, M: int) -> GapProfile:
    S = _residues(S, M)
    if not S:
        raise ValueError("gap profile of an empty set")
    s = len(S)
    gaps = tuple(S[i + 1] - S[i] for i in range(s - 1)) + (M - S[-1] + S[0],)
    g_max = max(gaps)
    prof = GapProfile(S, M, gaps, g_max, gaps.index(g_max))
    if is_sidon_mod(M, S):
        if len(set(gaps)) != s:
            raise RuntimeError(f"modular Sidon set with repeated cyclic gaps: {gaps}")
        if g_max < prof.floor_bound:
            raise RuntimeError(f"largest gap {g_max} below the bound {prof.floor_bound}")
    return prof


def full_transfer_threshold(S, M: int) -> int:
    S = _residues(S, M)
    s = len(S)
    return M - (M + s * (s - 1) // 2) // s + 1


def full_transfer(S, M: int, N: int) -> TransferResult:
    """Window starting just after a largest gap; keeps all of S once N clears the threshold."""
    S = _residues(S, M)
    _require_modular_sidon(S, M)
    minimal = full_transfer_threshold(S, M)
    if N < minimal:
        raise ThresholdError(N, minimal)
    if N > M:
        raise ValueError(f"window length must not exceed M = {M}, got {N}")
    prof = gap_profile(S, M)
    u = S[(prof.index + 1) % len(S)]
    res = window_restrict(S, M, u, N)
    if not res.full:
        raise RuntimeError(f"full transfer lost elements: {len(res.image)} of {len(S)}")
    return res


def singer_threshold(p: int) -> int:
    """p^2 + p + 2 - floor(3p/2), the full-transfer window length for Singer parameters."""
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    t = p * p + p + 2 - (3 * p) // 2
    if t != p * p + 2 - p // 2:
        raise RuntimeError("threshold forms disagree")
    if p >= 4 and t > p * p:
        raise RuntimeError(f"threshold {t} exceeds p^2 for p = {p}")
    return t
