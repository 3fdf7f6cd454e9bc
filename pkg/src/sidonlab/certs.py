"""Independent re-checking of the JSON certificates the CLI emits."""

from __future__ import annotations

from ._intmath import prime_power
from .sidon import is_interval_sidon, is_sidon, is_sidon_mod
from .singer import MAX_Q, build_singer_set, verify_perfect_difference_set
from .transfer import window_image


class CertificateError(ValueError):
    pass


def _int(rec: dict, key: str, minimum: int | None = None) -> int:
    v = rec.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise CertificateError(f"field {key!r} must be an integer")
    if minimum is not None and v < minimum:
        raise CertificateError(f"field {key!r} must be >= {minimum}")
    return v


def _int_list(rec: dict, key: str) -> list[int]:
    v = rec.get(key)
    if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise CertificateError(f"field {key!r} must be a list of integers")
    return v


def _verify_singer(rec: dict) -> str:
    p, k, q, M = (_int(rec, f, 1) for f in ("p", "k", "q", "modulus"))
    residues = _int_list(rec, "residues")
    try:
        if prime_power(q) != (p, k):
            raise CertificateError(f"q = {q} is not {p}^{k}")
    except ValueError as e:
        raise CertificateError(str(e)) from None
    if M != q * q + q + 1:
        raise CertificateError(f"modulus {M} != q^2+q+1 = {q * q + q + 1}")
    if len(residues) != q + 1:
        raise CertificateError(f"{len(residues)} residues, expected q+1 = {q + 1}")
    if residues != sorted(residues):
        raise CertificateError("residues are not sorted")
    rep = verify_perfect_difference_set(residues, M)
    if not rep.ok:
        raise CertificateError(f"not a perfect difference set: {rep.reason}")
    if not is_sidon_mod(M, residues):
        raise CertificateError(f"not Sidon mod {M}")
    # translates and multiplier images are difference sets too; the record
    # also claims to be the canonical construction, so rebuild and compare
    if q <= MAX_Q and tuple(residues) != build_singer_set(q).residues:
        raise CertificateError("residues differ from the canonical construction for this q")
    return f"singer q={q}: {q + 1} residues form a ({M},{q + 1},1) difference set"


def _recompute(rec: dict):
    level = rec.get("level")
    A = _int_list(rec, "set")
    if level == "integer":
        return is_sidon(A)
    if level == "modular":
        return is_sidon_mod(_int(rec, "M", 1), A)
    if level == "interval":
        return is_interval_sidon(_int(rec, "N", 1), A)
    raise CertificateError(f"unknown level {level!r}")


def _verify_sidon_cert(rec: dict) -> str:
    cert = _recompute(rec)
    if rec.get("verified") is not cert.verified:
        raise CertificateError(f"claimed verified={rec.get('verified')}, recomputed {cert.verified}")
    claimed_v = rec.get("violation")
    actual_v = list(cert.violation) if cert.violation else None
    if claimed_v != actual_v:
        raise CertificateError(f"claimed violation {claimed_v}, recomputed {actual_v}")
    return f"sidon-cert ({cert.level}): verified={cert.verified}"


def _verify_transfer(rec: dict) -> str:
    src = rec.get("source")
    if not isinstance(src, dict) or src.get("kind") != "sidon-cert" or src.get("level") != "modular":
        raise CertificateError("transfer source must be a modular sidon-cert")
    _verify_sidon_cert(src)
    if src.get("verified") is not True:
        raise CertificateError("transfer source is not modular Sidon")
    M = _int(src, "M", 1)
    S = _int_list(src, "set")
    if any(not 0 <= x < M for x in S):
        raise CertificateError(f"source residues must lie in [0, {M})")
    u = _int(rec, "offset", 0)
    N = _int(rec, "N", 1)
    if u >= M or N > M:
        raise CertificateError("offset or window length out of range")
    image = _int_list(rec, "image")
    if image != list(window_image(S, M, u, N)):
        raise CertificateError("image does not match the window restriction")
    if not is_interval_sidon(N, image):
        raise CertificateError(f"image is not interval Sidon in {{1..{N}}}")
    if rec.get("full") is not (len(image) == len(S)):
        raise CertificateError("full flag is wrong")
    return f"transfer: {len(image)} of {len(S)} residues, interval Sidon in {{1..{N}}}"


_VERIFIERS = {"singer": _verify_singer, "sidon-cert": _verify_sidon_cert, "transfer": _verify_transfer}


def verify_certificate(rec) -> str:
    """Re-check a certificate record; returns a summary or raises CertificateError."""
    if not isinstance(rec, dict):
        raise CertificateError("certificate must be a JSON object")
    fn = _VERIFIERS.get(rec.get("kind"))
    if fn is None:
        raise CertificateError(f"unknown certificate kind {rec.get('kind')!r}")
    try:
        return fn(rec)
    except CertificateError:
        raise
    except (ValueError, TypeError, OverflowError) as e:
        raise CertificateError(str(e)) from None
