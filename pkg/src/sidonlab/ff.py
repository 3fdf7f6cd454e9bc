"""Exact arithmetic in GF(p^d) using a polynomial basis.

Elements are stored by their integer encoding ``sum(c_i * p**i)`` where
``c_0, ..., c_{d-1}`` are the coefficients, lowest degree first. The same
encoding gives the total order used for every canonical choice below
(modulus, generator, kernel basis).

Characteristic 2 uses bit operations on the encoding directly; odd
characteristic goes through coefficient lists.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from ._intmath import factorize, is_prime

MAX_ORDER = 1 << 24


class FieldMismatchError(ValueError):
    """Raised when elements of different fields are combined."""


# -- polynomials over GF(p), coefficient lists lowest degree first ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    f = _trim(list(f))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _x_pow_mod(e: int, f: list[int], p: int) -> list[int]:
    """x**e mod f."""
    result = [1]
    base = _pmod([0, 1], f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _digits(n: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        n, r = divmod(n, p)
        out.append(r)
    return out


def _monic_polys(p: int, deg: int):
    for enc in range(p ** deg):
        yield _digits(enc, p, deg) + [1]


def _is_irreducible(f: list[int], p: int) -> bool:
    d = len(f) - 1
    if d <= 1:
        return True
    if d <= 4 and p ** d <= 1 << 20:
        for deg in range(1, d // 2 + 1):
            for g in _monic_polys(p, deg):
                if not _pmod(f, g, p):
                    return False
        return True
    # Rabin: x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) == 1 for primes l | d
    if _psub(_x_pow_mod(p ** d, f, p), [0, 1], p):
        return False
    for ell in factorize(d):
        h = _psub(_x_pow_mod(p ** (d // ell), f, p), [0, 1], p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


@dataclass(frozen=True)
class PrimePoly:
    """Polynomial over GF(p), coefficients lowest degree first."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.p})")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def encoding(self) -> int:
        """Encoding of the non-leading coefficients, used to order moduli."""
        return sum(c * self.p ** i for i, c in enumerate(self.coeffs[:-1]))

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


@lru_cache(maxsize=None)
def find_irreducible(p: int, d: int) -> PrimePoly:
    """Monic irreducible of degree d over GF(p) with the smallest encoding."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    for enc in range(p ** d):
        f = _digits(enc, p, d) + [1]
        if _is_irreducible(f, p):
            return PrimePoly(p, tuple(f))
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- fields ------------------------------------------------------------------


class FieldSpec:
    """GF(p^d) with a designated subfield GF(q), q = p^k, k | d.

    Use :func:`get_field` to get the shared cached instance.
    """

    def __init__(self, p: int, d: int, k: int | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if d < 1:
            raise ValueError(f"extension degree must be >= 1, got {d}")
        if p ** d > MAX_ORDER:
            raise ValueError(f"GF({p}^{d}) exceeds the supported size 2^24")
        k = d if k is None else k
        if k < 1 or d % k:
            raise ValueError(f"subfield degree {k} must divide {d}")
        self.p, self.d, self.k = p, d, k
        self.q = p ** k
        self.order = p ** d
        self.modulus = find_irreducible(p, d)
        self._m = list(self.modulus.coeffs[:-1])
        self._modmask = sum(c << i for i, c in enumerate(self.modulus.coeffs))
        self._lock = threading.Lock()
        self._bsgs: dict[tuple[int, int], tuple[dict[int, int], int, int]] = {}
        self._generator: int | None = None

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, d={self.d}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.d, self.k) == (other.p, other.d, other.k)

    def __hash__(self):
        return hash((self.p, self.d, self.k))

    # element constructors
    def __call__(self, value: int) -> FFElement:
        return FFElement(self, value)

    def from_coeffs(self, coeffs) -> FFElement:
        coeffs = list(coeffs)
        if len(coeffs) > self.d:
            raise ValueError(f"at most {self.d} coefficients allowed")
        return FFElement(self, sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs)))

    @property
    def zero(self) -> FFElement:
        return FFElement(self, 0)

    @property
    def one(self) -> FFElement:
        return FFElement(self, 1)

    def elements(self):
        return (FFElement(self, v) for v in range(self.order))

    # integer-level arithmetic on encodings
    def decode(self, a: int) -> list[int]:
        return _digits(a, self.p, self.d)

    def encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)[: self.d]):
            v = v * self.p + c % self.p
        return v

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.encode([(x + y) % p for x, y in zip(self.decode(a), self.decode(b))])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.encode([(x - y) % p for x, y in zip(self.decode(a), self.decode(b))])

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.p == 2:
            d, mask = self.d, self._modmask
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> d & 1:
                    a ^= mask
            return r
        p, d, m = self.p, self.d, self._m
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        # x^d == -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
        for t in range(2 * d - 2, d - 1, -1):
            c = prod[t] % p
            if c:
                base = t - d
                for i, mi in enumerate(m):
                    prod[base + i] -= c * mi
        v = 0
        for i in range(d - 1, -1, -1):
            v = v * p + prod[i] % p
        return v

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        p = self.p
        # extended Euclid: track s with s * a == r (mod f)
        r0, r1 = list(self.modulus.coeffs), _trim(self.decode(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            inv_lead = pow(r1[-1], -1, p)
            quot: list[int] = []
            rem = list(r0)
            while len(rem) >= len(r1):
                c = rem[-1] * inv_lead % p
                shift = len(rem) - len(r1)
                if len(quot) <= shift:
                    quot += [0] * (shift + 1 - len(quot))
                quot[shift] = c
                for i, rc in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - c * rc) % p
                _trim(rem)
            r0, r1 = r1, rem
            s0, s1 = s1, _psub(s0, _pmul(quot, s1, p), p)
        c = pow(r1[0], -1, p)
        return self.encode([x * c % p for x in s1] + [0] * self.d)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        e %= self.order - 1
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result


@lru_cache(maxsize=None)
def get_field(p: int, d: int, k: int | None = None) -> FieldSpec:
    return FieldSpec(p, d, k)


class FFElement:
    """An element of a :class:`FieldSpec`, stored by integer encoding."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        if not 0 <= value < spec.order:
            raise ValueError(f"encoding {value} out of range for GF({spec.p}^{spec.d})")
        self.spec = spec
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec.decode(self.value))

    def _check(self, other) -> FFElement:
        if not isinstance(other, FFElement):
            raise TypeError(f"expected FFElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldMismatchError(f"{self.spec!r} vs {other.spec!r}")
        return other

    def __add__(self, other):
        return ff_add(self, other)

    def __sub__(self, other):
        return ff_sub(self, other)

    def __mul__(self, other):
        return ff_mul(self, other)

    def __truediv__(self, other):
        return ff_mul(self, ff_inv(other))

    def __neg__(self):
        return FFElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return ff_pow(self, e)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.spec == other.spec and self.value == other.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __repr__(self):
        body = PrimePoly(self.spec.p, self.coeffs)
        return f"FFElement({body} in GF({self.spec.p}^{self.spec.d}))"


def ff_add(a: FFElement, b: FFElement) -> FFElement:
    a._check(b)
    return FFElement(a.spec, a.spec.add(a.value, b.value))


def ff_sub(a: FFElement, b: FFElement) -> FFElement:
    a._check(b)
    return FFElement(a.spec, a.spec.sub(a.value, b.value))


def ff_mul(a: FFElement, b: FFElement) -> FFElement:
    a._check(b)
    return FFElement(a.spec, a.spec.mul(a.value, b.value))


def ff_inv(a: FFElement) -> FFElement:
    return FFElement(a.spec, a.spec.inv(a.value))


def ff_pow(a: FFElement, e: int) -> FFElement:
    return FFElement(a.spec, a.spec.pow(a.value, e))


def frobenius_pow(a: FFElement, e: int) -> FFElement:
    """a ** (p ** e), by e successive p-th powers."""
    if e < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    spec, v = a.spec, a.value
    for _ in range(e):
        v = spec.pow(v, spec.p)
    return FFElement(spec, v)


def _subfield_degree(spec: FieldSpec, q: int) -> int:
    k, r = 0, 1
    while r < q:
        r *= spec.p
        k += 1
    if r != q or spec.d % k:
        raise ValueError(f"GF({q}) is not a subfield of GF({spec.p}^{spec.d})")
    return k


def rel_trace(a: FFElement, q: int) -> FFElement:
    """Relative trace GF(q^3) -> GF(q): a + a^q + a^(q^2)."""
    spec = a.spec
    if spec.d % 3 or q != spec.p ** (spec.d // 3):
        raise ValueError(f"GF({spec.p}^{spec.d}) is not a cubic extension of GF({q})")
    k = spec.d // 3
    a1 = frobenius_pow(a, k)
    a2 = frobenius_pow(a1, k)
    return a + a1 + a2


def is_in_subfield(a: FFElement, q: int) -> bool:
    k = _subfield_degree(a.spec, q)
    return frobenius_pow(a, k) == a


def _order_prime_factors(spec: FieldSpec) -> list[int]:
    return sorted(factorize(spec.order - 1))


def find_generator(spec: FieldSpec) -> FFElement:
    """Smallest-encoding element of multiplicative order p^d - 1."""
    if spec._generator is None:
        n = spec.order - 1
        primes = _order_prime_factors(spec)
        for v in range(1, spec.order):
            if all(spec.pow(v, n // ell) != 1 for ell in primes):
                spec._generator = v
                break
        else:  # pragma: no cover
            raise AssertionError("multiplicative group of a finite field is cyclic")
    return FFElement(spec, spec._generator)


def _bsgs_table(spec: FieldSpec, base: int, group_order: int):
    key = (base, group_order)
    entry = spec._bsgs.get(key)
    if entry is None:
        with spec._lock:
            entry = spec._bsgs.get(key)
            if entry is None:
                m = isqrt(group_order - 1) + 1
                table: dict[int, int] = {}
                x = 1
                for j in range(m):
                    table.setdefault(x, j)
                    x = spec.mul(x, base)
                factor = spec.inv(spec.pow(base, m))
                entry = (table, m, factor)
                spec._bsgs[key] = entry
    return entry


def _bsgs(spec: FieldSpec, base: int, target: int, group_order: int) -> int:
    table, m, factor = _bsgs_table(spec, base, group_order)
    y = target
    for i in range(m):
        j = table.get(y)
        if j is not None:
            return (i * m + j) % group_order
        y = spec.mul(y, factor)
    raise ValueError("target is not in the subgroup generated by the base")


def discrete_log(g: FFElement, a: FFElement) -> int:
    """The unique e in [0, p^d - 1) with g**e == a (baby-step/giant-step)."""
    g._check(a)
    if a.value == 0:
        raise ValueError("discrete log of zero is undefined")
    spec = g.spec
    n = spec.order - 1
    if n == 1:
        return 0
    return _bsgs(spec, g.value, a.value, n)


def quotient_log(g: FFElement, a: FFElement, modulus: int) -> int:
    """log_g(a) mod ``modulus`` for a divisor ``modulus`` of p^d - 1.

    With c = (p^d - 1) / modulus, ``a**c`` lies in the subgroup of order
    ``modulus`` generated by ``g**c`` and its log there is log_g(a) mod modulus,
    so the search only costs about sqrt(modulus) multiplications.
    """
    g._check(a)
    if a.value == 0:
        raise ValueError("discrete log of zero is undefined")
    spec = g.spec
    n = spec.order - 1
    if modulus < 1 or n % modulus:
        raise ValueError(f"{modulus} does not divide {n}")
    if modulus == 1:
        return 0
    c = n // modulus
    return _bsgs(spec, spec.pow(g.value, c), spec.pow(a.value, c), modulus)
