"""Finite fields GF(q) with a canonical element order and the quadratic character.

Elements are stored by *index*: the coefficient vector (c_0, ..., c_{e-1}) of
the polynomial c_0 + c_1 x + ... + c_{e-1} x^{e-1} maps to the integer
c_0 + c_1 p + ... + c_{e-1} p^{e-1}.  Hence 0 has index 0, 1 has index 1, and
for a prime field the index is the residue itself.

Multiplication goes through discrete log/antilog tables over a primitive
element; addition goes through base-p digit tables.  Both are O(q) in memory,
so every field up to the size cap is built eagerly.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass

import numpy as np

from .errors import (
    EvenCharacteristic,
    FieldMismatch,
    FieldTooLarge,
    NotPrimePower,
    PropertyCheckFailed,
)

DEFAULT_FIELD_CAP = 2**14
FIELD_CAP_ENV = "WEIGHCODES_FIELD_CAP"


def field_cap() -> int:
    return int(os.environ.get(FIELD_CAP_ENV, DEFAULT_FIELD_CAP))


@dataclass(frozen=True)
class PrimePower:
    q: int
    p: int
    e: int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factor_prime_power(q: int) -> PrimePower:
    """Split ``q = p**e`` with ``p`` prime; raise :class:`NotPrimePower` otherwise."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    q = int(q)
    p = next(f for f in itertools.count(2) if q % f == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"{q} has at least two distinct prime factors")
    return PrimePower(q, p, e)


def is_odd_prime_power(q: int) -> bool:
    try:
        return factor_prime_power(q).p != 2
    except NotPrimePower:
        return False


# -- polynomial helpers over GF(p); coefficient lists are constant-term first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, m, p) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, m, p)


def _poly_powmod(a, k: int, m, p) -> list[int]:
    result = [1]
    base = _poly_mod(a, m, p)
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        k >>= 1
    return _poly_mod(result, m, p)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, tuple(low) + (1,), p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``e`` over GF(p).

    Coefficients are compared constant-term first.  For ``e == 1`` this is ``x``.
    """
    for low in itertools.product(range(p), repeat=e):
        poly = tuple(low) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


class FiniteField:
    """The field GF(q) with elements enumerated by index ``0 .. q-1``."""

    def __init__(self, q: int, cap: int | None = None):
        self.order = factor_prime_power(q)
        cap = field_cap() if cap is None else cap
        if q > cap:
            raise FieldTooLarge(f"GF({q}) exceeds field size cap {cap}")
        self.q, self.p, self.e = self.order.q, self.order.p, self.order.e
        p, e = self.p, self.e
        self.modulus = smallest_irreducible(p, e)

        self._powers = p ** np.arange(e, dtype=np.int64)
        self._digits = np.array(
            [[(i // p**k) % p for k in range(e)] for i in range(q)], dtype=np.int64
        ).reshape(q, e)

        self._exp, self._log = self._build_log_tables()
        self._chi = self._build_chi()

    # -- construction ---------------------------------------------------------

    def _poly(self, index: int) -> list[int]:
        return _trim([int(c) for c in self._digits[index]])

    def _index(self, poly) -> int:
        return sum(int(c) * self.p**k for k, c in enumerate(poly))

    def _build_log_tables(self):
        q = self.q
        exp = np.zeros(max(q - 1, 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        for g in range(1, q):
            g_poly = self._poly(g)
            cur = [1]
            seen = []
            for _ in range(q - 1):
                seen.append(self._index(cur))
                cur = _poly_mulmod(cur, g_poly, self.modulus, self.p)
                if cur == [1]:
                    break
            if len(seen) == q - 1:
                exp[:] = seen
                log[exp] = np.arange(q - 1)
                self.primitive = g
                return exp, log
        raise AssertionError(f"GF({q}) has no primitive element; modulus is broken")

    def _build_chi(self) -> np.ndarray:
        if self.p == 2:
            return np.zeros(self.q, dtype=np.int64)
        q, half = self.q, (self.q - 1) // 2
        by_power = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            r = self._index(_poly_powmod(self._poly(x), half, self.modulus, self.p))
            if r == 1:
                by_power[x] = 1
            elif r == self.p - 1:  # index of -1
                by_power[x] = -1
            else:
                raise PropertyCheckFailed(f"x^((q-1)/2) = {r} for x = {x} in GF({q})")
        squares = set(self.mul_idx(np.arange(q), np.arange(q)).tolist())
        by_squares = np.array([0] + [1 if x in squares else -1 for x in range(1, q)])
        if not np.array_equal(by_power, by_squares):
            raise PropertyCheckFailed(f"quadratic character mismatch in GF({q})")
        return by_power

    # -- index-level arithmetic (vectorised over numpy arrays) -----------------

    def add_idx(self, a, b):
        if self.e == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        s = (self._digits[a] + self._digits[b]) % self.p
        return s @ self._powers

    def neg_idx(self, a):
        if self.e == 1:
            return (-np.asarray(a)) % self.p
        return ((-self._digits[a]) % self.p) @ self._powers

    def sub_idx(self, a, b):
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a, b):
        a, b = np.asarray(a), np.asarray(b)
        zero = (a == 0) | (b == 0)
        la = self._log[np.where(a == 0, 1, a)]
        lb = self._log[np.where(b == 0, 1, b)]
        return np.where(zero, 0, self._exp[(la + lb) % (self.q - 1)])

    def inv_idx(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def chi_idx(self, a):
        if self.p == 2:
            raise EvenCharacteristic(f"quadratic character undefined for GF({self.q})")
        return self._chi[a]

    def dot_idx(self, xs, ys):
        """Inner product of index vectors; ``xs`` may be a 2-D stack of rows."""
        xs, ys = np.asarray(xs), np.asarray(ys)
        acc = np.zeros(xs.shape[:-1], dtype=np.int64)
        for k in range(xs.shape[-1]):
            acc = self.add_idx(acc, self.mul_idx(xs[..., k], ys[..., k]))
        return acc

    # -- element API -----------------------------------------------------------

    def __call__(self, index: int) -> FieldElement:
        if not 0 <= int(index) < self.q:
            raise ValueError(f"index {index} out of range for GF({self.q})")
        return FieldElement(int(index), self)

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    @property
    def elements(self) -> list[FieldElement]:
        return [FieldElement(i, self) for i in range(self.q)]

    def coefficients(self, x: FieldElement) -> tuple[int, ...]:
        return tuple(int(c) for c in self._digits[x.index])

    def __len__(self) -> int:
        return self.q

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __reduce__(self):
        return (field_new, (self.q,))


class FieldElement:
    __slots__ = ("index", "field")

    def __init__(self, index: int, field: FiniteField):
        self.index = index
        self.field = field

    def _check(self, other) -> FiniteField:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field and other.field.q != self.field.q:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return self.field

    def __add__(self, other):
        f = self._check(other)
        return FieldElement(int(f.add_idx(self.index, other.index)), f)

    def __sub__(self, other):
        f = self._check(other)
        return FieldElement(int(f.sub_idx(self.index, other.index)), f)

    def __mul__(self, other):
        f = self._check(other)
        return FieldElement(int(f.mul_idx(self.index, other.index)), f)

    def __truediv__(self, other):
        return self * other.inverse()

    def __neg__(self):
        return FieldElement(int(self.field.neg_idx(self.index)), self.field)

    def __pow__(self, k: int):
        f = self.field
        if self.index == 0:
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return FieldElement(1 if k == 0 else 0, f)
        return FieldElement(int(f._exp[(f._log[self.index] * k) % (f.q - 1)]), f)

    def inverse(self) -> FieldElement:
        return FieldElement(int(self.field.inv_idx(self.index)), self.field)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.index == other.index and self.field.q == other.field.q

    def __hash__(self):
        return hash((self.field.q, self.index))

    def __int__(self):
        return self.index

    def __repr__(self):
        return f"GF({self.field.q})[{self.index}]"


@functools.lru_cache(maxsize=None)
def field_new(q: int) -> FiniteField:
    """Build (or fetch the cached) field of order ``q``."""
    return FiniteField(q)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def chi(f: FiniteField, x: FieldElement) -> int:
    """Quadratic character: 0 at zero, +1 on nonzero squares, -1 elsewhere."""
    if x.field.q != f.q:
        raise FieldMismatch(f"{x!r} is not in {f!r}")
    return int(f.chi_idx(x.index))
