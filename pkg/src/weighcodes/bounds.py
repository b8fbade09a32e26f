"""Johnson-type upper bounds on A3(n, d, w) and balanced-weighing-matrix formulas.

Everything is integer or :class:`fractions.Fraction` arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import (
    BoundMismatch,
    ConditionViolated,
    NonIntegerDistance,
    NonIntegerLambda,
    NotOddPrimePower,
)
from .finite_field import is_odd_prime_power


@dataclass(frozen=True)
class BoundResult:
    value: int | None
    applicable: bool
    numerator: int
    denominator: int

    @property
    def detail(self) -> str:
        verdict = "" if self.applicable else " (not applicable: denominator <= 0)"
        return f"2nd={self.numerator}, 3w^2-4nw+2nd={self.denominator}{verdict}"


@dataclass(frozen=True)
class ChainStep:
    """One applied bound: ``name`` evaluated at ``(n, d, w)`` with optional inner value."""

    name: str
    n: int
    d: int
    w: int
    value: int
    inner: int | None = None

    def describe(self) -> str:
        args = f"{self.n},{self.d},{self.w}"
        if self.inner is not None:
            args += f"; inner={self.inner}"
        return f"{self.name}({args}) = {self.value}"


def johnson_restricted(n: int, d: int, w: int) -> BoundResult:
    """A3(n,d,w) <= floor(2nd / (3w^2 - 4nw + 2nd)) when the denominator is positive."""
    if not (n >= w >= 0 and d >= 0):
        raise ValueError(f"need n >= w >= 0 and d >= 0, got n={n}, d={d}, w={w}")
    num = 2 * n * d
    den = 3 * w * w - 4 * n * w + 2 * n * d
    if den <= 0:
        return BoundResult(None, False, num, den)
    return BoundResult(num // den, True, num, den)


def johnson_step(n: int, d: int, w: int, inner: int) -> int:
    """A3(n,d,w) <= floor(2n/w * A3(n-1, d, w-1)), with the inner value supplied."""
    if w < 1 or inner < 0:
        raise ValueError("need w >= 1 and inner >= 0")
    return floor(Fraction(2 * n, w) * inner)


def _require_family(p: int, m: int) -> None:
    if not is_odd_prime_power(p):
        raise NotOddPrimePower(f"{p} is not an odd prime power")
    if m < 1:
        raise ValueError("m must be at least 1")


def t1_params(p: int, m: int) -> tuple[int, int, int]:
    """(n, d, w) of the substituted-array code built from GF(p) at depth m."""
    k = (p ** (m + 1) - 1) // (p - 1)
    return p * k, p**m * (p + 3) // 2, p ** (m + 1) - 1


def family_params(p: int, m: int) -> tuple[int, int, int]:
    """(n, d, w) of the doubled weighing-matrix code of order (p^(m+1)-1)/(p-1)."""
    n = (p ** (m + 1) - 1) // (p - 1)
    return n, p ** (m - 1) * (p + 3) // 2, p**m


def t1_upper(p: int, m: int) -> int:
    _require_family(p, m)
    n, d, w = t1_params(p, m)
    res = johnson_restricted(n, d, w)
    if res.value != p ** (m + 1):
        raise BoundMismatch(f"Johnson bound at {(n, d, w)} is {res.value}, expected {p ** (m + 1)}")
    return res.value


def family_chain(p: int, m: int) -> list[ChainStep]:
    """Bound chain for the doubled family code: one restricted bound, then one step."""
    _require_family(p, m)
    n, d, w = family_params(p, m)
    if m == 1:
        inner = johnson_restricted(p, d, p - 1)
        if inner.value != p:
            raise BoundMismatch(f"Johnson bound at {(p, d, p - 1)} is {inner.value}, expected {p}")
        first = ChainStep("johnson_restricted", p, d, p - 1, inner.value)
    else:
        tn, td, tw = t1_params(p, m - 1)
        first = ChainStep("johnson_restricted", tn, td, tw, t1_upper(p, m - 1))
    value = johnson_step(n, d, w, first.value)
    if value != 2 * n:
        raise BoundMismatch(f"Johnson step at {(n, d, w)} is {value}, expected {2 * n}")
    return [first, ChainStep("johnson_step", n, d, w, value, inner=first.value)]


def family_upper(p: int, m: int) -> int:
    return family_chain(p, m)[-1].value


@dataclass(frozen=True)
class BWParams:
    v: int
    k: int
    lam: int

    @property
    def lam_even(self) -> bool:
        return self.lam % 2 == 0


def bw_params(v: int, k: int) -> BWParams:
    if not v > k >= 1:
        raise ValueError(f"need v > k >= 1, got v={v}, k={k}")
    lam = Fraction(k * (k - 1), v - 1)
    if lam.denominator != 1:
        raise NonIntegerLambda(f"k(k-1)/(v-1) = {lam} for v={v}, k={k}")
    return BWParams(v, k, int(lam))


def bw_distances(v: int, k: int) -> tuple[int, int]:
    """Constant binary distance d2 of |W| and ternary distance d3 of W."""
    bw_params(v, k)
    d2 = 2 * (k - Fraction(k * (k - 1), v - 1))
    d3 = Fraction(4 * k * (v - 1) - 3 * k * (k - 1), 2 * (v - 1))
    for name, val in (("d2", d2), ("d3", d3)):
        if val.denominator != 1:
            raise NonIntegerDistance(f"{name} = {val} for v={v}, k={k}")
    return int(d2), int(d3)


def bw_derived_bound(v: int, k: int) -> int:
    """Restricted Johnson bound for the derived-part code; equals ``k``."""
    if 4 * (v - 1) - 3 * (k - 1) <= 0:
        raise ConditionViolated(f"4(v-1) - 3(k-1) <= 0 for v={v}, k={k}")
    _, d3 = bw_distances(v, k)
    res = johnson_restricted(v - 1, d3, k - 1)
    if res.value != k:
        raise BoundMismatch(f"derived bound at {(v - 1, d3, k - 1)} is {res.value}, expected {k}")
    return res.value


def bw_range(v: int, k: int) -> tuple[int, int]:
    """(v, floor(v(4v-3k-1) / (3(v-k)))), valid when 2v > 3k - 1."""
    if not 2 * v > 3 * k - 1:
        raise ConditionViolated(f"v={v} does not exceed (3k-1)/2 for k={k}")
    _, d3 = bw_distances(v, k)
    upper = v * (4 * v - 3 * k - 1) // (3 * (v - k))
    res = johnson_restricted(v, d3, k)
    if res.value != upper:
        raise BoundMismatch(f"closed form gives {upper}, Johnson bound gives {res.value}")
    return v, upper
