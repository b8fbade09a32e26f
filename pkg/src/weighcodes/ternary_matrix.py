"""(0, +-1)-matrices: Gram checks, Jacobsthal/conference builders, normal form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    NoPivotColumn,
    NonSquare,
    NotOddPrimePower,
    NotTernary,
    NotWeighing,
    PropertyCheckFailed,
    ShapeMismatch,
)
from .finite_field import field_new, is_odd_prime_power


class TernaryMatrix:
    """Immutable rectangular matrix with entries in {-1, 0, +1}."""

    __slots__ = ("_a",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.int8, copy=True)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise ShapeMismatch(f"expected a 2-D grid, got {a.ndim} dimensions")
        if not np.isin(a, (-1, 0, 1)).all():
            raise NotTernary("entries must lie in {-1, 0, 1}")
        a.setflags(write=False)
        self._a = a

    @classmethod
    def zeros(cls, rows: int, cols: int) -> TernaryMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int8))

    @property
    def array(self) -> np.ndarray:
        """Read-only int8 view of the entries."""
        return self._a

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    def gram(self) -> np.ndarray:
        a = self._a.astype(np.int64)
        return a @ a.T

    def abs(self) -> np.ndarray:
        return np.abs(self._a).astype(np.int64)

    def row_weights(self) -> np.ndarray:
        return np.count_nonzero(self._a, axis=1)

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __getitem__(self, key):
        return self._a[key]

    def __eq__(self, other):
        if not isinstance(other, TernaryMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash((self.shape, self._a.tobytes()))

    def __neg__(self) -> TernaryMatrix:
        return negate(self)

    def __repr__(self):
        return f"TernaryMatrix({self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join(" ".join("-" if x < 0 else str(x) for x in row) for row in self._a)


class WeighingCheck(NamedTuple):
    ok: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class NormalFormParts:
    whole: TernaryMatrix
    residual: TernaryMatrix
    derived: TernaryMatrix


def _require_square(w: TernaryMatrix) -> None:
    if w.rows != w.cols:
        raise NonSquare(f"matrix is {w.rows}x{w.cols}, not square")


def is_weighing(w: TernaryMatrix, p: int) -> WeighingCheck:
    """Check ``W W^t == p I`` exactly.

    The witness is the first offending Gram entry ``(i, j, value)`` in row-major order.
    """
    _require_square(w)
    bad = np.argwhere(w.gram() != p * np.eye(w.rows, dtype=np.int64))
    if len(bad) == 0:
        return WeighingCheck(True)
    i, j = (int(x) for x in bad[0])
    return WeighingCheck(False, (i, j, int(w.gram()[i, j])))


def _require_odd_prime_power(q: int) -> None:
    if not is_odd_prime_power(q):
        raise NotOddPrimePower(f"{q} is not an odd prime power")


def jacobsthal(q: int) -> TernaryMatrix:
    """``Q[i][j] = chi(a_j - a_i)`` over GF(q) in canonical element order."""
    _require_odd_prime_power(q)
    f = field_new(q)
    idx = np.arange(q)
    diff = f.sub_idx(idx[None, :], idx[:, None])
    m = TernaryMatrix(f.chi_idx(diff))
    gram = m.gram()
    target = q * np.eye(q, dtype=np.int64) - 1
    if (
        not np.array_equal(gram, target)
        or np.any(np.diagonal(m.array) != 0)
        or np.any(m.array.sum(axis=0) != 0)
        or np.any(m.array.sum(axis=1) != 0)
    ):
        raise PropertyCheckFailed(f"Jacobsthal matrix of order {q} failed QQ^t = qI - J")
    return m


def conference(q: int) -> TernaryMatrix:
    """Conference matrix ``W(q+1, q)`` bordered as ``[[0 | 1^t], [1 | Q]]``."""
    _require_odd_prime_power(q)
    c = vstack(
        hstack(const_column(1, 0), TernaryMatrix(np.ones((1, q)))),
        hstack(const_column(q, 1), jacobsthal(q)),
    )
    check = is_weighing(c, q)
    if not check:
        raise PropertyCheckFailed(f"conference({q}) not weighing: {check.witness}")
    return c


def normal_form(w: TernaryMatrix, p: int) -> NormalFormParts:
    """Reorder and negate rows so that ``W = [[0 | R], [1 | D]]``.

    Rows with a zero in column 0 keep their relative order and come first;
    the others are negated where needed so their leading entry is +1.
    Columns are never permuted.
    """
    check = is_weighing(w, p)
    if not check:
        raise NotWeighing(f"W W^t != {p} I; first offending entry {check.witness}")
    a = w.array.astype(np.int64)
    if w.rows == 0 or not a[:, 0].any():
        raise NoPivotColumn("first column has no nonzero entry")
    lead = a[:, 0]
    top = a[lead == 0]
    bottom = a[lead != 0] * lead[lead != 0, None]
    whole = TernaryMatrix(np.vstack([top, bottom]))
    parts = NormalFormParts(whole, TernaryMatrix(top[:, 1:]), TernaryMatrix(bottom[:, 1:]))
    _check_normal_form(parts, p)
    return parts


def _check_normal_form(parts: NormalFormParts, p: int) -> None:
    r = parts.residual.array.astype(np.int64)
    d = parts.derived.array.astype(np.int64)
    nr, nd = r.shape[0], d.shape[0]
    ok = (
        np.array_equal(r @ r.T, p * np.eye(nr, dtype=np.int64))
        and np.array_equal(d @ d.T, p * np.eye(nd, dtype=np.int64) - 1)
        and not np.any(r @ d.T)
    )
    if not ok:
        raise PropertyCheckFailed("normal-form block identities do not hold")


def kron_ones(w: TernaryMatrix, q: int) -> TernaryMatrix:
    """``W (x) 1_q^t``: every entry repeated ``q`` times along its row."""
    if q < 1:
        raise ValueError("q must be at least 1")
    return TernaryMatrix(np.repeat(w.array, q, axis=1))


def negate(w: TernaryMatrix) -> TernaryMatrix:
    return TernaryMatrix(-w.array)


def vstack(a: TernaryMatrix, b: TernaryMatrix) -> TernaryMatrix:
    if a.cols != b.cols:
        raise ShapeMismatch(f"cannot stack {a.shape} over {b.shape}")
    return TernaryMatrix(np.vstack([a.array, b.array]))


def hstack(a: TernaryMatrix, b: TernaryMatrix) -> TernaryMatrix:
    if a.rows != b.rows:
        raise ShapeMismatch(f"cannot place {a.shape} beside {b.shape}")
    return TernaryMatrix(np.hstack([a.array, b.array]))


def const_column(length: int, value: int) -> TernaryMatrix:
    return TernaryMatrix(np.full((length, 1), value, dtype=np.int8))


def is_balanced(w: TernaryMatrix) -> tuple[int, int, int] | None:
    """Return ``(v, k, lambda)`` if ``W`` is a balanced weighing matrix, else ``None``.

    Requires ``W W^t = k I`` and ``|W||W|^t = (k - lambda) I + lambda J`` with
    ``lambda = k(k-1)/(v-1)``.
    """
    _require_square(w)
    v = w.rows
    if v < 2:
        return None
    weights = w.row_weights()
    k = int(weights[0])
    if np.any(weights != k) or not is_weighing(w, k):
        return None
    if (k * (k - 1)) % (v - 1):
        return None
    lam = k * (k - 1) // (v - 1)
    b = w.abs()
    target = (k - lam) * np.eye(v, dtype=np.int64) + lam
    if not np.array_equal(b @ b.T, target):
        return None
    return v, k, lam
