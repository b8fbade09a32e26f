"""Orthogonal arrays from linear functionals on projective points.

Row ``x`` of the array runs over GF(q)^(m+1) and column ``c`` over the
canonical projective points; the entry is the symbol index of ``<x, c>``.
Two distinct rows agree at ``c`` exactly when ``c`` lies on the hyperplane
orthogonal to their difference, which happens for (q^m - 1)/(q - 1) columns.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import ShapeMismatch
from .finite_field import FiniteField
from .ternary_matrix import TernaryMatrix


@dataclass(frozen=True, eq=False)
class OrthogonalArray:
    q: int
    m: int
    grid: np.ndarray

    def __post_init__(self):
        g = np.array(self.grid, dtype=np.int64, copy=True)
        if g.ndim != 2:
            raise ShapeMismatch("orthogonal array grid must be 2-D")
        if g.size and (g.min() < 0 or g.max() >= self.q):
            raise ValueError(f"symbols must lie in [0, {self.q})")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    @property
    def n_rows(self) -> int:
        return self.grid.shape[0]

    @property
    def n_cols(self) -> int:
        return self.grid.shape[1]

    @property
    def symbols(self) -> int:
        return self.q

    @property
    def agreement(self) -> int:
        """Agreement count every distinct row pair should have."""
        return (self.q**self.m - 1) // (self.q - 1)

    def permute_rows(self, order) -> OrthogonalArray:
        return OrthogonalArray(self.q, self.m, self.grid[np.asarray(order)])

    def __eq__(self, other):
        if not isinstance(other, OrthogonalArray):
            return NotImplemented
        return (self.q, self.m) == (other.q, other.m) and np.array_equal(self.grid, other.grid)


def projective_points(f: FiniteField, m: int) -> list[tuple[int, ...]]:
    """Canonical representatives (first nonzero coordinate 1) of PG(m, q), lex ordered."""
    if m < 1:
        raise ValueError("m must be at least 1")
    pts = []
    for v in itertools.product(range(f.q), repeat=m + 1):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def oa_build(f: FiniteField, m: int) -> OrthogonalArray:
    points = np.array(projective_points(f, m), dtype=np.int64)
    rows = np.array(list(itertools.product(range(f.q), repeat=m + 1)), dtype=np.int64)
    grid = f.dot_idx(rows[:, None, :], points[None, :, :])
    return OrthogonalArray(f.q, m, np.broadcast_to(grid, (len(rows), len(points))))


def agreement_matrix(grid: np.ndarray, q: int) -> np.ndarray:
    """Number of columns in which each pair of rows carries the same symbol."""
    acc = np.zeros((grid.shape[0], grid.shape[0]), dtype=np.int64)
    for s in range(q):
        ind = (grid == s).astype(np.int64)
        acc += ind @ ind.T
    return acc


@dataclass
class OAReport:
    expected_agreement: int
    agreement_histogram: dict[int, int]
    offending_pairs: list[tuple[int, int, int]] = field(default_factory=list)
    strength2_failures: list[tuple[int, int]] = field(default_factory=list)
    balance_failures: list[int] = field(default_factory=list)

    @property
    def agreement_ok(self) -> bool:
        return set(self.agreement_histogram) <= {self.expected_agreement}

    @property
    def strength2_ok(self) -> bool:
        return not self.strength2_failures

    @property
    def balance_ok(self) -> bool:
        return not self.balance_failures

    @property
    def passed(self) -> bool:
        return self.agreement_ok and self.strength2_ok and self.balance_ok

    def lines(self) -> list[str]:
        out = [
            f"agreement histogram: {dict(sorted(self.agreement_histogram.items()))}"
            f" (expected {self.expected_agreement})",
            f"strength-2: {'ok' if self.strength2_ok else 'FAIL'}",
            f"column balance: {'ok' if self.balance_ok else 'FAIL'}",
        ]
        for i, j, a in self.offending_pairs[:10]:
            out.append(f"rows {i},{j} agree in {a} columns")
        for c1, c2 in self.strength2_failures[:10]:
            out.append(f"columns {c1},{c2} are not uniformly covered")
        for c in self.balance_failures[:10]:
            out.append(f"column {c} is unbalanced")
        return out


def oa_verify(o: OrthogonalArray) -> OAReport:
    """Agreement histogram, strength-2 index q^(m-1), and column balance q^m."""
    q, n = o.q, o.n_rows
    agree = agreement_matrix(o.grid, q)
    iu, ju = np.triu_indices(n, k=1)
    vals = agree[iu, ju]
    hist = dict(Counter(vals.tolist()))
    expected = o.agreement
    bad = np.nonzero(vals != expected)[0]
    offending = [(int(iu[b]), int(ju[b]), int(vals[b])) for b in bad]

    index2 = q ** (o.m - 1) if o.m >= 1 else None
    s2_fail = []
    if index2 is not None:
        for c1, c2 in itertools.combinations(range(o.n_cols), 2):
            counts = np.bincount(o.grid[:, c1] * q + o.grid[:, c2], minlength=q * q)
            if np.any(counts != index2):
                s2_fail.append((c1, c2))

    bal_fail = [
        c for c in range(o.n_cols)
        if np.any(np.bincount(o.grid[:, c], minlength=q) != q**o.m)
    ]
    return OAReport(expected, hist, offending, s2_fail, bal_fail)


def substitute(o: OrthogonalArray, q_matrix: TernaryMatrix) -> TernaryMatrix:
    """Replace symbol ``s`` by row ``s`` of ``q_matrix``, block by block."""
    if q_matrix.shape != (o.q, o.q):
        raise ShapeMismatch(f"need a {o.q}x{o.q} matrix, got {q_matrix.shape}")
    blocks = q_matrix.array[o.grid]
    return TernaryMatrix(blocks.reshape(o.n_rows, o.n_cols * o.q))
