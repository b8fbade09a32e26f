"""Ternary codes over {-1, 0, +1}: Hamming distance, spectra, and W/-W doubling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DuplicateRow, LengthMismatch, NotTernary, ZeroRow
from .ternary_matrix import TernaryMatrix, negate, vstack


class TernaryCode:
    """An ordered set of distinct codewords of common length ``n``."""

    __slots__ = ("_words",)

    def __init__(self, words, n: int | None = None):
        w = np.array(words, dtype=np.int8, copy=True)
        if w.size == 0:
            w = w.reshape(0, 0 if n is None else n)
        if w.ndim != 2:
            raise LengthMismatch("codewords must all have the same length")
        if n is not None and w.shape[1] != n:
            raise LengthMismatch(f"codewords have length {w.shape[1]}, expected {n}")
        if not np.isin(w, (-1, 0, 1)).all():
            raise NotTernary("codeword entries must lie in {-1, 0, 1}")
        if len(np.unique(w, axis=0)) != len(w):
            raise DuplicateRow("code contains a repeated codeword")
        w.setflags(write=False)
        self._words = w

    @property
    def n(self) -> int:
        return self._words.shape[1]

    @property
    def size(self) -> int:
        return self._words.shape[0]

    @property
    def words(self) -> np.ndarray:
        return self._words

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self._words)

    def __repr__(self):
        return f"TernaryCode(n={self.n}, M={self.size})"


@dataclass(frozen=True)
class CodeStats:
    n: int
    M: int
    weight_set: frozenset[int]
    distance_set: frozenset[int]

    @property
    def min_distance(self) -> int | None:
        """Absent (``None``) for a single-word code."""
        return min(self.distance_set) if self.distance_set else None

    @property
    def constant_weight(self) -> bool:
        return len(self.weight_set) == 1

    @property
    def weight(self) -> int | None:
        return next(iter(self.weight_set)) if self.constant_weight else None

    @property
    def equidistant(self) -> bool:
        return len(self.distance_set) == 1

    def summary(self) -> str:
        return (
            f"n={self.n} M={self.M} weights={sorted(self.weight_set)} "
            f"distances={sorted(self.distance_set)} d={self.min_distance}"
        )


def hamming(u, v) -> int:
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise LengthMismatch(f"lengths {u.shape} and {v.shape} differ")
    return int(np.count_nonzero(u != v))


def distance_matrix(words: np.ndarray) -> np.ndarray:
    """All pairwise Hamming distances, via per-symbol agreement counts."""
    w = np.asarray(words)
    agree = np.zeros((len(w), len(w)), dtype=np.int64)
    for s in (-1, 0, 1):
        ind = (w == s).astype(np.int64)
        agree += ind @ ind.T
    return w.shape[1] - agree


def analyze(code: TernaryCode) -> CodeStats:
    w = code.words
    weights = frozenset(np.count_nonzero(w, axis=1).tolist())
    dist = distance_matrix(w)
    iu = np.triu_indices(code.size, k=1)
    return CodeStats(code.n, code.size, weights, frozenset(dist[iu].tolist()))


def first_pair_below(code: TernaryCode, d: int) -> tuple[int, int, int] | None:
    """First row pair ``(i, j, distance)`` closer than ``d``, if any."""
    dist = distance_matrix(code.words)
    iu, ju = np.triu_indices(code.size, k=1)
    bad = np.nonzero(dist[iu, ju] < d)[0]
    if len(bad) == 0:
        return None
    b = bad[0]
    return int(iu[b]), int(ju[b]), int(dist[iu[b], ju[b]])


def from_matrix(w: TernaryMatrix) -> TernaryCode:
    return TernaryCode(w.array, n=w.cols)


def to_matrix(code: TernaryCode) -> TernaryMatrix:
    return TernaryMatrix(code.words.reshape(code.size, code.n))


def double(w: TernaryMatrix) -> TernaryCode:
    """Rows of ``W`` followed by rows of ``-W``."""
    if w.rows and np.any(w.row_weights() == 0):
        raise ZeroRow("a zero row would coincide with its own negation")
    return from_matrix(vstack(w, negate(w)))
