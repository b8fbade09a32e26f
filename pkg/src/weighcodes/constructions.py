"""End-to-end recipes: substituted-array codes, the recursive weighing-matrix
family, and optimality certificates.

Every builder checks its own output (Gram identities, code statistics) and
raises :class:`PropertyCheckFailed` rather than returning a broken object.
"""

from __future__ import annotations

import functools
import os
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds
from .bounds import ChainStep
from .errors import NotBalanced, NotWeighing, PropertyCheckFailed, SizeCapExceeded
from .finite_field import field_new
from .orthogonal_array import OrthogonalArray, oa_build, substitute
from .ternary_code import CodeStats, TernaryCode, analyze, double, from_matrix
from .ternary_matrix import (
    TernaryMatrix,
    conference,
    const_column,
    hstack,
    is_balanced,
    is_weighing,
    jacobsthal,
    kron_ones,
    normal_form,
    vstack,
)

DEFAULT_SIZE_CAP = 10**7
SIZE_CAP_ENV = "WEIGHCODES_SIZE_CAP"


def size_cap() -> int:
    return int(os.environ.get(SIZE_CAP_ENV, DEFAULT_SIZE_CAP))


def _check_size(rows: int, cols: int, what: str) -> None:
    cap = size_cap()
    if rows * cols > cap:
        raise SizeCapExceeded(f"{what} would have {rows}x{cols} entries (cap {cap})")


def _require_stats(stats: CodeStats, n: int, M: int, w: int, d: int, what: str) -> None:
    got = (stats.n, stats.M, stats.weight_set, stats.min_distance)
    want = (n, M, frozenset({w}), d)
    if got != want:
        raise PropertyCheckFailed(f"{what}: (n, M, weights, d) = {got}, expected {want}")


def build_t1_code(p: int, m: int) -> TernaryCode:
    """Code of the rows of the OA with its symbols replaced by Jacobsthal rows."""
    bounds.t1_upper(p, m)  # validates p and m
    n, d, w = bounds.t1_params(p, m)
    _check_size(p ** (m + 1), n, "substituted array")
    code = from_matrix(substitute(oa_build(field_new(p), m), jacobsthal(p)))
    stats = analyze(code)
    _require_stats(stats, n, p ** (m + 1), w, d, f"t1 code ({p},{m})")
    if not stats.equidistant:
        raise PropertyCheckFailed(f"t1 code ({p},{m}) is not equidistant: {sorted(stats.distance_set)}")
    return code


def assemble_step(prev: TernaryMatrix, oa: OrthogonalArray, q_matrix: TernaryMatrix) -> TernaryMatrix:
    """Border ``prev (x) 1_q^t`` over the substituted array: ``[[0 | R], [1 | D]]``."""
    residual = kron_ones(prev, oa.q)
    derived = substitute(oa, q_matrix)
    return vstack(
        hstack(const_column(residual.rows, 0), residual),
        hstack(const_column(derived.rows, 1), derived),
    )


def _family_matrix(p: int, m: int, rng: np.random.Generator | None) -> TernaryMatrix:
    if m == 1:
        return conference(p)
    prev = _family_matrix(p, m - 1, rng)
    oa = oa_build(field_new(p), m - 1)
    if rng is not None:
        oa = oa.permute_rows(rng.permutation(oa.n_rows))
    w = assemble_step(prev, oa, jacobsthal(p))
    check = is_weighing(w, p**m)
    if not check:
        raise PropertyCheckFailed(f"family matrix ({p},{m}) not weighing: {check.witness}")
    return w


@functools.lru_cache(maxsize=64)
def _family_matrix_cached(p: int, m: int) -> TernaryMatrix:
    return _family_matrix(p, m, None)


def build_family_matrix(p: int, m: int, rng: np.random.Generator | None = None) -> TernaryMatrix:
    """Weighing matrix W((p^(m+1)-1)/(p-1), p^m), built recursively from conference(p).

    Passing ``rng`` shuffles the orthogonal-array rows at every level; the
    result is still a weighing matrix because Jacobsthal rows sum to zero.
    """
    bounds.family_chain(p, m)  # validates p and m
    n, _, _ = bounds.family_params(p, m)
    _check_size(n, n, "family matrix")
    if rng is None:
        return _family_matrix_cached(p, m)
    return _family_matrix(p, m, rng)


def build_family_code(p: int, m: int, rng: np.random.Generator | None = None) -> TernaryCode:
    bounds.family_chain(p, m)
    n, d, w = bounds.family_params(p, m)
    _check_size(2 * n, n, "family code")
    code = double(build_family_matrix(p, m, rng))
    _require_stats(analyze(code), n, 2 * n, w, d, f"family code ({p},{m})")
    return code


@dataclass
class Certificate:
    n: int
    d: int
    w: int
    lower: int
    upper: int
    chain: list[ChainStep] = field(default_factory=list)

    @property
    def optimal(self) -> bool:
        return self.lower == self.upper

    def summary(self) -> str:
        head = f"A3({self.n},{self.d},{self.w})"
        if self.optimal:
            return f"{head} = {self.lower} OPTIMAL"
        return f"{head} = ? LOWER {self.lower}, UPPER {self.upper}"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["optimal"] = self.optimal
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        chain = [ChainStep(**step) for step in data["chain"]]
        return cls(data["n"], data["d"], data["w"], data["lower"], data["upper"], chain)


def _finish(cert: Certificate) -> Certificate:
    if not cert.optimal:
        raise PropertyCheckFailed(f"lower bound {cert.lower} != upper bound {cert.upper}")
    return cert


def certify(p: int, m: int) -> Certificate:
    chain = bounds.family_chain(p, m)
    n, d, w = bounds.family_params(p, m)
    code = build_family_code(p, m)
    return _finish(Certificate(n, d, w, code.size, chain[-1].value, chain))


def certify_t1(p: int, m: int) -> Certificate:
    upper = bounds.t1_upper(p, m)
    n, d, w = bounds.t1_params(p, m)
    code = build_t1_code(p, m)
    chain = [ChainStep("johnson_restricted", n, d, w, upper)]
    return _finish(Certificate(n, d, w, code.size, upper, chain))


def bw_derived_code(w: TernaryMatrix) -> tuple[TernaryCode, Certificate]:
    """Rows of the derived part of a balanced weighing matrix, certified optimal."""
    k = int(w.row_weights()[0]) if w.rows else 0
    check = is_weighing(w, k)
    if not check:
        raise NotWeighing(f"W W^t != {k} I; first offending entry {check.witness}")
    params = is_balanced(w)
    if params is None:
        raise NotBalanced("|W| is not the incidence matrix of a symmetric design")
    v, k, _ = params
    _, d3 = bounds.bw_distances(v, k)
    code = from_matrix(normal_form(w, k).derived)
    stats = analyze(code)
    _require_stats(stats, v - 1, k, k - 1, d3, "derived code")
    upper = bounds.bw_derived_bound(v, k)
    chain = [ChainStep("johnson_restricted", v - 1, d3, k - 1, upper)]
    return code, _finish(Certificate(v - 1, d3, k - 1, code.size, upper, chain))
