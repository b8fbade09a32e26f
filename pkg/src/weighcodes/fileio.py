"""Text and JSON formats for matrices, codes and orthogonal arrays.

Grid file::

    rows cols
    0 1 1 1
    1 0 1 -

``-`` stands for -1; ``+`` is accepted on input as an alias for ``1``.
Code files use the same body with the header ``n M`` (length first).
OA files carry the header ``q m n_rows n_cols`` followed by symbol indices.
Writers always emit single spaces and a trailing newline, so reading and
re-writing a canonical file is byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import ParseError
from .orthogonal_array import OrthogonalArray
from .ternary_code import TernaryCode
from .ternary_matrix import TernaryMatrix

_TOKEN_IN = {"-": -1, "0": 0, "1": 1, "+": 1}
_TOKEN_OUT = {-1: "-", 0: "0", 1: "1"}


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.strip("\n").splitlines()]


def _header(line: str, count: int) -> list[int]:
    try:
        vals = [int(t) for t in line.split()]
    except ValueError as exc:
        raise ParseError(f"bad header {line!r}") from exc
    if len(vals) != count or min(vals, default=0) < 0:
        raise ParseError(f"header {line!r} should hold {count} nonnegative integers")
    return vals


def _body(lines: list[str], rows: int, cols: int) -> np.ndarray:
    if len(lines) != rows:
        raise ParseError(f"expected {rows} rows, found {len(lines)}")
    out = np.zeros((rows, cols), dtype=np.int8)
    for r, line in enumerate(lines):
        toks = line.split()
        if len(toks) != cols:
            raise ParseError(f"row {r} has {len(toks)} tokens, expected {cols}")
        for c, tok in enumerate(toks):
            if tok not in _TOKEN_IN:
                raise ParseError(f"row {r}, column {c}: bad token {tok!r}")
            out[r, c] = _TOKEN_IN[tok]
    return out


def _render(a: np.ndarray) -> list[str]:
    return [" ".join(_TOKEN_OUT[int(x)] for x in row) for row in a]


def parse_grid(text: str) -> TernaryMatrix:
    lines = _lines(text)
    if not lines or not lines[0]:
        raise ParseError("empty grid file")
    rows, cols = _header(lines[0], 2)
    return TernaryMatrix(_body(lines[1:], rows, cols))


def format_grid(w: TernaryMatrix) -> str:
    return "\n".join([f"{w.rows} {w.cols}", *_render(w.array)]) + "\n"


def parse_code(text: str) -> TernaryCode:
    """Read a code file; a plain grid file (``M n`` header) is accepted too.

    The orientation is decided by the body: ``M`` lines of ``n`` tokens.
    """
    lines = _lines(text)
    if not lines or not lines[0]:
        raise ParseError("empty code file")
    a, b = _header(lines[0], 2)
    body = lines[1:]
    if len(body) == b and all(len(ln.split()) == a for ln in body):
        n, M = a, b
    elif len(body) == a and all(len(ln.split()) == b for ln in body):
        n, M = b, a
    else:
        raise ParseError(f"body does not match header {a} {b} in either orientation")
    return TernaryCode(_body(body, M, n), n=n)


def format_code(code: TernaryCode) -> str:
    return "\n".join([f"{code.n} {code.size}", *_render(code.words)]) + "\n"


def parse_oa(text: str) -> OrthogonalArray:
    lines = _lines(text)
    if not lines or not lines[0]:
        raise ParseError("empty OA file")
    q, m, rows, cols = _header(lines[0], 4)
    if q < 2:
        raise ParseError("an OA needs at least two symbols")
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}")
    try:
        grid = [[int(t) for t in ln.split()] for ln in body]
    except ValueError as exc:
        raise ParseError("OA entries must be integers") from exc
    if any(len(r) != cols for r in grid):
        raise ParseError(f"every OA row must have {cols} entries")
    try:
        return OrthogonalArray(q, m, np.array(grid, dtype=np.int64).reshape(rows, cols))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_oa(o: OrthogonalArray) -> str:
    head = f"{o.q} {o.m} {o.n_rows} {o.n_cols}"
    return "\n".join([head, *(" ".join(str(int(x)) for x in row) for row in o.grid)]) + "\n"


# -- JSON --------------------------------------------------------------------

def to_json(obj) -> str:
    if isinstance(obj, TernaryMatrix):
        rec = {"type": "matrix", "rows": obj.rows, "cols": obj.cols, "entries": obj.tolist()}
    elif isinstance(obj, TernaryCode):
        rec = {"type": "code", "n": obj.n, "M": obj.size, "words": obj.words.tolist()}
    elif isinstance(obj, OrthogonalArray):
        rec = {
            "type": "oa", "q": obj.q, "m": obj.m,
            "n_rows": obj.n_rows, "n_cols": obj.n_cols, "grid": obj.grid.tolist(),
        }
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    return json.dumps(rec, sort_keys=True) + "\n"


def from_json(text: str):
    try:
        rec = json.loads(text)
        kind = rec["type"]
        if kind == "matrix":
            return TernaryMatrix(np.array(rec["entries"], dtype=np.int8).reshape(rec["rows"], rec["cols"]))
        if kind == "code":
            return TernaryCode(np.array(rec["words"], dtype=np.int8).reshape(rec["M"], rec["n"]), n=rec["n"])
        if kind == "oa":
            grid = np.array(rec["grid"], dtype=np.int64).reshape(rec["n_rows"], rec["n_cols"])
            return OrthogonalArray(rec["q"], rec["m"], grid)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed JSON record: {exc}") from exc
    raise ParseError(f"unknown record type {kind!r}")


def is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
