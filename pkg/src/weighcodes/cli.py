"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 a property check failed,
3 the size cap was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds, fileio
from .constructions import (
    bw_derived_code,
    build_family_code,
    build_family_matrix,
    build_t1_code,
    certify,
    certify_t1,
)
from .errors import (
    ConditionViolated,
    DuplicateRow,
    NonSquare,
    NotPrimePower,
    ParseError,
    PropertyCheckFailed,
    SizeCapExceeded,
    WeighcodesError,
    ZeroRow,
)
from .finite_field import field_new, is_odd_prime_power
from .orthogonal_array import oa_build, oa_verify
from .ternary_code import analyze, first_pair_below, from_matrix, to_matrix
from .ternary_matrix import TernaryMatrix, conference, is_balanced, is_weighing, jacobsthal

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _odd_prime_power(p: int) -> int:
    if not is_odd_prime_power(p):
        raise UsageError(f"--p {p} is not an odd prime power")
    return p


def _positive_m(m: int) -> int:
    if m < 1:
        raise UsageError("--m must be at least 1")
    return m


# -- construct ----------------------------------------------------------------

def cmd_construct(args) -> int:
    p = _odd_prime_power(args.p)
    what = args.what
    if what == "jacobsthal":
        obj = jacobsthal(p)
    elif what == "conference":
        obj = conference(p)
    elif what == "oa":
        obj = oa_build(field_new(p), _positive_m(args.m))
    elif what == "t1":
        obj = build_t1_code(p, _positive_m(args.m))
    elif what == "code":
        obj = build_family_code(p, _positive_m(args.m))
    else:
        obj = build_family_matrix(p, _positive_m(args.m))

    if args.format == "json":
        text = fileio.to_json(obj)
    elif isinstance(obj, TernaryMatrix):
        text = fileio.format_grid(obj)
    elif what == "oa":
        text = fileio.format_oa(obj)
    else:
        text = fileio.format_code(obj)
    _emit(text, args.out)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def _load(path: str, kind: str):
    text = fileio.read_text(path)
    if fileio.is_json(text):
        return fileio.from_json(text)
    if kind == "oa":
        return fileio.parse_oa(text)
    if kind == "code":
        return fileio.parse_code(text)
    return fileio.parse_grid(text)


def _verify_weighing(w: TernaryMatrix, weight: int | None) -> int:
    if w.rows != w.cols:
        print(f"FAIL: matrix is {w.rows}x{w.cols}, not square")
        return EXIT_FAIL
    p = weight if weight is not None else int(w.row_weights()[0]) if w.rows else 0
    check = is_weighing(w, p)
    if check:
        print(f"weighing W({w.rows},{p}): ok")
        return EXIT_OK
    i, j, val = check.witness
    print(f"FAIL: not W({w.rows},{p}); (W W^t)[{i}][{j}] = {val}")
    return EXIT_FAIL


def _verify_code(code, weight: int | None, distance: int | None) -> int:
    stats = analyze(code)
    print(
        f"code (n, M, weights, distances) = ({stats.n}, {stats.M}, "
        f"{sorted(stats.weight_set)}, {sorted(stats.distance_set)}); d = {stats.min_distance}"
    )
    status = EXIT_OK
    weights = code.words.astype(bool).sum(axis=1)
    expected_w = weight if weight is not None else int(weights[0]) if code.size else None
    for r, wt in enumerate(weights):
        if wt != expected_w:
            print(f"FAIL: row {r} has weight {int(wt)}, expected {expected_w}")
            status = EXIT_FAIL
            break
    if distance is not None:
        close = first_pair_below(code, distance)
        if close is not None:
            i, j, d = close
            print(f"FAIL: rows {i} and {j} are at distance {d} < {distance}")
            status = EXIT_FAIL
    return status


def _verify_oa(o) -> int:
    report = oa_verify(o)
    for line in report.lines():
        print(line)
    if report.passed:
        print(f"OA {o.n_rows}x{o.n_cols} over {o.q} symbols: ok")
        return EXIT_OK
    print("FAIL: orthogonal array check failed")
    return EXIT_FAIL


def _verify_balanced(w: TernaryMatrix) -> int:
    if w.rows != w.cols:
        print(f"FAIL: matrix is {w.rows}x{w.cols}, not square")
        return EXIT_FAIL
    params = is_balanced(w)
    if params is None:
        print("FAIL: not a balanced weighing matrix")
        return EXIT_FAIL
    v, k, lam = params
    print(f"balanced BW({v},{k},{lam}): ok")
    _, cert = bw_derived_code(w)
    print(f"derived code: {cert.summary()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    obj = _load(args.infile, args.type)
    if args.type == "oa":
        if not hasattr(obj, "q"):
            raise UsageError("input is not an orthogonal array")
        return _verify_oa(obj)
    if args.type == "code":
        if isinstance(obj, TernaryMatrix):
            obj = from_matrix(obj)
        return _verify_code(obj, args.weight, args.distance)
    if not isinstance(obj, TernaryMatrix):
        obj = to_matrix(obj)
    if args.type == "balanced":
        return _verify_balanced(obj)
    return _verify_weighing(obj, args.weight)


# -- bound --------------------------------------------------------------------

def _parse_bw(text: str) -> tuple[int, int]:
    try:
        v, k = (int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--bw expects 'v,k', got {text!r}") from exc
    return v, k


def cmd_bound(args) -> int:
    nd = (args.n, args.d, args.w)
    if args.bw is None and None in nd:
        raise UsageError("bound needs --n, --d and --w, or --bw v,k")
    if None not in nd:
        n, d, w = nd
        try:
            res = bounds.johnson_restricted(n, d, w)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        shown = res.value if res.applicable else "not applicable"
        print(f"johnson_restricted({n},{d},{w}) = {shown}  [{res.detail}]")
        if args.chain_inner is not None:
            try:
                step = bounds.johnson_step(n, d, w, args.chain_inner)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            print(f"johnson_step({n},{d},{w}; inner={args.chain_inner}) = {step}")
    if args.bw is not None:
        v, k = _parse_bw(args.bw)
        try:
            params = bounds.bw_params(v, k)
            d2, d3 = bounds.bw_distances(v, k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        parity = "even" if params.lam_even else "odd (no balanced weighing matrix can exist)"
        print(f"BW({v},{k}): lambda={params.lam} ({parity})")
        print(f"d2={d2} d3={d3}")
        try:
            print(f"derived-bound A3({v - 1},{d3},{k - 1}) <= {bounds.bw_derived_bound(v, k)}")
        except ConditionViolated as exc:
            print(f"derived-bound: not applicable ({exc})")
        try:
            lo, hi = bounds.bw_range(v, k)
            print(f"range {lo} <= A3({v},{d3},{k}) <= {hi}  [{lo},{hi}]")
        except ConditionViolated as exc:
            print(f"range: not applicable ({exc})")
    return EXIT_OK


# -- certify / table ----------------------------------------------------------

def cmd_certify(args) -> int:
    p, m = _odd_prime_power(args.p), _positive_m(args.m)
    cert = certify_t1(p, m) if args.t1 else certify(p, m)
    if args.json:
        sys.stdout.write(json.dumps(cert.to_dict(), sort_keys=True) + "\n")
    else:
        print(cert.summary())
        for step in cert.chain:
            print(f"  {step.describe()}")
    return EXIT_OK if cert.optimal else EXIT_FAIL


TABLE_FIELDS = ["m", "n", "w", "d", "M", "upper", "optimal", "distance_set"]


def table_rows(p: int, max_m: int) -> list[dict]:
    rows = []
    for m in range(1, max_m + 1):
        cert = certify(p, m)
        stats = analyze(build_family_code(p, m))
        rows.append({
            "m": m, "n": cert.n, "w": cert.w, "d": cert.d, "M": cert.lower,
            "upper": cert.upper, "optimal": "yes" if cert.optimal else "no",
            "distance_set": "{" + ",".join(map(str, sorted(stats.distance_set))) + "}",
        })
    return rows


def cmd_table(args) -> int:
    p = _odd_prime_power(args.p)
    rows = table_rows(p, args.max_m)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        cells = [TABLE_FIELDS] + [[str(r[f]) for f in TABLE_FIELDS] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_FIELDS))]
        for row in cells:
            print("  ".join(c.rjust(wd) for c, wd in zip(row, widths)).rstrip())
    return EXIT_OK


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weighcodes",
        description="Weighing matrices and optimal constant-weight ternary codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a matrix, code or orthogonal array")
    c.add_argument("--p", type=int, required=True, help="odd prime power")
    c.add_argument("--m", type=int, default=1)
    c.add_argument(
        "--what", default="matrix",
        choices=["matrix", "code", "t1", "oa", "jacobsthal", "conference"],
    )
    c.add_argument("--out", help="output file (default: stdout)")
    c.add_argument("--format", default="grid", choices=["grid", "json"])
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a matrix, code or OA file")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--type", required=True, choices=["weighing", "code", "oa", "balanced"])
    v.add_argument("--weight", type=int, help="expected weight (default: first row's)")
    v.add_argument("--distance", type=int, help="required minimum distance (code only)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="evaluate Johnson bounds and BW formulas")
    b.add_argument("--n", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--w", type=int)
    b.add_argument("--chain-inner", type=int, help="inner A3(n-1,d,w-1) value for one chaining step")
    b.add_argument("--bw", help="balanced weighing parameters 'v,k'")
    b.set_defaults(func=cmd_bound)

    ce = sub.add_parser("certify", help="certify optimality of a family code")
    ce.add_argument("--p", type=int, required=True)
    ce.add_argument("--m", type=int, required=True)
    ce.add_argument("--t1", action="store_true", help="certify the substituted-array code instead")
    ce.add_argument("--json", action="store_true", help="print the certificate as JSON")
    ce.set_defaults(func=cmd_certify)

    t = sub.add_parser("table", help="tabulate the family for m = 1..max-m")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--max-m", type=int, required=True)
    t.add_argument("--format", default="text", choices=["text", "csv"])
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (PropertyCheckFailed, DuplicateRow, ZeroRow, NonSquare) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ParseError, NotPrimePower, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WeighcodesError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
