"""
Command-line front end.

Exit codes: 0 success, 1 a check or membership test failed, 2 usage error,
3 malformed or schema-invalid input, 4 bound or shape error, 5 the field
modulus is not prime.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats
from .behavior import AutoregressiveSystem, is_member, orthogonal_of_polys, orthogonal_of_series, solve_behavior
from .errors import DomainError, NotPrimeError, SchemaError
from .laws import SUITES, dump_failures, format_report, run_suite
from .polysys import PolyMatrix
from .shiftop import apply_matrix, pairing_F, shift_vector

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_SCHEMA, EXIT_DOMAIN, EXIT_FIELD = range(6)


def _emit(doc_or_text, out):
    text = doc_or_text if isinstance(doc_or_text, str) else formats.dumps(doc_or_text)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path, kind):
    doc = formats.read(path)
    if doc["kind"] != kind:
        raise SchemaError(f"{path}: expected a {kind} file, got {doc['kind']!r}")
    return doc


def _matrix(path) -> PolyMatrix:
    return formats.doc_to_matrix(_read(path, "matrix"))


def _series(path):
    return formats.doc_to_series(_read(path, "series"))


def parse_exponent(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        vals = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad exponent {text!r}") from exc
    if not isinstance(vals, list) or not all(isinstance(v, int) and v >= 0 for v in vals):
        raise argparse.ArgumentTypeError(f"bad exponent {text!r}")
    return tuple(vals)


def cmd_solve(args):
    slc = solve_behavior(AutoregressiveSystem(_matrix(args.R)), args.D)
    doc = formats.slice_to_doc(slc)
    _emit(doc, args.o)
    return EXIT_OK if doc["certificate"] else EXIT_CHECK


def cmd_apply(args):
    _emit(formats.series_to_doc(apply_matrix(_matrix(args.R), _series(args.W))), args.o)
    return EXIT_OK


def cmd_shift(args):
    _emit(formats.series_to_doc(shift_vector(args.b, _series(args.W))), args.o)
    return EXIT_OK


def cmd_member(args):
    v = is_member(_matrix(args.R), _series(args.W))
    report = {"member": v.passed, "checked_degree": v.checked_degree}
    if not v.passed:
        report["violation"] = v.data
    _emit(json.dumps(report) + "\n", args.o)
    return EXIT_OK if v.passed else EXIT_CHECK


def cmd_orth(args):
    if args.which == "polys":
        slc = orthogonal_of_polys(list(_matrix(args.P).rows), args.D)
        _emit(formats.slice_to_doc(slc), args.o)
        return EXIT_OK
    Q = [_series(path) for path in args.W]
    basis = orthogonal_of_series(Q, args.d)
    if not basis:
        raise DomainError("the orthogonal is zero; nothing to write as a matrix")
    _emit(formats.matrix_to_doc(PolyMatrix(basis)), args.o)
    return EXIT_OK


def cmd_pair(args):
    d = _matrix(args.d)
    W = _series(args.W)
    if args.series:
        # row k of R . W is the series-valued pairing of row k with W
        _emit(formats.series_to_doc(apply_matrix(d, W)), args.o)
    else:
        _emit(formats.scalars_to_doc(d.field, [pairing_F(row, W) for row in d.rows]), args.o)
    return EXIT_OK


def cmd_check(args):
    results = run_suite(args.suite, args.seed, args.trials, transposed=args.transposed)
    _emit(format_report(args.suite, args.seed, args.trials, results), args.o)
    if any(not r.passed for r in results):
        for path in dump_failures(results, args.dump_dir):
            print(f"counterexample written to {path}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def default_seed() -> int:
    try:
        return int(os.environ.get("DADS_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dads", description="Polynomial shift operators and behaviors over GF(p).")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="basis of Ker R at truncation bound D")
    s.add_argument("-R", required=True, help="matrix file")
    s.add_argument("-D", required=True, type=int, help="truncation bound")
    s.add_argument("-o", help="output file (default stdout)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("apply", help="apply R to a series vector")
    s.add_argument("-R", required=True)
    s.add_argument("-W", required=True, help="series file")
    s.add_argument("-o")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("shift", help="shift a series vector by X^b")
    s.add_argument("-b", required=True, type=parse_exponent, help="exponent, e.g. 1,0 or [1,0]")
    s.add_argument("-W", required=True)
    s.add_argument("-o")
    s.set_defaults(func=cmd_shift)

    s = sub.add_parser("member", help="test R . W = 0 up to the checkable degree")
    s.add_argument("-R", required=True)
    s.add_argument("-W", required=True)
    s.add_argument("-o")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("orth", help="orthogonal of a polynomial or series set")
    osub = s.add_subparsers(dest="which", required=True)
    o = osub.add_parser("polys", help="P-perp at bound D; P given as the rows of a matrix file")
    o.add_argument("-P", required=True)
    o.add_argument("-D", required=True, type=int)
    o.add_argument("-o")
    o.set_defaults(func=cmd_orth)
    o = osub.add_parser("series", help="polynomials of degree <= d annihilating the given series")
    o.add_argument("-W", required=True, action="append", help="series file (repeatable)")
    o.add_argument("-d", required=True, type=int, help="maximal polynomial degree")
    o.add_argument("-o")
    o.set_defaults(func=cmd_orth)

    s = sub.add_parser("pair", help="pair each row of a matrix file with a series vector")
    s.add_argument("-d", required=True, help="matrix file; each row is one polynomial vector")
    s.add_argument("-W", required=True)
    s.add_argument("--series", action="store_true", help="series-valued pairing instead of field-valued")
    s.add_argument("-o")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("check", help="run the randomized law suites")
    s.add_argument("--suite", choices=sorted(SUITES), default="all")
    s.add_argument("--seed", type=int, default=None, help="master seed (default: $DADS_SEED or 0)")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--transposed", action="store_true",
                   help="debug: apply matrices with the transposed convention (must fail)")
    s.add_argument("--dump-dir", default=".", help="where counterexamples are written")
    s.add_argument("-o")
    s.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = default_seed()
    try:
        return args.func(args)
    except NotPrimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
