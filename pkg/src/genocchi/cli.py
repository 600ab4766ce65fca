"""Command-line entry point.

    genocchi numbers --family genocchi --order 2 --max-n 8
    genocchi poly --family euler --order 3 --n 4 [--at 1/2]
    genocchi basis --to bernoulli --order 1 --poly '["0","0","1"]'
    genocchi audit --identities all --variants both --k 1..3 --n 0..8

Exit codes: 0 success, 1 an oracle-verified identity failed the audit, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from .appell import Family, FamilySpec, InvalidSpecError, higher_order_numbers, higher_order_polynomial, poly_eval
from .audit import AuditReport, Tag, run_audit
from .basis import to_basis
from .textio import dump_json, emit_rational, parse_poly, parse_rational, poly_to_strings

log = logging.getLogger("genocchi")


def _nonneg_int(text: str) -> int:
    try:
        r = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if r.denominator != 1 or r < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return int(r)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> Tuple[int, int]:
    """Inclusive ``a..b``; a bare ``a`` means ``a..a``."""
    lo, sep, hi = text.partition("..")
    a = _nonneg_int(lo)
    b = _nonneg_int(hi) if sep else a
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _tags(text: str) -> Optional[List[Tag]]:
    if text.strip().lower() == "all":
        return None
    try:
        return [Tag.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_numbers(args) -> Tuple[str, int]:
    spec = FamilySpec(args.family, args.order)
    values = [emit_rational(v) for v in higher_order_numbers(spec, args.max_n).values]
    if args.format == "csv":
        return _csv(["n", "value"], enumerate(values)), 0
    return dump_json({"family": spec.family.value, "order": spec.order_k, "values": values}) + "\n", 0


def cmd_poly(args) -> Tuple[str, int]:
    if args.family is Family.GENOCCHI and args.order < 1:
        raise InvalidSpecError("Genocchi polynomials need order k >= 1")
    p = higher_order_polynomial(FamilySpec(args.family, args.order), args.n)
    if args.at is not None:
        value = emit_rational(poly_eval(p, args.at))
        if args.format == "csv":
            return _csv(["x", "value"], [[emit_rational(args.at), value]]), 0
        return dump_json(value) + "\n", 0
    coeffs = poly_to_strings(p)
    if args.format == "csv":
        return _csv([f"c{d}" for d in range(len(coeffs))], [coeffs]), 0
    return dump_json(coeffs) + "\n", 0


def cmd_basis(args) -> Tuple[str, int]:
    e = to_basis(args.poly, FamilySpec(args.to, args.order))
    coeffs = [emit_rational(c) for c in e.coefficients]
    if args.format == "csv":
        return _csv(["index", "coefficient"], ((e.offset + i, c) for i, c in enumerate(coeffs))), 0
    obj = {"family": e.spec.family.value, "order": e.spec.order_k, "offset": e.offset, "coefficients": coeffs}
    return dump_json(obj) + "\n", 0


def report_to_json(report: AuditReport) -> str:
    identities = [
        {
            "tag": row.id.tag.value,
            "variant": row.id.variant,
            "rationale": row.rationale,
            "oracle_verified": row.oracle_verified,
            "pass": row.passed,
            "fail": row.failed,
            "skipped": row.skipped,
        }
        for row in report.summary
    ]
    verdicts = []
    for v in report.verdicts:
        m = v.mismatch
        verdicts.append({
            "tag": v.id.tag.value,
            "variant": v.id.variant,
            "k": v.k,
            "n": v.n,
            "outcome": v.outcome.value,
            "mismatch": None if m is None else {
                "component": m.component,
                "degree": m.degree,
                "lhs": emit_rational(m.lhs),
                "rhs": emit_rational(m.rhs),
            },
        })
    obj = {
        "ranges": {"k": list(report.k_range), "n": list(report.n_range)},
        "variants": report.variants,
        "exit_code": report.exit_code,
        "identities": identities,
        "verdicts": verdicts,
    }
    return dump_json(obj) + "\n"


def report_to_csv(report: AuditReport) -> str:
    rows = []
    for v in report.verdicts:
        m = v.mismatch
        rows.append([
            v.id.tag.value, v.id.variant, v.k, v.n, v.outcome.value,
            "" if m is None else (m.component or ""),
            "" if m is None else m.degree,
            "" if m is None else emit_rational(m.lhs),
            "" if m is None else emit_rational(m.rhs),
        ])
    header = ["tag", "variant", "k", "n", "outcome", "component", "mismatch_degree", "lhs", "rhs"]
    return _csv(header, rows)


def cmd_audit(args) -> Tuple[str, int]:
    report = run_audit(args.identities, args.k, args.n, args.variants, workers=args.jobs)
    for f in report.oracle_failures:
        log.error("oracle-verified identity failed: %s at n=%d, k=%d", f.id, f.n, f.k)
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    return text, report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS, help="output path, '-' for stdout")

    parser = argparse.ArgumentParser(
        prog="genocchi",
        description="Exact higher-order Bernoulli/Euler/Genocchi numbers, polynomials, bases and identity audit.",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--output", default="-", help="output path, '-' for stdout")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", parents=[common], help="table of higher-order numbers")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--max-n", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("poly", parents=[common], help="coefficients or value of A_n^k(x)")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--at", type=_rational, default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("basis", parents=[common], help="expand a polynomial in a higher-order basis")
    p.add_argument("--to", type=_family, required=True)
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--poly", required=True, help='ascending coefficients, e.g. \'["0","0","1"]\'')
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("audit", parents=[common], help="verify the identity registry exactly")
    p.add_argument("--identities", type=_tags, default=None, help="comma-separated tags or 'all'")
    p.add_argument("--k", type=_range, default=(1, 3))
    p.add_argument("--n", type=_range, default=(0, 8))
    p.add_argument("--variants", choices=("as-written", "corrected", "both"), default="both")
    p.add_argument("--jobs", type=_nonneg_int, default=1, help="worker threads")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")

    if args.command == "basis":
        try:
            args.poly = parse_poly(args.poly)
        except ValueError as exc:
            parser.error(f"--poly: {exc}")
    if args.command == "audit" and args.jobs < 1:
        parser.error("--jobs must be >= 1")

    try:
        text, code = args.func(args)
    except (InvalidSpecError, ValueError) as exc:
        parser.error(str(exc))

    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
