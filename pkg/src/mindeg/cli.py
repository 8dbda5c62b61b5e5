"""Command-line driver.

Subcommands: roots, cascade, msos, minimal-degrees, key-inequality, verdict,
appendix-verify, sweep. Parabolic sets are comma-separated Bourbaki indices
(e.g. --delta-p 2), degrees are comma-separated coordinates over the simple
roots outside Delta_P in ascending order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cascade import (
    cascade_roots, cascade_size_bound_holds, enumerate_sos, full_cascade,
    max_cascade_forces_point_degree, mmsos_size, mmsos_unique_up_to_weyl,
)
from .curve_nbhd import borel, minimal_degree_records, point_class_degree
from .exceptions import MindegError, NotApplicableError
from .parabolic import Parabolic
from .report import (
    SweepConfig, all_parabolic_subsets, case_reports, default_types, emit,
    predictions_confirmed, run_sweep,
)
from .root_system import SimpleType, build_root_system
from .so7 import run_appendix_checks
from .tangent_directions import quasi_homogeneity_verdict
from .weyl import center_elements, word_str

WORKERS_ENV = "MINDEG_WORKERS"


def _parse_indices(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    return tuple(sorted(int(x) for x in text.split(",") if x.strip()))


def _parse_coeffs(text: str | None):
    if text is None:
        return None
    return tuple(int(x) for x in text.split(",") if x.strip())


def _print_json(obj) -> None:
    print(json.dumps(obj))


def cmd_roots(args) -> int:
    rs = build_root_system(args.type)
    summary = {
        "type": str(rs.simple_type),
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "symmetrizer": list(rs.symmetrizer),
        "num_roots": len(rs.roots),
        "num_positive": len(rs.positive_roots),
        "highest_root": list(rs.highest_root.coeffs),
        "positive_roots": [list(r.coeffs) for r in rs.positive_roots],
    }
    print(json.dumps(summary, indent=2))
    return 0


def cmd_cascade(args) -> int:
    rs = build_root_system(args.type)
    e = _parse_coeffs(args.e)
    if e is None:
        e = point_class_degree(borel(rs))
    cs = cascade_roots(rs, e)
    _print_json({
        "type": str(rs.simple_type),
        "e": list(cs.degree),
        "cascade": [list(r.coeffs) for r in cs.roots],
    })
    return 0


def cmd_msos(args) -> int:
    rs = build_root_system(args.type)
    base = full_cascade(rs)
    summary = {
        "type": str(rs.simple_type),
        "cascade": [list(r.coeffs) for r in base.roots],
        "cascade_size": len(base),
        "cascade_size_bound_holds": cascade_size_bound_holds(rs),
        "center_order": len(center_elements(rs)),
    }
    try:
        summary["max_cascade_forces_point_degree"] = max_cascade_forces_point_degree(rs)
    except NotApplicableError:
        summary["max_cascade_forces_point_degree"] = "NotApplicable"
    if rs.rank <= 4:
        records = enumerate_sos(rs)
        summary.update({
            "num_sos": len(records),
            "num_msos": sum(1 for r in records if r.is_msos),
            "num_mmsos": sum(1 for r in records if r.is_mmsos),
            "mmsos_size": mmsos_size(rs),
            "mmsos_unique_up_to_weyl": mmsos_unique_up_to_weyl(rs),
        })
    print(json.dumps(summary, indent=2))
    return 0


def cmd_minimal_degrees(args) -> int:
    rs = build_root_system(args.type)
    p = Parabolic(rs, frozenset(_parse_indices(args.delta_p)))
    for rec in minimal_degree_records(p):
        _print_json({
            "degree": list(rec.degree),
            "z_reduced_word": word_str(rec.z),
            "length": rec.z.length,
            "lifting": list(rec.lifting),
            "cascade": [list(r.coeffs) for r in rec.cascade],
        })
    return 0


def _emit_case_rows(type_label: str, subsets) -> tuple[int, list]:
    rows = []
    for dp in subsets:
        rows.extend(case_reports(type_label, dp))
    for r in rows:
        _print_json({
            "delta_p": list(r.delta_p),
            "degree": list(r.degree),
            "lhs": r.lhs,
            "rhs": r.rhs,
            "holds": r.holds,
            "exception": r.exception,
            "td": [list(c) for c in r.td],
            "td_tilde": [list(c) for c in r.td_tilde],
        })
    return (0 if predictions_confirmed(rows) else 1), rows


def cmd_key_inequality(args) -> int:
    rs = build_root_system(args.type)
    if args.all_parabolics:
        subsets = all_parabolic_subsets(rs.rank)
    else:
        subsets = [_parse_indices(args.delta_p)]
    code, _ = _emit_case_rows(args.type, subsets)
    return code


def cmd_verdict(args) -> int:
    rs = build_root_system(args.type)
    p = Parabolic(rs, frozenset(_parse_indices(args.delta_p)))
    d = _parse_coeffs(args.degree)
    if d is None:
        d = point_class_degree(p)
    v = quasi_homogeneity_verdict(p, d)
    payload = {
        "type": str(rs.simple_type),
        "delta_p": sorted(p.delta_p),
        "degree": list(d),
        "verdict": v.kind,
    }
    if v.moduli_dim is not None:
        payload["moduli_dim"] = v.moduli_dim
        payload["group_dim"] = v.group_dim
    _print_json(payload)
    return 0


def cmd_appendix_verify(args) -> int:
    results = run_appendix_checks()
    print(json.dumps([{"check_name": r.check_name, "pass": r.passed,
                       "witness": r.witness} for r in results], indent=2))
    return 0 if all(r.passed for r in results) else 1


def cmd_sweep(args) -> int:
    if args.types:
        types = tuple(SimpleType.parse(t) for t in args.types.split(","))
    else:
        types = default_types(args.max_rank, include_e6=args.include_e6)
    workers = args.workers or int(os.environ.get(WORKERS_ENV, "1"))
    cfg = SweepConfig(types=types, parabolics="all", max_rank=args.max_rank,
                      output=args.format, workers=workers)
    reports = run_sweep(cfg)
    sys.stdout.write(emit(reports, args.format))
    return 0 if predictions_confirmed(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mindeg",
        description="Exact combinatorics of minimal degrees on G/P.")
    parser.add_argument("--seedless", action="store_true",
                        help="reserved; nothing here uses randomness")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("roots", help="root system summary")
    sp.add_argument("type")
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("cascade", help="cascade of a full-flag minimal degree")
    sp.add_argument("type")
    sp.add_argument("--e", help="degree coordinates, default: point-class degree")
    sp.set_defaults(func=cmd_cascade)

    sp = sub.add_parser("msos", help="strongly-orthogonal-set classification summary")
    sp.add_argument("type")
    sp.set_defaults(func=cmd_msos)

    sp = sub.add_parser("minimal-degrees", help="all minimal degrees of a parabolic")
    sp.add_argument("type")
    sp.add_argument("--delta-p", default="", help="comma-separated Bourbaki indices")
    sp.set_defaults(func=cmd_minimal_degrees)

    sp = sub.add_parser("key-inequality", help="tangent-direction count vs c1 pairing")
    sp.add_argument("type")
    sp.add_argument("--delta-p", default="")
    sp.add_argument("--all-parabolics", action="store_true")
    sp.set_defaults(func=cmd_key_inequality)

    sp = sub.add_parser("verdict", help="quasi-homogeneity classification")
    sp.add_argument("type")
    sp.add_argument("--delta-p", default="")
    sp.add_argument("--degree", help="default: point-class degree")
    sp.set_defaults(func=cmd_verdict)

    sp = sub.add_parser("appendix-verify", help="exact so7/G2 matrix-model checklist")
    sp.set_defaults(func=cmd_appendix_verify)

    sp = sub.add_parser("sweep", help="full case sweep with report emission")
    sp.add_argument("--types", help="comma-separated, e.g. A2,B3,G2")
    sp.add_argument("--max-rank", type=int, default=5)
    sp.add_argument("--format", choices=("json", "csv", "md"), default="json")
    sp.add_argument("--workers", type=int, default=0,
                    help=f"0 means read {WORKERS_ENV} (default 1)")
    sp.add_argument("--include-e6", action="store_true")
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MindegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
