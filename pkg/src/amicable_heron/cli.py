"""Command-line interface: searches, the uniqueness verification, and cross-checks.

Records go to stdout, diagnostics to stderr.  Exit codes: 0 success /
verified, 1 verification discrepancy, 2 usage error, 3 arithmetic
overflow (a bound too large for the selected fixed-width kernel lane).

Identical invocations produce byte-identical output regardless of the
kernel lane in use.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle_search, pipeline
from .oracle_search import AmicablePair
from .pipeline import CandidateRecord, EliminationVerdict, TheoremReport
from .triangle_core import HeronTriangle, XyzTriple, xyz_to_sides

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3


# ---------------------------------------------------------------------------
# record serialization
# ---------------------------------------------------------------------------

def triangle_dict(h: HeronTriangle) -> dict:
    return {"sides": list(h.sides.as_tuple()), "perimeter": h.perimeter, "area": h.area}


def pair_dict(pair: AmicablePair) -> dict:
    return {
        "first": triangle_dict(pair.first),
        "second": triangle_dict(pair.second),
        "first_area_equals_second_perimeter": pair.first.area,
        "first_perimeter_equals_second_area": pair.first.perimeter,
    }


def xyz_dict(t: XyzTriple) -> dict:
    sides = xyz_to_sides(t)
    return {
        "xyz": list(t.as_tuple()),
        "sides": list(sides.as_tuple()),
        "perimeter": 2 * t.semiperimeter,
    }


def candidate_dict(c: CandidateRecord) -> dict:
    return {
        "xyz": list(c.xyz.as_tuple()),
        "xy_sum": c.xy_sum,
        "sides": list(c.sides.as_tuple()),
        "perimeter": c.perimeter,
        "area_sq": c.area_sq,
        "area": c.area,
        "filters": {
            "skinny": c.passed_skinny,
            "square_area": c.passed_square_area,
            "divisibility": c.passed_divisibility,
        },
        "survives": c.survives,
    }


def verdict_dict(v: EliminationVerdict) -> dict:
    return {
        "candidate_sides": list(v.candidate.sides.as_tuple()),
        "required_perimeter": v.required_perimeter,
        "required_area": v.required_area,
        "method": v.method,
        "partners": [list(t.as_tuple()) for t in v.partners],
        "eliminated": v.eliminated,
    }


def report_dict(r: TheoremReport) -> dict:
    return {
        "status": r.status,
        "discrepancy": r.discrepancy,
        "equable_triangles": [triangle_dict(h) for h in r.equable_triangles],
        "candidate_count": len(r.candidates),
        "survivor_count": r.survivor_count,
        "candidates": [candidate_dict(c) for c in r.candidates],
        "verdicts": [verdict_dict(v) for v in r.verdicts],
        "conclusion": pair_dict(r.conclusion) if r.conclusion else None,
        "scope_note": r.scope_note,
    }


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------

_TRI_HEADER = f"{'a':>6} {'b':>6} {'c':>6} {'perimeter':>10} {'area':>10}"


def _tri_row(h: HeronTriangle) -> str:
    a, b, c = h.sides.as_tuple()
    return f"{a:>6} {b:>6} {c:>6} {h.perimeter:>10} {h.area:>10}"


def _emit_triangles(tris: list[HeronTriangle], fmt: str, out) -> None:
    if fmt == "jsonl":
        for h in tris:
            print(json.dumps(triangle_dict(h)), file=out)
        return
    print(_TRI_HEADER, file=out)
    for h in tris:
        print(_tri_row(h), file=out)


def _emit_pairs(pairs: list[AmicablePair], fmt: str, out) -> None:
    if fmt == "jsonl":
        for p in pairs:
            print(json.dumps(pair_dict(p)), file=out)
        return
    print(f"{'first (a,b,c) p A':>26}   {'second (a,b,c) p A':>26}", file=out)
    for p in pairs:
        f, s = p.first, p.second
        left = f"{f.sides.as_tuple()} {f.perimeter} {f.area}"
        right = f"{s.sides.as_tuple()} {s.perimeter} {s.area}"
        print(f"{left:>26}   {right:>26}", file=out)


def _emit_candidates(records: list[CandidateRecord], fmt: str, out) -> None:
    if fmt == "jsonl":
        for c in records:
            print(json.dumps(candidate_dict(c)), file=out)
        return
    print(
        f"{'x':>4} {'y':>4} {'z':>6} {'sides':>16} {'perimeter':>10} "
        f"{'area':>8} {'skinny':>7} {'square':>7} {'divis':>6} {'survives':>9}",
        file=out,
    )
    for c in records:
        x, y, z = c.xyz.as_tuple()
        divis = "-" if c.passed_divisibility is None else str(c.passed_divisibility)
        print(
            f"{x:>4} {y:>4} {z:>6} {str(c.sides.as_tuple()):>16} {c.perimeter:>10} "
            f"{c.area if c.area is not None else '-':>8} {str(c.passed_skinny):>7} "
            f"{str(c.passed_square_area):>7} {divis:>6} {str(c.survives):>9}",
            file=out,
        )


def _render_report_text(r: TheoremReport, out) -> None:
    print(f"status: {r.status}", file=out)
    if r.discrepancy:
        print(f"discrepancy: {r.discrepancy}", file=out)
    print(f"\nequable triangles ({len(r.equable_triangles)}):", file=out)
    print(_TRI_HEADER, file=out)
    for h in r.equable_triangles:
        print(_tri_row(h), file=out)
    print(f"\ncandidates generated: {len(r.candidates)}; survivors: {r.survivor_count}", file=out)
    for c in r.candidates:
        if c.survives:
            print(f"  survivor xyz={c.xyz.as_tuple()} sides={c.sides.as_tuple()} p={c.perimeter} A={c.area}", file=out)
    print("\npartner verdicts:", file=out)
    for v in r.verdicts:
        outcome = "eliminated" if v.eliminated else f"partner {[t.as_tuple() for t in v.partners]}"
        print(
            f"  sides={v.candidate.sides.as_tuple()} needs p={v.required_perimeter} "
            f"A={v.required_area}: {v.method} -> {outcome}",
            file=out,
        )
    if r.conclusion:
        f, s = r.conclusion.first, r.conclusion.second
        print(
            f"\nconclusion: unique amicable pair {f.sides.as_tuple()} (p={f.perimeter}, A={f.area}) "
            f"and {s.sides.as_tuple()} (p={s.perimeter}, A={s.area})",
            file=out,
        )
    else:
        print("\nconclusion: none", file=out)
    print(f"\nnote: {r.scope_note}", file=out)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _validated_p_max(args) -> int:
    p_max = args.p_max
    if p_max < oracle_search.MIN_PERIMETER_BOUND:
        print(
            f"error: --p-max must be >= {oracle_search.MIN_PERIMETER_BOUND}, got {p_max}",
            file=sys.stderr,
        )
        raise SystemExit(EXIT_USAGE)
    return p_max


def cmd_enumerate(args) -> int:
    _emit_triangles(oracle_search.enumerate_heron(_validated_p_max(args)), args.format, sys.stdout)
    return EXIT_OK


def cmd_equable(args) -> int:
    _emit_triangles(oracle_search.find_equable(_validated_p_max(args)), args.format, sys.stdout)
    return EXIT_OK


def cmd_skinny(args) -> int:
    _emit_triangles(oracle_search.find_perimeter_exceeds_area(_validated_p_max(args)), args.format, sys.stdout)
    return EXIT_OK


def cmd_amicable(args) -> int:
    _emit_pairs(oracle_search.find_amicable(_validated_p_max(args)), args.format, sys.stdout)
    return EXIT_OK


def cmd_candidates(args) -> int:
    _emit_candidates(pipeline.generate_candidates(), args.format, sys.stdout)
    return EXIT_OK


def cmd_partner(args) -> int:
    if args.perimeter < 1 or args.area < 1:
        print("error: --perimeter and --area must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.perimeter % 2 == 1 or args.perimeter < 6:
        print(
            f"note: no integer-area triangle has perimeter {args.perimeter}; nothing to enumerate",
            file=sys.stderr,
        )
        return EXIT_OK
    matches = oracle_search.partner_enumerate(args.perimeter // 2, args.area)
    for t in matches:
        rec = xyz_dict(t)
        rec["area"] = args.area
        if args.format == "jsonl":
            print(json.dumps(rec), file=sys.stdout)
        else:
            print(f"xyz={t.as_tuple()} sides={tuple(rec['sides'])} perimeter={rec['perimeter']} area={args.area}")
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    report = pipeline.verify_theorem()
    if args.format == "json":
        print(json.dumps(report_dict(report), indent=2), file=sys.stdout)
    else:
        _render_report_text(report, sys.stdout)
    return EXIT_OK if report.verified else EXIT_DISCREPANCY


def cmd_cross_check(args) -> int:
    p_max = _validated_p_max(args)
    report = pipeline.verify_theorem()

    oracle_set = {
        h.sides.as_tuple()
        for h in oracle_search.find_perimeter_exceeds_area(p_max)
        if pipeline.divisibility_filter(h.perimeter, h.area)
    }
    pipeline_set = {
        c.sides.as_tuple()
        for c in report.candidates
        if c.survives and c.perimeter <= p_max
    }

    oracle_pairs = {
        (p.first.sides.as_tuple(), p.second.sides.as_tuple())
        for p in oracle_search.find_amicable(p_max)
    }
    expected_pairs = set()
    if report.conclusion is not None:
        pair = report.conclusion
        if max(pair.first.perimeter, pair.second.perimeter) <= p_max:
            expected_pairs.add((pair.first.sides.as_tuple(), pair.second.sides.as_tuple()))

    ok = report.verified and oracle_set == pipeline_set and oracle_pairs == expected_pairs
    if ok:
        print(
            f"cross-check p_max={p_max}: agreement; "
            f"{len(oracle_set)} bounded survivors, {len(oracle_pairs)} amicable pair(s)"
        )
        for sides in sorted(oracle_set):
            print(f"  survivor {sides}")
        return EXIT_OK

    print(f"cross-check p_max={p_max}: MISMATCH", file=sys.stderr)
    if not report.verified:
        print(f"  verification failed: {report.discrepancy}", file=sys.stderr)
    print(f"  oracle skinny-and-divisible set:  {sorted(oracle_set)}", file=sys.stderr)
    print(f"  pipeline survivors within bound:  {sorted(pipeline_set)}", file=sys.stderr)
    print(f"  oracle amicable pairs:            {sorted(oracle_pairs)}", file=sys.stderr)
    print(f"  pairs expected from verification: {sorted(expected_pairs)}", file=sys.stderr)
    return EXIT_DISCREPANCY


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amicable-heron",
        description=(
            "Exhaustive searches over Heron triangles (integer sides and area) "
            "and a mechanized verification that exactly one amicable pair exists."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_bounded(name: str, handler, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--p-max", type=int, required=True, help="largest perimeter to scan (inclusive)")
        p.add_argument("--format", choices=("text", "jsonl"), default="text")
        p.set_defaults(func=handler)
        return p

    add_bounded("enumerate", cmd_enumerate, "list every Heron triangle up to a perimeter bound")
    add_bounded("equable", cmd_equable, "list triangles whose area equals their perimeter")
    add_bounded("skinny", cmd_skinny, "list triangles whose perimeter exceeds their area")
    add_bounded("amicable", cmd_amicable, "list amicable pairs up to a perimeter bound")

    p = sub.add_parser("candidates", help="dump the candidate pipeline records with filter verdicts")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("partner", help="enumerate triangles with a required perimeter and area")
    p.add_argument("--perimeter", type=int, required=True)
    p.add_argument("--area", type=int, required=True)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_partner)

    p = sub.add_parser("verify-theorem", help="run the full uniqueness verification and report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("cross-check", help="compare brute-force results against the pipeline")
    p.add_argument("--p-max", type=int, required=True)
    p.set_defaults(func=cmd_cross_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    raise SystemExit(main())
