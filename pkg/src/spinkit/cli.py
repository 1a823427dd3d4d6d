"""Command-line front end.

Subcommands::

    spinkit verify {clifford|spin|reps|all} [--seed N] [--format F]
    spinkit cohomology [FILE] --degree K [--coeff {z,z2,zN}] [--format F]
    spinkit census [FILE] [--format F]
    spinkit torsor-check [--max-order N] [--format F]

``--format`` is ``text`` (default) or ``structured`` (JSON).  Bundled data
files are used when FILE is omitted; the environment variable
``SPINKIT_DATA_DIR`` points lookups at a different data directory.

Exit codes: 0 success, 1 at least one check failed, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .census import DataConsistencyWarning, census_report, NEGATIVE_CHIRALITY_CONVENTION
from .cwcomplex import CoefficientGroup, relative_cohomology
from .errors import SpinkitError
from .fileio import BUNDLED_CATALOGUE, data_path, load_catalogue, load_complex
from .torsor import (
    abelian_groups_up_to,
    action_from_difference,
    difference_from_action,
    regular_difference_table,
    verify_difference_axioms,
)
from .verify import run_suites

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _parse_coefficients(text: str) -> CoefficientGroup:
    text = text.strip().lower()
    if text == "z":
        return CoefficientGroup(0)
    if text.startswith("z") and text[1:].isdigit():
        modulus = int(text[1:])
        if modulus >= 2:
            return CoefficientGroup(modulus)
    raise argparse.ArgumentTypeError(f"coefficient spec {text!r} is not z or zN (N >= 2)")


def _emit_checks(title: str, results, fmt: str) -> int:
    failed = [r for r in results if not r.passed]
    if fmt == "structured":
        payload = {
            "report": title,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        print(json.dumps(payload, indent=1))
    else:
        print(f"# {title}")
        width = max(len(r.name) for r in results) if results else 0
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            suffix = f"  [{r.detail}]" if r.detail else ""
            print(f"{r.name:<{width}}  {status}{suffix}")
        print(f"# {len(results) - len(failed)} passed, {len(failed)} failed")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _cmd_verify(args) -> int:
    results = run_suites(args.scope, seed=args.seed)
    return _emit_checks(f"verify {args.scope} (seed {args.seed})", results, args.format)


def _cmd_cohomology(args) -> int:
    path = args.file if args.file else data_path("disk8_rel_sphere7.json")
    cx = load_complex(path)
    group = relative_cohomology(cx, args.degree, args.coeff)
    core = cx.name.strip() if cx.name else "X, Y"
    if core.startswith("(") and core.endswith(")"):
        core = core[1:-1]
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "complex": cx.name,
                    "degree": args.degree,
                    "coefficients": str(args.coeff),
                    "group": str(group),
                    "free_rank": group.free_rank,
                    "torsion": list(group.torsion),
                },
                indent=1,
            )
        )
    else:
        print(f"H^{args.degree}({core}; {args.coeff}) = {group}")
    return EXIT_OK


def _cmd_census(args) -> int:
    path = args.file if args.file else data_path(BUNDLED_CATALOGUE)
    records = load_catalogue(path)
    rows = []
    for d in records:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DataConsistencyWarning)
            report = census_report(d)
        notes = [str(w.message) for w in caught]
        rows.append((report, notes))
    if args.format == "structured":
        payload = {
            "convention": NEGATIVE_CHIRALITY_CONVENTION,
            "manifolds": [
                {
                    "name": r.name,
                    "e_s_plus": str(r.e_s_plus),
                    "e_s_minus": str(r.e_s_minus),
                    "exists": r.exists,
                    "count": r.count if isinstance(r.count, int) else (r.count or None),
                    "ahat": str(r.ahat),
                    "holonomy_note": r.holonomy_note,
                    "warnings": notes,
                }
                for r, notes in rows
            ],
        }
        print(json.dumps(payload, indent=1))
    else:
        header = f"{'manifold':<24} {'e(S+)':>8} {'exists':>6} {'count':>12}  note"
        print(header)
        print("-" * len(header))
        for r, notes in rows:
            count = "-" if r.count is None else str(r.count)
            note = r.holonomy_note or ""
            if notes:
                note = (note + "; " if note else "") + "; ".join(notes)
            print(f"{r.name:<24} {str(r.e_s_plus):>8} {str(r.exists).lower():>6} {count:>12}  {note}")
        with_structure = sum(1 for r, _ in rows if r.exists)
        print(f"# {len(rows)} manifolds, {with_structure} admit a structure")
        print(f"# convention: {NEGATIVE_CHIRALITY_CONVENTION}")
    return EXIT_OK


def _cmd_torsor_check(args) -> int:
    if args.max_order > 64:
        raise SpinkitError("--max-order is capped at 64")
    results = []
    for group in abelian_groups_up_to(args.max_order):
        table = regular_difference_table(group)
        axioms = verify_difference_axioms(table)
        ok = axioms.passed
        detail = "" if ok else str(axioms)
        if ok:
            action = action_from_difference(table)
            back = difference_from_action(action)
            ok = back.table == table.table and action_from_difference(back).table == action.table
            detail = "" if ok else "roundtrip mismatch"
        results.append((f"{group} (order {group.order()})", ok, detail))
    failed = [r for r in results if not r[1]]
    if args.format == "structured":
        print(
            json.dumps(
                {
                    "max_order": args.max_order,
                    "groups": [
                        {"group": name, "passed": ok, "detail": detail}
                        for name, ok, detail in results
                    ],
                    "failed": len(failed),
                },
                indent=1,
            )
        )
    else:
        print(f"# torsor axioms + roundtrips for abelian groups of order <= {args.max_order}")
        for name, ok, detail in results:
            suffix = f"  [{detail}]" if detail else ""
            print(f"{name:<40} {'PASS' if ok else 'FAIL'}{suffix}")
        print(f"# {len(results) - len(failed)} passed, {len(failed)} failed")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinkit",
        description="Exact verification suites, cellular cohomology, torsor checks, "
        "and the Spin(7)-structure census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the exact verification suites")
    p_verify.add_argument("scope", choices=("clifford", "spin", "reps", "all"))
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("text", "structured"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_coh = sub.add_parser("cohomology", help="relative cohomology of a CW pair file")
    p_coh.add_argument("file", nargs="?", help="complex file (default: bundled (D8, S7))")
    p_coh.add_argument("--degree", type=int, required=True)
    p_coh.add_argument("--coeff", type=_parse_coefficients, default=CoefficientGroup(0),
                       help="z (integers) or zN (mod N); default z")
    p_coh.add_argument("--format", choices=("text", "structured"), default="text")
    p_coh.set_defaults(func=_cmd_cohomology)

    p_census = sub.add_parser("census", help="structure existence/count table for a catalogue")
    p_census.add_argument("file", nargs="?", help="catalogue file (default: bundled)")
    p_census.add_argument("--format", choices=("text", "structured"), default="text")
    p_census.set_defaults(func=_cmd_census)

    p_torsor = sub.add_parser("torsor-check", help="exhaustive difference/action equivalence")
    p_torsor.add_argument("--max-order", type=int, default=16)
    p_torsor.add_argument("--format", choices=("text", "structured"), default="text")
    p_torsor.set_defaults(func=_cmd_torsor_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpinkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
