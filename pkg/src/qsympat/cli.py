"""Batch command-line surface: compute, verify, export.

Exit codes: 0 on success or all checks passing, 1 when a verification check
fails or a conjecture is violated, 2 on usage errors.  Output is plain text
by default; --json emits the documented schemas and --tsv a delimited form.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import checks as checklib
from .avoid import (
    count_avoiders,
    descent_tally,
    enumerate_avoiders,
    is_pattern_knuth_closed,
)
from .perm import (
    format_permutation,
    parse_pattern_set,
    parse_permutation,
)
from .qsym import (
    NotInSpan,
    QSymElement,
    is_schur_nonnegative,
    qsym_to_dict,
    set_statistics_cache_dir,
    sym_to_dict,
    to_schur,
)
from .tableau import (
    format_tableau,
    is_superstandard_hook,
    knuth_class,
    knuth_neighbors,
    parse_tableau,
    rsk,
    rsk_inverse,
)

SAFETY_CAP = 12


def _add_common(p: argparse.ArgumentParser, *, patterns: bool = True) -> None:
    if patterns:
        p.add_argument(
            "-p",
            "--patterns",
            default="",
            help="comma-separated patterns (';'-separated when entries exceed 9)",
        )
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir", default=None, help="descent-statistics cache directory")
    p.add_argument(
        "--unsafe-n",
        action="store_true",
        help=f"lift the safety cap of n <= {SAFETY_CAP}",
    )


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qsympat",
        description="pattern-avoidance classes and their quasisymmetric generating functions",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avoiders", help="enumerate or count an avoidance class")
    p.add_argument("-n", "--grade", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print the count only")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")
    _add_common(p)

    p = sub.add_parser("qsym", help="fundamental expansion of Q_n, optionally in Schur form")
    p.add_argument("-n", "--grade", type=int, required=True)
    p.add_argument("--schur", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")
    _add_common(p)

    p = sub.add_parser("rsk", help="insertion/recording tableaux of a permutation")
    p.add_argument("perm", nargs="?", help="permutation in text form")
    p.add_argument(
        "--inverse",
        nargs=2,
        metavar=("P", "Q"),
        help="recover the permutation for a tableau pair",
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("knuth", help="Knuth classes, neighbors, closure verdicts")
    p.add_argument("--class", dest="cls", metavar="TABLEAU", help="list a Knuth class")
    p.add_argument("--closed", metavar="TABLEAU", help="pattern-Knuth closure verdict")
    p.add_argument("--neighbors", metavar="PERM", help="single Knuth moves")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification checks (JSON-lines output)")
    p.add_argument("check", help="a check id, or 'all'")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--manifest", help="JSON manifest of {check_id, parameters} entries")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("-j", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--size-max", type=int, default=None)
    p.add_argument("--out", help="also write the JSON-lines to this file")
    _add_common(p, patterns=False)

    p = sub.add_parser("report", help="TSV table plus figures for a range of grades")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    _add_common(p)

    return ap


def _setup_cache(args) -> None:
    cache = getattr(args, "cache_dir", None) or os.environ.get("QSYMPAT_CACHE")
    if cache:
        set_statistics_cache_dir(cache)


def _check_grade(ap: argparse.ArgumentParser, args, *values: int) -> None:
    for n in values:
        if n is None:
            continue
        if n < 0:
            ap.error(f"grade must be nonnegative, got {n}")
        if n > SAFETY_CAP and not getattr(args, "unsafe_n", False):
            ap.error(
                f"n = {n} above the safety cap {SAFETY_CAP}; pass --unsafe-n to override"
            )


def _parse_patterns(ap: argparse.ArgumentParser, text: str):
    try:
        return parse_pattern_set(text)
    except ValueError as exc:
        ap.error(str(exc))


def _cmd_avoiders(ap, args) -> int:
    pats = _parse_patterns(ap, args.patterns)
    _check_grade(ap, args, args.grade)
    if args.count:
        print(count_avoiders(args.grade, pats, threads=args.threads))
        return 0
    cls = enumerate_avoiders(args.grade, pats)
    if args.json:
        print(
            json.dumps(
                {
                    "grade": cls.n,
                    "patterns": [format_permutation(p) for p in cls.patterns],
                    "count": len(cls),
                    "members": [format_permutation(p) for p in cls.members],
                },
                sort_keys=True,
            )
        )
        return 0
    for p in cls.members:
        print(format_permutation(p))
    if not args.tsv:
        print(f"count {len(cls)}", file=sys.stderr)
    return 0


def _cmd_qsym(ap, args) -> int:
    pats = _parse_patterns(ap, args.patterns)
    _check_grade(ap, args, args.grade)
    q = QSymElement(args.grade, descent_tally(args.grade, pats, threads=args.threads))
    schur = to_schur(q) if args.schur else None
    if args.json:
        blob = {"qsym": qsym_to_dict(q)}
        if args.schur:
            if isinstance(schur, NotInSpan):
                blob["schur"] = None
                blob["not_in_span"] = {
                    "descents": sorted(schur.witness),
                    "residual": int(schur.residual)
                    if schur.residual.denominator == 1
                    else str(schur.residual),
                }
            else:
                blob["schur"] = sym_to_dict(schur)
                blob["schur_nonnegative"] = is_schur_nonnegative(schur)
        print(json.dumps(blob, sort_keys=True))
        return 0
    if args.tsv:
        if args.schur and not isinstance(schur, NotInSpan):
            for term in sym_to_dict(schur)["terms"]:
                print(f"{','.join(map(str, term['partition']))}\t{term['coeff']}")
        else:
            for term in qsym_to_dict(q)["terms"]:
                print(f"{','.join(map(str, term['descents']))}\t{term['coeff']}")
        return 0
    print(f"Q = {q}")
    if args.schur:
        if isinstance(schur, NotInSpan):
            print(f"NOT SYMMETRIC ({schur})")
        else:
            nn = "Schur nonnegative" if is_schur_nonnegative(schur) else "has negative coefficients"
            print(f"schur = {schur}  [{nn}]")
    return 0


def _cmd_rsk(ap, args) -> int:
    if args.inverse:
        try:
            p = parse_tableau(args.inverse[0])
            q = parse_tableau(args.inverse[1])
            perm = rsk_inverse(p, q)
        except ValueError as exc:
            ap.error(str(exc))
        if args.json:
            print(json.dumps({"permutation": format_permutation(perm)}))
        else:
            print(format_permutation(perm))
        return 0
    if not args.perm:
        ap.error("give a permutation or --inverse P Q")
    try:
        perm = parse_permutation(args.perm)
        p, q = rsk(perm)
    except ValueError as exc:
        ap.error(str(exc))
    if args.json:
        print(
            json.dumps(
                {
                    "permutation": format_permutation(perm),
                    "P": [list(r) for r in p],
                    "Q": [list(r) for r in q],
                }
            )
        )
    else:
        print(f"P = {format_tableau(p)}")
        print(f"Q = {format_tableau(q)}")
    return 0


def _cmd_knuth(ap, args) -> int:
    chosen = [x for x in (args.cls, args.closed, args.neighbors) if x]
    if len(chosen) != 1:
        ap.error("give exactly one of --class, --closed, --neighbors")
    try:
        if args.cls:
            members = sorted(knuth_class(parse_tableau(args.cls)))
            if args.json:
                print(json.dumps([format_permutation(p) for p in members]))
            else:
                for p in members:
                    print(format_permutation(p))
        elif args.closed:
            tab = parse_tableau(args.closed)
            closed = is_pattern_knuth_closed(knuth_class(tab))
            hook = is_superstandard_hook(tab)
            if args.json:
                print(json.dumps({"closed": closed, "superstandard_hook": hook}))
            else:
                label = "CLOSED" if closed else "NOT CLOSED"
                note = " (superstandard hook)" if hook else ""
                print(f"{label}{note}")
        else:
            perm = parse_permutation(args.neighbors)
            nbrs = sorted(knuth_neighbors(perm))
            if args.json:
                print(json.dumps([format_permutation(p) for p in nbrs]))
            else:
                for p in nbrs:
                    print(format_permutation(p))
    except ValueError as exc:
        ap.error(str(exc))
    return 0


def _cmd_verify(ap, args) -> int:
    overrides = {}
    if args.n_max is not None:
        overrides["n_max"] = args.n_max
    if args.j is not None:
        overrides["j"] = args.j
    if args.m is not None:
        overrides["m"] = args.m
    if args.m_max is not None:
        overrides["m_max"] = args.m_max
    if args.size_max is not None:
        overrides["size_max"] = args.size_max

    if args.manifest:
        try:
            entries = [
                (e["check_id"], e.get("parameters", {}))
                for e in json.loads(Path(args.manifest).read_text())
            ]
        except (OSError, ValueError, KeyError) as exc:
            ap.error(f"bad manifest: {exc}")
    elif args.check == "all":
        entries = checklib.default_suite(quick=args.quick)
    else:
        if args.check not in checklib.CHECK_IDS:
            ap.error(
                f"unknown check {args.check!r}; known: {', '.join(checklib.CHECK_IDS)}, all"
            )
        entries = [(args.check, overrides)]

    try:
        results = checklib.run_suite(entries, threads=args.threads)
    except (TypeError, ValueError, KeyError) as exc:
        ap.error(str(exc))
    lines = [checklib.result_to_json(r) for r in results]
    for line in lines:
        print(line)
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")
    for r in results:
        print(f"[{r.status}] {r.check_id} {r.parameters}", file=sys.stderr)
    return 1 if checklib.suite_failed(results) else 0


def _cmd_report(ap, args) -> int:
    pats = _parse_patterns(ap, args.patterns)
    _check_grade(ap, args, args.n_min, args.n_max)
    if args.n_min > args.n_max:
        ap.error("--n-min must not exceed --n-max")
    from .report import write_report

    paths = write_report(pats, args.n_min, args.n_max, args.out_dir)
    for path in paths:
        print(path)
    return 0


_COMMANDS = {
    "avoiders": _cmd_avoiders,
    "qsym": _cmd_qsym,
    "rsk": _cmd_rsk,
    "knuth": _cmd_knuth,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    _setup_cache(args)
    return _COMMANDS[args.command](ap, args)


if __name__ == "__main__":
    sys.exit(main())
