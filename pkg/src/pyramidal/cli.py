"""Command line: ``pyramidal analyze | make | corpus``.

Exit codes: 0 success, 2 validation or parse error, 3 differential
disagreement or invariant failure, 4 cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .classification import classify
from .errors import ParseError, PyramidalError
from .families import (corpus, corpus_document, make_homocyclic_case3, make_s3_times_h,
                       make_suzuki64_case2, parse_corpus_document, resolve)
from .kernel import DEFAULT_CAP, load_permgroup, save_permgroup
from .maps import DEFAULT_AUT_BUDGET, DEFAULT_ISO_BUDGET

log = logging.getLogger("pyramidal")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")
    p.add_argument("--budget-iso", type=int, default=DEFAULT_ISO_BUDGET)
    p.add_argument("--budget-aut", type=int, default=DEFAULT_AUT_BUDGET)
    p.add_argument("--reference-dir", type=Path, default=None,
                   help="directory with permgroup/v1 reference files")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pyramidal", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a permgroup/v1 file")
    p.add_argument("path", nargs="?", type=Path)
    p.add_argument("--spec", help="group shorthand instead of a file, e.g. alternating:4")
    _common(p)

    p = sub.add_parser("make", help="write a family member as permgroup/v1")
    p.add_argument("family", choices=["homocyclic", "s3xh", "suzuki64"])
    p.add_argument("params", nargs="*", metavar="key=value",
                   help="homocyclic: n=, y=; s3xh: h=; suzuki64: a=")
    p.add_argument("--out", "-o", type=Path, required=True)
    _common(p)

    p = sub.add_parser("corpus", help="run the differential corpus")
    p.add_argument("--profile", choices=["small", "full"], default="small")
    p.add_argument("--manifest", type=Path, help="read entries from a corpus/v1 file")
    p.add_argument("--write-manifest", type=Path, help="write the corpus/v1 manifest and exit")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--slow", action="store_true", help="also count Aut(Suz64)")
    p.add_argument("--report-dir", type=Path, help="write CSV table and figures here")
    _common(p)
    return parser


def _parse_params(items: list[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {item!r}")
        out[key] = value
    return out


def _print_report(rep, as_json: bool) -> None:
    doc = rep.to_json()
    if as_json:
        print(json.dumps(doc))
        return
    params = ", ".join(f"{k}={v}" for k, v in doc["params"].items() if k != "inconsistent")
    print(f"order:            {doc['order']} (2-adic valuation {doc['n']})")
    print(f"involutions:      {len(doc['involutions'])} {doc['involutions']}")
    print(f"conjugate:        {doc['involutions_conjugate']}")
    print(f"|K|, |C|, |O(G)|: {doc['K_order']}, {doc['C_order']}, {doc['odd_core_order']}")
    print(f"definition:       {'3-pyramidal' if doc['oracle'] else 'not 3-pyramidal'}")
    print(f"verdict:          {doc['verdict']}{{{params}}}")


def cmd_analyze(args) -> int:
    if args.spec:
        g = resolve(args.spec, cap=args.cap, data_dir=args.reference_dir)
    elif args.path:
        g = load_permgroup(args.path, cap=args.cap)
    else:
        raise ParseError("analyze needs a path or --spec")
    rep = classify(g, iso_budget=args.budget_iso, data_dir=args.reference_dir)
    _print_report(rep, args.json)
    return 3 if getattr(rep.verdict, "inconsistent", False) else 0


def cmd_make(args) -> int:
    params = _parse_params(args.params)
    if args.family == "homocyclic":
        g = make_homocyclic_case3(int(params.get("n", 1)), params.get("y"), cap=args.cap)
    elif args.family == "s3xh":
        g = make_s3_times_h(params.get("h", "cyclic:1"), cap=args.cap)
    else:
        g = make_suzuki64_case2(int(params.get("a", 3)), args.reference_dir, cap=args.cap)
    save_permgroup(g, args.out)
    if args.json:
        print(json.dumps({"path": str(args.out), "order": g.order}))
    else:
        print(f"wrote {args.out}: order {g.order}")
    return 0


def cmd_corpus(args) -> int:
    from .runner import exit_code, run_corpus

    if args.write_manifest:
        args.write_manifest.write_text(json.dumps(corpus_document(args.profile), indent=1) + "\n")
        print(f"wrote {args.write_manifest}")
        return 0
    if args.manifest:
        entries = parse_corpus_document(json.loads(args.manifest.read_text()))
        profile = args.manifest.stem
    else:
        entries, profile = corpus(args.profile), args.profile
    report = run_corpus(entries, profile, jobs=args.jobs, cap=args.cap,
                        iso_budget=args.budget_iso, data_dir=args.reference_dir,
                        slow=args.slow, aut_budget=args.budget_aut)
    if args.report_dir:
        from .report import write_report_dir

        for p in write_report_dir(report, args.report_dir):
            log.info("wrote %s", p)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        for e in report.entries:
            flag = "ok " if e.agree and e.expected_ok and not e.invariant_failures else "BAD"
            extra = f"  [{'; '.join(e.invariant_failures)}]" if e.invariant_failures else ""
            print(f"{flag} {e.index:3d} {e.name:28s} |G|={e.order:<5d} inv={e.involution_count:<3d}"
                  f" {e.verdict}{extra}{('  ' + e.error) if e.error else ''}")
        for name, ok in report.extra_checks.items():
            print(f"{'ok ' if ok else 'BAD'} {name}")
        print(f"{len(report.entries)} groups, {report.agreements} agreements, "
              f"{report.disagreements} disagreements, "
              f"{report.invariant_failures} invariant failures")
    return exit_code(report)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    handler = {"analyze": cmd_analyze, "make": cmd_make, "corpus": cmd_corpus}[args.command]
    try:
        return handler(args)
    except PyramidalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
