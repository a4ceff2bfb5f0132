"""Command line entry point.

Exit codes: 0 success, 1 input error, 2 hypothesis not met,
3 theorem-violation artifact produced (or a certificate failed validation).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import campaign
from .decomposition import DEFAULT_PATH_BUDGET, grow_mpss
from .errors import GraphError, HypothesisNotMet, TheoremContradicted
from .families import FAMILIES, generate
from .formats import export_dot, read_edge_list, serialize_edge_list, write_edge_list
from .report import analyze, format_report_text, serialize_report
from .validate import validate_file
from .witness import LOWEST_INDEX, PARENT_RULES, constructive_noncritical, two_noncritical

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_VIOLATION = 0, 1, 2, 3


def _n_range(text: str) -> tuple[int, int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    value = int(text)
    return value, value


def _archive_contradiction(exc: TheoremContradicted, out: str | None) -> None:
    print(f"theorem contradicted: {exc.reason}", file=sys.stderr)
    if exc.digraph is None:
        return
    comments = [f"reason: {exc.reason}", f"detail: {json.dumps(exc.detail, sort_keys=True)}"]
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        write_edge_list(exc.digraph, path, comments)
        print(f"instance archived to {path}", file=sys.stderr)
    else:
        sys.stderr.write(serialize_edge_list(exc.digraph, comments))


def cmd_analyze(args) -> int:
    D = read_edge_list(args.path)
    report = analyze(D, oracle_only=args.oracle_only, witness=not args.no_witness, parent_rule=args.parent_rule, budget=args.budget)
    text = serialize_report(report) if args.format == "structured" else format_report_text(report)
    _emit(text, args.out)
    return EXIT_OK


def cmd_witness(args) -> int:
    D = read_edge_list(args.path)
    finder = two_noncritical if args.two else constructive_noncritical
    cert = finder(D, args.parent_rule, args.budget)
    if args.format == "structured":
        _emit(json.dumps(cert.to_dict(), indent=2) + "\n", args.out)
    else:
        _emit(f"{' '.join(map(str, cert.vertices))}  ({cert.case_tag.value}, validated={cert.validated})\n", args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    D = read_edge_list(args.path)
    cert = grow_mpss(D, args.seed_vertex, args.budget)
    _emit(json.dumps(cert.to_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    D, spec = generate(args.family, args.n)
    text = serialize_edge_list(D, [f"family {args.family}, n={args.n}"])
    _emit(text, args.out)
    if args.dot:
        Path(args.dot).write_text(export_dot(D, spec, name=args.family), encoding="utf-8")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.mode == "exhaustive":
        result = campaign.run_exhaustive(
            args.n, checks=args.checks.split(","), workers=args.workers, seed=args.seed, parent_rule=args.parent_rule
        )
    elif args.mode == "random":
        result = campaign.run_random(
            _n_range(args.n_range), args.samples, args.seed, target=args.target, workers=args.workers, parent_rule=args.parent_rule
        )
    else:
        result = campaign.run_lemma1_random(args.n, args.samples, args.seed, workers=args.workers)
    if args.out:
        result.archive(args.out)
    sys.stdout.write(result.to_json())
    print(
        f"{result.verdict}: {result.instances_checked} instances, {len(result.violations)} violations, "
        f"{len(result.anomalies)} archived anomalies",
        file=sys.stderr,
    )
    return EXIT_OK if result.verdict == "PASS" else EXIT_VIOLATION


def cmd_validate(args) -> int:
    failed = 0
    for path in args.paths:
        problems = validate_file(path)
        status = "ok" if not problems else "FAIL"
        print(f"{status} {path}")
        for problem in problems:
            print(f"  {problem}")
        failed += bool(problems)
    return EXIT_OK if not failed else EXIT_VIOLATION


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="noncritical", description="Noncritical vertices of strongly connected digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out_help="write output here instead of stdout"):
        p.add_argument("--out", help=out_help)
        p.add_argument("--parent-rule", choices=PARENT_RULES, default=LOWEST_INDEX)
        p.add_argument("--budget", type=int, default=DEFAULT_PATH_BUDGET, help="path enumeration budget")
        p.add_argument("--archive", help="edge-list file for an instance that contradicts the theorem")

    p = sub.add_parser("analyze", help="full report for an edge-list file")
    p.add_argument("path")
    p.add_argument("--oracle-only", action="store_true")
    p.add_argument("--no-witness", action="store_true")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("witness", help="constructive noncritical vertex (or pair with --two)")
    p.add_argument("path")
    p.add_argument("--two", action="store_true")
    p.add_argument("--format", choices=("text", "structured"), default="structured")
    common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("decompose", help="grow and certify an MPSS")
    p.add_argument("path")
    p.add_argument("--seed-vertex", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="write an extremal family member as an edge list")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--dot", help="also write Graphviz text here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="exhaustive or randomized verification campaign")
    p.add_argument("--mode", choices=("exhaustive", "random", "lemma1"), default="exhaustive")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--n-range", default="6..12")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--target", choices=("Thm1", "Cor2"), default="Thm1")
    p.add_argument("--checks", default=",".join(campaign.ALL_CHECKS))
    p.add_argument("--workers", type=int, default=1)
    common(p, out_help="directory for campaign.json and archived instances")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("validate", help="independently re-check serialized reports")
    p.add_argument("paths", nargs="+")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HypothesisNotMet as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except TheoremContradicted as exc:
        _archive_contradiction(exc, getattr(args, "archive", None))
        return EXIT_VIOLATION
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
