"""Command-line front end.

Subcommands:

    check            axiom suite, lattice laws, oracle cross-check, classify
    eval             evaluate a formula under explicit atom assignments
    infer            materialize the MP or MT table for a whole carrier
    verify-examples  recompute the eight reference inferences
    hasse            export the carrier's cover graph (DOT or JSON)

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
All output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .axioms import (
    Axiom,
    check_all_axioms,
    check_involution,
    check_lattice_laws,
    classify,
)
from .discrepancies import STATEMENT_NOTES
from .errors import DomainError, ParseError, UnboundAtomError
from .formula import Valuation, evaluate, parse
from .inference import RuleId, inference_table, verify_examples
from .lattice import AlgebraConfig, canonical, default_labels
from .oracle import build_covers, cross_check_ops, to_dot, to_json_dict, verify_lattice


def _algebra_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--n", type=int, default=4, help="maximum hedge grade (default 4)")
    parent.add_argument(
        "--qlia",
        action="store_true",
        help="use the quasi kind (one non-comparable pair)",
    )
    parent.add_argument(
        "--noncomp",
        type=int,
        default=None,
        metavar="I",
        help="non-comparable index (required with --qlia)",
    )
    parent.add_argument(
        "--labels",
        default=None,
        help="comma-separated hedge names, weakest first (n+1 of them)",
    )
    return parent


def _build_algebra(args) -> AlgebraConfig:
    if args.qlia and args.noncomp is None:
        raise DomainError("--qlia requires --noncomp")
    if not args.qlia and args.noncomp is not None:
        raise DomainError("--noncomp only makes sense with --qlia")
    if args.labels is not None:
        labels = tuple(name.strip() for name in args.labels.split(","))
    else:
        labels = default_labels(args.n)
    return AlgebraConfig(
        n=args.n,
        noncomparable=args.noncomp if args.qlia else None,
        labels=labels,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lingtruth",
        description="linguistic truth-valued propositional logic toolkit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    algebra = _algebra_parent()

    p_check = sub.add_parser(
        "check",
        parents=[algebra],
        help="run the axiom suite and oracle cross-check",
    )
    p_check.add_argument("--format", choices=["text", "json"], default="text")
    p_check.add_argument(
        "--max-witnesses",
        type=int,
        default=10,
        help="counterexamples kept per report entry (default 10)",
    )

    p_eval = sub.add_parser(
        "eval",
        parents=[algebra],
        help="evaluate a formula, e.g. \"(P & (P -> Q)) -> Q\"",
    )
    p_eval.add_argument("formula", help="formula text")
    p_eval.add_argument(
        "-a",
        "--assign",
        action="append",
        default=[],
        metavar="NAME=v3T",
        help="atom assignment (repeatable)",
    )
    p_eval.add_argument("--format", choices=["text", "json"], default="text")

    p_infer = sub.add_parser(
        "infer",
        parents=[algebra],
        help="materialize an inference-rule table over the carrier",
    )
    p_infer.add_argument("--rule", choices=["mp", "mt"], required=True)
    p_infer.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_infer.add_argument(
        "--diff-only",
        action="store_true",
        help="emit only rows where direct and closed-form values disagree",
    )

    p_examples = sub.add_parser(
        "verify-examples",
        help="recompute the eight reference inferences (n=4; quasi index 2)",
    )
    p_examples.add_argument("--format", choices=["text", "json"], default="text")

    p_hasse = sub.add_parser(
        "hasse",
        parents=[algebra],
        help="export the carrier's cover graph",
    )
    p_hasse.add_argument("--format", choices=["dot", "json"], default="dot")

    p_notes = sub.add_parser(
        "discrepancies",
        help="print the machine-readable case-table correction notes",
    )
    p_notes.set_defaults(format="json")

    return parser


# ----------------------------------------------------------------------
# Commands


_AXIOM_ORDER = [Axiom.I1, Axiom.I2, Axiom.I3, Axiom.I4, Axiom.I5, Axiom.I6, Axiom.I7]


def _axiom_headline(kind: str, results) -> str:
    held = [a.value for a in _AXIOM_ORDER if results[a].holds]
    failed = [a.value for a in _AXIOM_ORDER if not results[a].holds]
    if not failed:
        return f"{kind}: I1..I7 hold"
    if held == [f"I{i}" for i in range(1, len(held) + 1)]:
        held_text = f"I1..I{len(held)}" if len(held) > 1 else "I1"
    else:
        held_text = ",".join(held)
    return f"{kind}: {held_text} hold; {','.join(failed)} fail"


def cmd_check(args) -> int:
    config = _build_algebra(args)
    cap = args.max_witnesses
    axioms = check_all_axioms(config, max_witnesses=cap)
    laws = check_lattice_laws(config, max_witnesses=cap)
    involution = check_involution(config, max_witnesses=cap)
    classification = classify(config)
    lattice_report = verify_lattice(config)
    oracle_report = cross_check_ops(config)
    requested = "QLIA" if args.qlia else "LIA"
    ok = classification.value == requested and oracle_report.clean

    if args.format == "json":
        payload = {
            "n": config.n,
            "noncomparable": config.noncomparable,
            "requested": requested,
            "classification": classification.value,
            "axioms": [axioms[a].to_dict() for a in _AXIOM_ORDER],
            "laws": [law.to_dict() for law in laws],
            "involution": involution.to_dict(),
            "lattice": lattice_report.to_dict(),
            "oracle": oracle_report.to_dict(),
            "ok": ok,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(_axiom_headline(classification.value, axioms))
        law_failures = [law.name for law in laws if not law.holds]
        print(
            "lattice laws: all hold"
            if not law_failures
            else f"lattice laws: {','.join(law_failures)} fail"
        )
        print(f"involution: {'holds' if involution.holds else 'fails'}")
        print(
            "bounds: every pair has a unique join and meet"
            if lattice_report.is_lattice
            else f"bounds: {len(lattice_report.missing_joins)} join / "
            f"{len(lattice_report.missing_meets)} meet defects"
        )
        print(
            "oracle: closed forms agree on every pair"
            if oracle_report.clean
            else f"oracle: {len(oracle_report.implemented)} mismatches"
        )
        if oracle_report.stated:
            print(
                f"stated-form deviations vs oracle: {len(oracle_report.stated)} "
                "pairs (see discrepancies)"
            )
        print(f"classification: {classification.value} (requested {requested})")
    return 0 if ok else 1


def _parse_assignments(config, pairs):
    assignment = {}
    for item in pairs:
        name, sep, value_text = item.partition("=")
        if not sep or not name:
            raise DomainError(f"bad assignment {item!r}, expected NAME=v3T")
        assignment[name.strip()] = config.parse_value(value_text)
    return assignment


def cmd_eval(args) -> int:
    config = _build_algebra(args)
    node = parse(args.formula)
    valuation = Valuation(config, _parse_assignments(config, args.assign))
    value = evaluate(node, valuation)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "formula": str(node),
                    "value": canonical(value),
                    "label": config.label(value),
                }
            )
        )
    else:
        print(config.describe(value))
    return 0


def _rows_csv(rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["p", "q", "rule", "direct", "closed", "branch", "agree"])
    for row in rows:
        d = row.to_dict()
        writer.writerow(
            [d["p"], d["q"], d["rule"], d["direct"], d["closed"], d["branch"],
             "true" if d["agree"] else "false"]
        )
    return out.getvalue()


def _rows_grid(config, rows, rule) -> str:
    values = config.values()
    closed = {(row.p, row.q): row for row in rows}
    width = max(len(canonical(v)) for v in values) + 2
    lines = [f"{rule.value} table, {config.kind} n={config.n}"
             f"{'' if config.noncomparable is None else f' i={config.noncomparable}'}"
             " (rows e(P), columns e(Q))"]
    header = " " * width + "".join(canonical(q).rjust(width) for q in values)
    lines.append(header)
    for p in values:
        cells = []
        for q in values:
            row = closed[(p, q)]
            mark = "" if row.agree else "*"
            cells.append((canonical(row.closed) + mark).rjust(width))
        lines.append(canonical(p).rjust(width) + "".join(cells))
    disagreements = sum(1 for row in rows if not row.agree)
    lines.append(
        "all rows: direct evaluation matches the closed form"
        if disagreements == 0
        else f"*{disagreements} rows disagree with direct evaluation"
    )
    if config.labels is not None:
        legend = ", ".join(f"v{g}={name}" for g, name in enumerate(config.labels))
        lines.append(f"hedges: {legend}")
    return "\n".join(lines)


def cmd_infer(args) -> int:
    config = _build_algebra(args)
    rule = RuleId.MP if args.rule == "mp" else RuleId.MT
    rows = inference_table(config, rule)
    if args.diff_only:
        rows = [row for row in rows if not row.agree]
        if args.format == "json":
            print(json.dumps([row.to_dict() for row in rows], indent=2))
        elif args.format == "csv":
            sys.stdout.write(_rows_csv(rows))
        else:
            for row in rows:
                d = row.to_dict()
                print(f"{d['p']} {d['q']} {d['rule']} direct={d['direct']} "
                      f"closed={d['closed']} branch={d['branch']}")
            print(f"{len(rows)} disagreements")
        return 0 if not rows else 1
    if args.format == "json":
        print(json.dumps([row.to_dict() for row in rows], indent=2))
    elif args.format == "csv":
        sys.stdout.write(_rows_csv(rows))
    else:
        print(_rows_grid(config, rows, rule))
    return 0


def cmd_verify_examples(args) -> int:
    report = verify_examples()
    if args.format == "json":
        print(json.dumps(report.to_dicts(), indent=2))
    else:
        for check in report.checks:
            d = check.to_dict()
            status = "pass" if check.passed else "FAIL"
            print(
                f"example {d['example']} [{d['kind']}] P={d['p']} Q={d['q']}: "
                f"MP={d['mp']} (expected {d['expected_mp']}), "
                f"MT={d['mt']} (expected {d['expected_mt']})  {status}"
            )
        passed = sum(1 for c in report.checks if c.passed)
        print(f"{passed}/{len(report.checks)} examples pass")
    return 0 if report.all_passed else 1


def cmd_hasse(args) -> int:
    config = _build_algebra(args)
    graph = build_covers(config)
    if args.format == "json":
        print(json.dumps(to_json_dict(graph), indent=2))
    else:
        print(to_dot(graph))
    return 0


def cmd_discrepancies(args) -> int:
    print(json.dumps([note.to_dict() for note in STATEMENT_NOTES], indent=2))
    return 0


_COMMANDS = {
    "check": cmd_check,
    "eval": cmd_eval,
    "infer": cmd_infer,
    "verify-examples": cmd_verify_examples,
    "hasse": cmd_hasse,
    "discrepancies": cmd_discrepancies,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, ParseError, UnboundAtomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
