"""Command-line interface.

Subcommands: check, generate, rank, classify, laws, eval.  Exit codes:
0 means success (axioms hold / laws hold / value computed), 1 means the
tool ran fine but found a violation or counterexample, 2 means the run
itself failed (usage, format or validation error).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .core import InclusionMode
from .construction import generate_from_subbase
from .errors import PftError
from .expr import evaluate, format_expr, parse
from .familydoc import family_to_doc, load_family, save_family, set_values
from .families import Family
from .laws import (
    CATALOG_ORDER,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    Exhaustive,
    Randomized,
    SearchDomain,
    run_catalog,
)
from .relations import partition_by_rho, rank_of
from .topology import ViolationKind, check_axioms

REPORT_FORMAT = "1"


def _fmt_set(s) -> str:
    return " ".join(
        f"{label}:({t.mu},{t.rho},{t.sigma})" for label, t in zip(s.universe, s.triples)
    )


def _read_family(path: str, strict: bool = True) -> Family:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise PftError(f"cannot read {path}: {e.strerror or e}") from None
    return load_family(data, strict=strict)


def _signed_refusal(t) -> str:
    """Refusal as a signed decimal; negative for out-of-contract triples."""
    from .core import SCALE

    value = SCALE - t.mu.raw - t.rho.raw - t.sigma.raw
    sign = "-" if value < 0 else ""
    digits = f"{abs(value) % SCALE:04d}"
    while len(digits) > 2 and digits.endswith("0"):
        digits = digits[:-1]
    return f"{sign}{abs(value) // SCALE}.{digits}"


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _witness_doc(witness) -> dict:
    universe = witness.sets[0].universe if witness.sets else None
    return {
        "clause": witness.clause,
        "detail": witness.detail,
        "universe": list(universe.elements) if universe else [],
        "sets": [set_values(s) for s in witness.sets],
    }


# ----------------------------------------------------------------- check

def _cmd_check(args) -> int:
    family = _read_family(args.file, strict=not args.lenient)
    report = check_axioms(family)
    if args.figure:
        from .figures import save_family_figure

        save_family_figure(family, args.figure, title=f"family from {args.file}")
    if args.json:
        _emit_json({
            "report_version": REPORT_FORMAT,
            "command": "check",
            "file": args.file,
            "mode": args.mode,
            "is_topology": report.is_topology,
            "violations": [
                {
                    "kind": v.kind.value,
                    "members": list(v.members),
                    "escaped": set_values(v.escaped) if v.escaped is not None else None,
                }
                for v in report.violations
            ],
        })
        return 0 if report.is_topology else 1
    print(f"pftopo check report (format {REPORT_FORMAT})")
    universe = ", ".join(family.universe)
    print(f"family: {len(family)} members over universe ({universe})")
    if report.is_topology:
        print("verdict: topology axioms hold")
        return 0
    print(f"verdict: NOT a topology ({len(report.violations)} violations)")
    for v in report.violations:
        if v.kind is ViolationKind.MISSING_FULL:
            print("  missing member: the full set I")
        elif v.kind is ViolationKind.MISSING_NULL:
            print("  missing member: the null set O")
        elif v.kind is ViolationKind.UNION_ESCAPE:
            print(f"  union escape: {v.members[0]} | {v.members[1]} -> "
                  f"{_fmt_set(v.escaped)} is not a member")
        else:
            print(f"  intersection escape: {v.members[0]} & {v.members[1]} -> "
                  f"{_fmt_set(v.escaped)} is not a member")
    return 1


# -------------------------------------------------------------- generate

def _cmd_generate(args) -> int:
    family = _read_family(args.file, strict=not args.lenient)
    names = [n.strip() for n in args.subbase.split(",") if n.strip()]
    if not names:
        raise PftError("--subbase needs at least one member name")
    subbase = Family.build(family.universe, ((n, family.get(n)) for n in names))
    trace = generate_from_subbase(subbase, require_minimal=args.require_minimal)
    rank = rank_of(trace.topology)
    summary = f"|T| = {len(trace.topology)}, rank = {rank}"
    payload = save_family(trace.topology)
    if args.figure:
        from .figures import save_family_figure

        save_family_figure(trace.topology, args.figure,
                           partition=partition_by_rho(trace.topology),
                           title=f"topology from {', '.join(names)}")
    if args.json:
        _emit_json({
            "report_version": REPORT_FORMAT,
            "command": "generate",
            "file": args.file,
            "subbase": names,
            "size": len(trace.topology),
            "rank": rank,
            "base": [m.name for m in trace.base],
            "provenance": {name: format_expr(e) for name, e in trace.provenance},
            "topology": family_to_doc(trace.topology),
        })
        if args.output:
            Path(args.output).write_bytes(payload)
        return 0
    if args.output:
        Path(args.output).write_bytes(payload)
        print(summary)
    else:
        sys.stdout.write(payload.decode("utf-8"))
        print(summary, file=sys.stderr)
    return 0


# ------------------------------------------------------------ rank/classify

def _cmd_rank(args) -> int:
    family = _read_family(args.file, strict=not args.lenient)
    rank = rank_of(family)
    if args.json:
        _emit_json({
            "report_version": REPORT_FORMAT,
            "command": "rank",
            "file": args.file,
            "rank": rank,
        })
        return 0
    print(f"rank = {rank}")
    return 0


def _cmd_classify(args) -> int:
    family = _read_family(args.file, strict=not args.lenient)
    partition = partition_by_rho(family)
    if args.figure:
        from .figures import save_family_figure

        save_family_figure(family, args.figure, partition=partition,
                           title=f"neutral classes of {args.file}")
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["class", "rho", "member"])
            for i, cls in enumerate(partition.classes, start=1):
                key = "/".join(str(g) for g in cls.key)
                for name in cls.members:
                    writer.writerow([i, key, name])
    if args.json:
        _emit_json({
            "report_version": REPORT_FORMAT,
            "command": "classify",
            "file": args.file,
            "rank": partition.rank,
            "classes": [
                {"rho": [str(g) for g in cls.key], "members": list(cls.members)}
                for cls in partition.classes
            ],
        })
        return 0
    print(f"pftopo classify report (format {REPORT_FORMAT})")
    print(f"rank = {partition.rank}")
    for i, cls in enumerate(partition.classes, start=1):
        key = ", ".join(str(g) for g in cls.key)
        print(f"class {i}: rho = ({key}): {', '.join(cls.members)}")
    return 0


# ------------------------------------------------------------------- laws

def _cmd_laws(args) -> int:
    mode = InclusionMode(args.mode)
    law_ids = (args.law,) if args.law else None
    domain = None
    if (args.step or args.universe_size or args.seed is not None
            or args.samples is not None):
        if args.seed is not None or args.samples is not None:
            strategy = Randomized(args.samples if args.samples is not None else DEFAULT_SAMPLES,
                                  args.seed if args.seed is not None else DEFAULT_SEED)
        else:
            strategy = Exhaustive()
        domain = SearchDomain(args.universe_size or 1, args.step or "0.25", 1, strategy)
    verdicts = run_catalog(mode, law_ids, domain)

    if args.figure:
        from .figures import save_laws_figure

        save_laws_figure(verdicts, args.figure, title=f"law catalog ({mode.value} mode)")
    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["law", "domain", "clause", "outcome", "advisory",
                             "evaluated", "detail"])
            for v in verdicts:
                for c in v.clauses:
                    writer.writerow([
                        v.law, c.domain, c.clause,
                        "Holds" if c.holds else "Counterexample",
                        "yes" if c.advisory else "no",
                        c.evaluated,
                        c.witness.detail if c.witness else "",
                    ])

    failed = any(not v.holds for v in verdicts)
    if args.json:
        _emit_json({
            "report_version": REPORT_FORMAT,
            "command": "laws",
            "mode": mode.value,
            "verdicts": [
                {
                    "law": v.law,
                    "title": v.title,
                    "outcome": v.outcome,
                    "holds": v.holds,
                    "vacuous": v.vacuous,
                    "instances": v.instances,
                    "domains": [
                        {"domain": label, "instances": count}
                        for label, count in v.domain_counts
                    ],
                    "clauses": [
                        {
                            "clause": c.clause,
                            "description": c.description,
                            "domain": c.domain,
                            "holds": c.holds,
                            "advisory": c.advisory,
                            "vacuous": c.vacuous,
                            "evaluated": c.evaluated,
                            "witness": _witness_doc(c.witness) if c.witness else None,
                        }
                        for c in v.clauses
                    ],
                }
                for v in verdicts
            ],
        })
        return 1 if failed else 0

    print(f"pftopo laws report (format {REPORT_FORMAT}, {mode.value} mode)")
    for v in verdicts:
        for label, count in v.domain_counts:
            domain_clauses = [c for c in v.clauses if c.domain == label]
            ok = all(c.holds for c in domain_clauses if not c.advisory)
            line = f"{v.law} {'Holds' if ok else 'Counterexample'} ({count} instances)"
            if all(c.vacuous for c in domain_clauses):
                line += " [vacuous]"
            line += f" [{label}]"
            print(line)
            if not all(c.holds for c in domain_clauses):
                for c in domain_clauses:
                    state = "Holds" if c.holds else "Counterexample"
                    tag = " [advisory]" if c.advisory else ""
                    detail = f"  clause {c.clause}{tag}: {state} ({c.evaluated} checked)"
                    if c.witness is not None:
                        sets = "; ".join(_fmt_set(s) for s in c.witness.sets)
                        detail += f" witness: {sets}"
                        if c.witness.detail:
                            detail += f" ({c.witness.detail})"
                    print(detail)
    return 1 if failed else 0


# ------------------------------------------------------------------- eval

def _cmd_eval(args) -> int:
    family = _read_family(args.file, strict=not args.lenient)
    ast = parse(args.expr)
    result = evaluate(ast, family)
    if args.figure:
        from .figures import save_family_figure

        save_family_figure(
            Family.build(family.universe, (("result", result),)),
            args.figure, title=format_expr(ast),
        )
    if args.json:
        _emit_json({
            "report_version": REPORT_FORMAT,
            "command": "eval",
            "file": args.file,
            "expr": args.expr,
            "canonical": format_expr(ast),
            "result": {
                "universe": list(family.universe.elements),
                "values": set_values(result),
            },
        })
        return 0
    print(f"pftopo eval report (format {REPORT_FORMAT})")
    print(f"expression: {format_expr(ast)}")
    for label, t in zip(result.universe, result.triples):
        print(f"{label}: mu={t.mu} rho={t.rho} sigma={t.sigma} refusal={_signed_refusal(t)}")
    return 0


# ------------------------------------------------------------------ parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pftopo",
        description="Picture fuzzy set algebra, topology construction and law checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, figure=True, lenient=True):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        if figure:
            p.add_argument("--figure", metavar="PATH",
                           help="render a matplotlib figure to this file")
        if lenient:
            p.add_argument("--lenient", action="store_true",
                           help="accept sets whose grade sum exceeds 1 "
                                "(for analysing published out-of-contract listings)")

    p_check = sub.add_parser("check", help="verify the topology axioms of a family file")
    p_check.add_argument("file")
    p_check.add_argument("--mode", choices=["literal", "reversed"], default="literal",
                         help="inclusion mode recorded in the report")
    add_common(p_check)
    p_check.set_defaults(handler=_cmd_check)

    p_gen = sub.add_parser("generate", help="generate a topology from named sub-base members")
    p_gen.add_argument("file")
    p_gen.add_argument("--subbase", required=True, metavar="NAME[,NAME...]",
                       help="comma-separated member names to use as the sub-base")
    p_gen.add_argument("--require-minimal", action="store_true",
                       help="reject sub-bases failing the minimality condition")
    p_gen.add_argument("-o", "--output", metavar="PATH", help="write the topology here")
    add_common(p_gen)
    p_gen.set_defaults(handler=_cmd_generate)

    p_rank = sub.add_parser("rank", help="rank (number of neutral classes) of a family")
    p_rank.add_argument("file")
    add_common(p_rank, figure=False)
    p_rank.set_defaults(handler=_cmd_rank)

    p_cls = sub.add_parser("classify", help="partition a family into neutral classes")
    p_cls.add_argument("file")
    p_cls.add_argument("--csv", metavar="PATH", help="write the partition as CSV")
    add_common(p_cls)
    p_cls.set_defaults(handler=_cmd_classify)

    p_laws = sub.add_parser("laws", help="check the law catalog over a search domain")
    p_laws.add_argument("--law", choices=list(CATALOG_ORDER), help="check a single law")
    p_laws.add_argument("--step", choices=["0.25", "0.10", "0.05"],
                        help="grid step (default 0.25)")
    p_laws.add_argument("--universe-size", type=int, choices=[1, 2, 3],
                        help="universe size (default 1)")
    p_laws.add_argument("--mode", choices=["literal", "reversed"], default="literal")
    p_laws.add_argument("--seed", type=int, help="switch to randomized search with this seed")
    p_laws.add_argument("--samples", type=int,
                        help=f"randomized sample count (default {DEFAULT_SAMPLES})")
    p_laws.add_argument("--csv", metavar="PATH", help="write clause outcomes as CSV")
    add_common(p_laws, lenient=False)
    p_laws.set_defaults(handler=_cmd_laws)

    p_eval = sub.add_parser("eval", help="evaluate a set expression against a family file")
    p_eval.add_argument("file")
    p_eval.add_argument("--expr", required=True, help="expression over member names, I, O")
    add_common(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.handler(args)
    except PftError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
