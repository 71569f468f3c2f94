"""Command-line surface for the ring laboratory.

Exit codes are stable: 0 success, 2 axiom/validation failure, 3 parse
error, 4 equivalence breach (an implementation defect surfaced, suitable
as a CI build failure), 5 cap or I/O error. Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .constructions import default_corpus, gf4, showcase_ring, star_ring, star_ring_from_spec, zn
from .core import is_abelian_ring
from .errors import (
    AxiomViolation,
    CapExceeded,
    EquivalenceBreach,
    IdentityEqualsZero,
    IoFailure,
    NotApplicable,
    ReplayMismatch,
    RinglabError,
)
from .predicates import (
    _BOOL_FIELDS,
    is_pi_regular,
    is_strongly_pi_regular,
    is_strongly_star_clean,
    projection_tests_commuting,
    projection_tests_star_abelian,
    property_report,
    radical_quotient_equivalence,
    strongly_pi_star_regular_conditions,
)
from .search import (
    SearchTask,
    load_atlas,
    matrix_ring_scan,
    parse_profile,
    persist_atlas,
    run_profile_search,
)
from .star import StarRing

EXIT_OK = 0
EXIT_AXIOM = 2
EXIT_PARSE = 3
EXIT_BREACH = 4
EXIT_CAP_IO = 5


def _load_spec(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("spec file must hold a JSON object")
    return doc


def _emit(args, payload: dict, human: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(human)


def cmd_validate(args) -> int:
    try:
        doc = _load_spec(args.spec)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    has_involution = "involution" in doc
    try:
        if has_involution:
            s = star_ring_from_spec(doc, args.cap)
            label, order, inv_label = s.ring.label, s.order, s.inv.label
        else:
            from .constructions import build_expr, parse_ring_expr

            ring_doc = doc.get("ring", doc)
            ring = build_expr(parse_ring_expr(ring_doc), args.cap)
            label, order, inv_label = ring.label, ring.order, None
    except (AxiomViolation, IdentityEqualsZero, NotApplicable) as exc:
        detail = {"valid": False, "error": str(exc)}
        if isinstance(exc, AxiomViolation):
            detail["axiom"] = exc.axiom
            detail["witness"] = list(exc.witness)
        _emit(args, detail, f"invalid: {exc}")
        return EXIT_AXIOM
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    except (ValueError, KeyError, TypeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    payload = {"valid": True, "label": label, "involution": inv_label, "order": order}
    if has_involution:
        human = (
            f"valid: {label} with involution {inv_label} (order {order})\n"
            "ring axioms: ok\ninvolution axioms: ok"
        )
    else:
        human = f"valid: {label} (order {order})\nring axioms: ok\nno involution given"
    _emit(args, payload, human)
    return EXIT_OK


def _check_star_ring(args, s: StarRing) -> int:
    report = property_report(s)
    wanted = _BOOL_FIELDS if args.properties == "all" else tuple(
        p.strip() for p in args.properties.split(",") if p.strip()
    )
    for name in wanted:
        if name not in report.values:
            print(f"parse error: unknown property {name!r}", file=sys.stderr)
            return EXIT_PARSE
    doc = report.to_dict()
    doc["values"] = {k: doc["values"][k] for k in wanted}
    human_lines = [
        f"ring:        {report.label}",
        f"involution:  {report.involution}",
        f"order:       {report.order}",
    ]
    for name in wanted:
        human_lines.append(f"{name:<28} {str(report.values[name]).lower()}")
        detail = report.details.get(name)
        if isinstance(detail, list) and detail:
            human_lines.append(f"{'':<4}counterexample: {detail}")
        elif isinstance(detail, int) and not isinstance(detail, bool):
            human_lines.append(f"{'':<4}counterexample: {detail}")
        elif isinstance(detail, dict) and "failing" in detail:
            human_lines.append(f"{'':<4}failing element: {detail['failing']}")
    _emit(args, doc, "\n".join(human_lines))
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        doc = _load_spec(args.spec)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        s = star_ring_from_spec(doc, args.cap)
    except (AxiomViolation, IdentityEqualsZero, NotApplicable) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    except (ValueError, KeyError, TypeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return _check_star_ring(args, s)


def _corpus_for(args) -> list[StarRing]:
    if args.corpus == "default":
        return default_corpus(args.cap)
    with open(args.corpus, "r", encoding="utf-8") as fh:
        docs = json.load(fh)
    if not isinstance(docs, list):
        raise ValueError("corpus file must hold a JSON list")
    return [star_ring_from_spec(d, args.cap) for d in docs]


_SUITES = (
    "characterizations",
    "criteria_star_abelian",
    "criteria_commuting",
    "criteria_cross",
    "radical_reduction",
    "clean_implication",
    "strong_implies_pi",
    "abelian_pi_strong",
    "projection_chain",
)


def _equivalence_row(s: StarRing) -> dict:
    """One agreement row; every entry must come out True."""
    conds = strongly_pi_star_regular_conditions(s)
    sa = projection_tests_star_abelian(s)
    cm = projection_tests_commuting(s)
    spsr = conds[0]
    lhs, rhs = radical_quotient_equivalence(s)
    clean = is_strongly_star_clean(s).holds
    pi = is_pi_regular(s.ring).holds
    strong_pi = is_strongly_pi_regular(s.ring).holds
    abelian = is_abelian_ring(s.ring)[0]
    idem_proj = sa[2]
    row = {
        "characterizations": len(set(conds)) == 1,
        "criteria_star_abelian": len(set(sa)) == 1,
        "criteria_commuting": len(set(cm)) == 1,
        "criteria_cross": sa == cm,
        "radical_reduction": lhs == rhs,
        "clean_implication": (not spsr) or clean,
        "strong_implies_pi": (not strong_pi) or pi,
        "abelian_pi_strong": (not (abelian and pi)) or strong_pi,
        "projection_chain": ((not spsr) or idem_proj) and ((not idem_proj) or abelian),
    }
    return row


def cmd_equivalences(args) -> int:
    try:
        corpus = _corpus_for(args)
    except (OSError, ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AxiomViolation, IdentityEqualsZero, NotApplicable) as exc:
        print(f"invalid corpus entry: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    rows = []
    breaches = []
    for s in corpus:
        try:
            row = _equivalence_row(s)
        except EquivalenceBreach as exc:
            print(f"equivalence breach: {exc}", file=sys.stderr)
            return EXIT_BREACH
        rows.append((s, row))
        for suite, ok in row.items():
            if not ok:
                breaches.append((s.label, suite))
    name_width = max(len(s.label) for s, _ in rows) + 2
    lines = [
        f"{'ring':<{name_width}}" + " ".join(f"{suite:>22}" for suite in _SUITES)
    ]
    for s, row in rows:
        lines.append(
            f"{s.label:<{name_width}}"
            + " ".join(f"{'ok' if row[suite] else 'BREACH':>22}" for suite in _SUITES)
        )
    payload = {
        "rings": [
            {"label": s.label, "suites": row} for s, row in rows
        ],
        "agreement": not breaches,
    }
    _emit(args, payload, "\n".join(lines))
    if breaches:
        for label, suite in breaches:
            print(f"breach: {suite} on {label}", file=sys.stderr)
        return EXIT_BREACH
    return EXIT_OK


def cmd_example6(args) -> int:
    s = showcase_ring(args.cap)
    return _check_star_ring(args, s)


def _write_records(args, records) -> int:
    lines = [r.to_json_line() for r in records]
    if args.out:
        persist_atlas(records, args.out)
        print(f"wrote {len(records)} records to {args.out}")
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.task:
        try:
            task = SearchTask.from_dict(_load_spec(args.task))
        except (OSError, ValueError, json.JSONDecodeError, KeyError) as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    else:
        task = SearchTask(
            corpus=args.corpus,
            profile=parse_profile(args.profile),
            cap=args.cap,
            stamp=args.stamp,
        )
    try:
        records = run_profile_search(task)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EquivalenceBreach as exc:
        print(f"equivalence breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (CapExceeded, IoFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    return _write_records(args, records)


def _parse_base(text: str) -> StarRing:
    """Base syntax: zn:N[:identity] or gf4[:identity|frobenius]."""
    parts = text.split(":")
    if parts[0] == "zn":
        if len(parts) < 2:
            raise ValueError("zn base needs a modulus, e.g. zn:4")
        ring = zn(int(parts[1]))
        name = parts[2] if len(parts) > 2 else "identity"
    elif parts[0] == "gf4":
        ring = gf4()
        name = parts[1] if len(parts) > 1 else "identity"
    else:
        raise ValueError(f"unknown base {text!r}; use zn:N or gf4")
    return star_ring(ring, name)


def cmd_problem10(args) -> int:
    try:
        bases = [_parse_base(b.strip()) for b in args.base.split(",") if b.strip()]
        if not bases:
            raise ValueError("no bases given")
    except (ValueError, NotApplicable) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        records = matrix_ring_scan(bases, k=args.k, cap=args.cap, stamp=args.stamp)
    except EquivalenceBreach as exc:
        print(f"equivalence breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (CapExceeded, IoFailure, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    if args.format == "human" and not args.out:
        for r in records:
            flag = r.report.values["strongly_pi_star_regular"]
            print(
                f"{r.label} with {r.involution}: "
                f"strongly_pi_star_regular={str(flag).lower()}"
            )
        return EXIT_OK
    return _write_records(args, records)


def cmd_atlas(args) -> int:
    if not args.out and not args.infile:
        print("atlas needs --out and/or --in", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.out:
            task = SearchTask(corpus=args.corpus, cap=args.cap, stamp=args.stamp)
            records = run_profile_search(task)
            persist_atlas(records, args.out)
            print(f"wrote {len(records)} records to {args.out}")
        if args.infile:
            records = load_atlas(args.infile, replay_sample=args.replay_sample)
            print(
                f"loaded {len(records)} records from {args.infile} "
                f"(replay sample {args.replay_sample})"
            )
    except ReplayMismatch as exc:
        print(f"replay mismatch: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    except (IoFailure, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_IO
    except (ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EquivalenceBreach as exc:
        print(f"equivalence breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite ring-with-involution laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("human", "json"), default="human")
        p.add_argument("--cap", type=int, default=None, help="order cap override")

    p = sub.add_parser("validate", help="build and validate a spec file")
    common(p)
    p.add_argument("--spec", required=True)

    p = sub.add_parser("check", help="full property report for a spec file")
    common(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--properties", default="all")

    p = sub.add_parser("equivalences", help="agreement matrix over a corpus")
    common(p)
    p.add_argument("--corpus", default="default")

    p = sub.add_parser("example6", help="report for the bundled showcase ring")
    common(p)
    p.add_argument("--properties", default="all")

    p = sub.add_parser("search", help="profile search over a corpus")
    common(p)
    p.add_argument("--corpus", default="default", help="default, zn:A..B, or a spec-list file")
    p.add_argument("--profile", default="")
    p.add_argument("--task", default=None, help="JSON task document instead of flags")
    p.add_argument("--out", default=None)
    p.add_argument("--stamp", default="")

    p = sub.add_parser("problem10", help="matrix-ring scan over base rings")
    common(p)
    p.add_argument("--base", required=True, help="comma list, e.g. zn:2,zn:3")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--out", default=None)
    p.add_argument("--stamp", default="")

    p = sub.add_parser("atlas", help="write and/or replay an atlas file")
    common(p)
    p.add_argument("--corpus", default="default")
    p.add_argument("--out", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--replay-sample", type=float, default=1.0)
    p.add_argument("--stamp", default="")

    return parser


_COMMANDS = {
    "validate": cmd_validate,
    "check": cmd_check,
    "equivalences": cmd_equivalences,
    "example6": cmd_example6,
    "search": cmd_search,
    "problem10": cmd_problem10,
    "atlas": cmd_atlas,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except EquivalenceBreach as exc:
        print(f"equivalence breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except RinglabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_IO


if __name__ == "__main__":
    sys.exit(main())
