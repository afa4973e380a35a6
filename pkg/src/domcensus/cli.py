"""Command-line interface.

Every subcommand takes JSON in and writes JSON out (one object, or JSON
lines for `enumerate`), so censuses are diffable and reproducible.  Exit
status: 0 on success, 1 on a domain error (reported as {"error": ...}),
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import domination, jsonio, seifert, torus_bundle
from .errors import DomainError
from .jsonio import SchemaError


def _load_payload(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"payload is not valid JSON: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_budget(path: str) -> domination.DominationBudget:
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise SchemaError(f"cannot read budget file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"budget file is not valid JSON: {exc}") from None
    return jsonio.budget_from_json(raw)


def _cmd_normalize(args) -> dict:
    data = jsonio.seifert_from_json(_load_payload(args.payload))
    return jsonio.seifert_to_json(seifert.normalize(data))


def _cmd_invariants(args) -> dict:
    data = seifert.normalize(jsonio.seifert_from_json(_load_payload(args.payload)))
    return jsonio.summary_to_json(seifert.invariant_summary(data))


def _cmd_classify(args) -> dict:
    data = seifert.normalize(jsonio.seifert_from_json(_load_payload(args.payload)))
    return {"geometry": seifert.classify_geometry(data).value}


def _cmd_flat_bases(_args) -> list:
    return [
        {"genus": g, "cone_orders": list(orders)}
        for g, orders in seifert.enumerate_flat_bases()
    ]


def _cmd_bundle_invariants(args) -> dict:
    matrix = torus_bundle.validate_anosov(
        *jsonio.matrix_entries_from_json(_load_payload(args.payload))
    )
    return {
        "trace": matrix.trace,
        "torsion": torus_bundle.bundle_torsion_order(matrix),
        "geometry": "Sol",
    }


def _cmd_reduce(args) -> dict:
    matrix = torus_bundle.validate_anosov(
        *jsonio.matrix_entries_from_json(_load_payload(args.payload))
    )
    k = args.max_trace if args.max_trace is not None else abs(matrix.trace)
    cert = torus_bundle.reduce_trace_bounded(matrix, k)
    return {
        "representative": jsonio.anosov_to_json(cert.representative),
        "conjugator": jsonio.mat2_to_json(cert.conjugator),
    }


def _cmd_classes(args) -> list:
    if args.max_trace is None:
        raise SchemaError("classes requires --max-trace")
    reps = torus_bundle.conjugacy_classes_bounded(args.max_trace, entry_cap=args.cap)
    return [
        {
            "matrix": jsonio.anosov_to_json(rep)["matrix"],
            "trace": rep.trace,
            "torsion": torus_bundle.bundle_torsion_order(rep),
        }
        for rep in reps
    ]


def _cmd_same_bundle(args) -> dict:
    payload = _load_payload(args.payload)
    if not isinstance(payload, dict) or "first" not in payload or "second" not in payload:
        raise SchemaError("expected {'first': {'matrix': ...}, 'second': {'matrix': ...}}")
    first = torus_bundle.validate_anosov(*jsonio.matrix_entries_from_json(payload["first"]))
    second = torus_bundle.validate_anosov(*jsonio.matrix_entries_from_json(payload["second"]))
    conjugate, witness = torus_bundle.same_bundle(first, second)
    return {
        "conjugate": conjugate,
        "conjugator": None if witness is None else jsonio.mat2_to_json(witness),
    }


def _parse_target(payload):
    if isinstance(payload, dict) and "matrix" in payload:
        return torus_bundle.validate_anosov(*jsonio.matrix_entries_from_json(payload))
    return seifert.normalize(jsonio.seifert_from_json(payload))


def _cmd_check(args) -> dict:
    if not args.budget:
        raise SchemaError("check requires --budget")
    budget = _load_budget(args.budget)
    target = _parse_target(_load_payload(args.payload))
    verdict = domination.check_necessary_conditions(budget, target)
    return {
        "passed": verdict.passed,
        "checks": [jsonio.check_to_json(c) for c in verdict.checks],
    }


def _cmd_enumerate(args) -> int:
    if not args.budget:
        raise SchemaError("enumerate requires --budget")
    budget = _load_budget(args.budget)
    print(
        "cutoffs: " + _dump(_to_jsonable(domination.search_cutoffs(budget))),
        file=sys.stderr,
    )
    lines = [
        _dump(jsonio.record_to_json(record))
        for record in domination.enumerate_all(budget)
    ]
    for line in lines:
        print(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.writelines(line + "\n" for line in lines)
    return 0


def _to_jsonable(obj):
    from fractions import Fraction

    if isinstance(obj, dict):
        return {str(k): _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return jsonio.format_rational(obj)
    return obj


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcensus",
        description=(
            "Exact invariants of Seifert fibered spaces and Sol torus bundles, "
            "and enumeration of candidate degree-one map targets under "
            "invariant budgets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def payload_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("payload", help="JSON payload")
        return p

    payload_cmd("normalize", "canonical form of Seifert data")
    payload_cmd("invariants", "e, chi, SV, torsion and geometry of Seifert data")
    payload_cmd("classify", "geometry class of Seifert data")
    sub.add_parser("flat-bases", help="the flat base orbifolds (chi = 0)")
    payload_cmd("bundle-invariants", "trace and homology torsion of an Anosov matrix")
    p = payload_cmd("reduce", "entry-bounded conjugate of an Anosov matrix")
    p.add_argument("--max-trace", type=int, default=None, help="trace bound k")
    p = sub.add_parser("classes", help="bounded-trace conjugacy class representatives")
    p.add_argument("--max-trace", type=int, default=None, help="trace bound k")
    p.add_argument("--cap", type=int, default=None, help="initial BFS entry cap")
    payload_cmd("same-bundle", "decide conjugacy of two Anosov matrices")
    p = payload_cmd("check", "necessary-condition verdict for one target")
    p.add_argument("--budget", help="budget JSON file")
    p = sub.add_parser("enumerate", help="enumerate the full target census")
    p.add_argument("--budget", help="budget JSON file")
    p.add_argument("--out", help="also write the JSONL census here")
    return parser


_DISPATCH = {
    "normalize": _cmd_normalize,
    "invariants": _cmd_invariants,
    "classify": _cmd_classify,
    "flat-bases": _cmd_flat_bases,
    "bundle-invariants": _cmd_bundle_invariants,
    "reduce": _cmd_reduce,
    "classes": _cmd_classes,
    "same-bundle": _cmd_same_bundle,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        result = _DISPATCH[args.command](args)
    except DomainError as exc:
        print(_dump({"error": str(exc)}))
        return 1
    except SchemaError as exc:
        print(_dump({"error": str(exc)}))
        return 2
    print(_dump(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
