"""Command line front end.

Exit codes: 0 success, 1 parse error, 2 semantic error, 3 unsupported query.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import ManifoldDescriptor, chern_complexified, dual_sw_total, sw_total
from .dim4 import classify4
from .dsl import manifold
from .errors import ParseError, SemanticError, UnsupportedQuery
from .obstruction import (
    QueryKind,
    existence_threshold,
    obstruction_report,
    transversality_check,
)
from .ring import invert_unit

EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, EXIT_UNSUPPORTED = 0, 1, 2, 3

_RANGE = {"oneOf": [{"type": "null"}, {
    "type": "object",
    "required": ["min", "max"],
    "properties": {"min": {"type": "integer"}, "max": {"type": ["integer", "null"]}},
    "additionalProperties": False,
}]}

JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["query", "manifold", "dimension", "orientable", "closed", "result", "trace"],
    "additionalProperties": False,
    "properties": {
        "query": {"enum": ["classes", "obstruct", "classify4", "threshold", "check-transversality"]},
        "manifold": {"type": ["string", "null"]},
        "dimension": {"type": "integer", "minimum": 0},
        "orientable": {"type": ["boolean", "null"]},
        "closed": {"type": ["boolean", "null"]},
        "trace": {"type": "array", "items": {"type": "string"}},
        "result": {"type": "object"},
    },
    "allOf": [
        {"if": {"properties": {"query": {"const": "obstruct"}}},
         "then": {"properties": {"result": {
             "type": "object",
             "required": ["kind", "impossible", "exists", "unknown", "witness"],
             "properties": {
                 "kind": {"enum": ["tri", "indep"]},
                 "impossible": _RANGE, "exists": _RANGE, "unknown": _RANGE,
                 "impossible_reason": {"type": "string"},
                 "exists_reason": {"type": "string"},
                 "witness": {"type": ["object", "null"]},
             }}}}},
        {"if": {"properties": {"query": {"const": "classify4"}}},
         "then": {"properties": {"result": {
             "type": "object",
             "required": ["conditions"],
             "properties": {"conditions": {
                 "type": "array", "minItems": 7, "maxItems": 7,
                 "items": {
                     "type": "object",
                     "required": ["index", "name", "value", "reason"],
                     "properties": {
                         "index": {"type": "integer", "minimum": 1, "maximum": 7},
                         "name": {"type": "string"},
                         "value": {"enum": ["true", "false", "unknown"]},
                         "reason": {"type": "string"},
                     }}}}}}}},
        {"if": {"properties": {"query": {"const": "classes"}}},
         "then": {"properties": {"result": {
             "type": "object",
             "properties": {k: {"type": ["string", "null"]} for k in ("w", "w_dual", "c", "c_dual")}}}}},
    ],
}


def _envelope(query: str, m: ManifoldDescriptor | None, result: dict, trace, dimension: int | None = None) -> dict:
    return {
        "query": query,
        "manifold": m.canonical_name if m else None,
        "dimension": m.dimension if m else dimension,
        "orientable": m.orientable if m else None,
        "closed": m.closed if m else None,
        "result": result,
        "trace": list(trace),
    }


def _cmd_classes(args) -> tuple[dict, str]:
    m = manifold(args.expr)
    result: dict = {}
    lines = [f"{m.canonical_name}  (dim {m.dimension}, "
             f"{'orientable' if m.orientable else 'non-orientable'}, {'closed' if m.closed else 'open'})"]
    if args.coeff in (None, "z2"):
        w = sw_total(m)
        result["w"] = str(w)
        result["w_dual"] = str(dual_sw_total(m))
        lines += [f"w      = {result['w']}", f"w_dual = {result['w_dual']}"]
    if args.coeff in (None, "z"):
        try:
            c = chern_complexified(m)
        except UnsupportedQuery:
            if args.coeff == "z":
                raise
            result["c"] = result["c_dual"] = None
            lines.append("c      = unavailable (no integral model)")
        else:
            result["c"] = str(c)
            result["c_dual"] = str(invert_unit(c))
            lines += [f"c      = {result['c']}", f"c_dual = {result['c_dual']}"]
    return _envelope("classes", m, result, []), "\n".join(lines)


def _cmd_obstruct(args) -> tuple[dict, str]:
    m = manifold(args.expr)
    kind = QueryKind.parse(args.kind)
    rep = obstruction_report(m, kind)
    label = "totally real immersion" if kind is QueryKind.TOTALLY_REAL else "independent map"
    result = {
        "kind": kind.value,
        "impossible": rep.impossible.to_json(),
        "impossible_reason": rep.impossible_reason,
        "exists": rep.exists.to_json(),
        "exists_reason": rep.exists_reason,
        "unknown": rep.unknown.to_json(),
        "witness": None if rep.witness is None else {"class": rep.witness, "top_degree": rep.witness_top_degree},
    }
    unknown = "unknown" if rep.unknown.empty else str(rep.unknown)
    lines = [
        f"{label} {m.canonical_name} -> C^N  (n = {m.dimension})",
        f"  impossible: {rep.impossible}  [{rep.impossible_reason}]",
        f"  exists:     {rep.exists}  [{rep.exists_reason}]",
        f"  unknown:    {'none' if rep.unknown.empty else unknown}",
    ]
    if rep.witness is not None:
        lines.append(f"  witness:    {rep.witness}  (top degree {rep.witness_top_degree})")
    return _envelope("obstruct", m, result, rep.trace), "\n".join(lines)


def _cmd_classify4(args) -> tuple[dict, str]:
    m = manifold(args.expr)
    rep = classify4(m)
    result = {"conditions": rep.to_json()}
    lines = [f"classify4 {m.canonical_name}"]
    for row in rep.to_json():
        lines.append(f"  ({row['index']}) {row['value']:<7} {row['name']}  [{row['reason']}]")
    return _envelope("classify4", m, result, rep.trace), "\n".join(lines)


def _cmd_threshold(args) -> tuple[dict, str]:
    kind = QueryKind.parse(args.kind)
    t = existence_threshold(args.dim, kind)
    if kind is QueryKind.TOTALLY_REAL:
        text = f"totally real embedding exists for N >= {t} (n = {args.dim})"
    else:
        text = f"independent map exists for N <= {t} (n = {args.dim})"
    result = {"kind": kind.value, "dim": args.dim, "threshold": t}
    return _envelope("threshold", None, result, [text], args.dim), text


def _cmd_transversality(args) -> tuple[dict, str]:
    kind = QueryKind.parse(args.kind)
    chk = transversality_check(args.dim, args.target, kind)
    result = {"kind": kind.value, "dim": args.dim, "target": args.target,
              "applies": chk.applies, "dim_M": chk.dim_m, "codim_sigma": chk.codim_sigma}
    rel = "<" if chk.applies else ">="
    text = (f"dim M = {chk.dim_m} {rel} codim Sigma = {chk.codim_sigma}: "
            f"transversality {'applies' if chk.applies else 'does not apply'}")
    return _envelope("check-transversality", None, result, [text], args.dim), text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p = argparse.ArgumentParser(prog="totreal", parents=[common],
                                description="Totally real immersion / independent map calculator")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classes", parents=[common], help="characteristic classes")
    c.add_argument("expr")
    c.add_argument("--coeff", choices=["z", "z2"])
    c.set_defaults(func=_cmd_classes)

    o = sub.add_parser("obstruct", parents=[common], help="existence/obstruction ranges")
    o.add_argument("kind", choices=["tri", "indep"])
    o.add_argument("expr")
    o.set_defaults(func=_cmd_obstruct)

    k = sub.add_parser("classify4", parents=[common], help="seven-condition 4-manifold table")
    k.add_argument("expr")
    k.set_defaults(func=_cmd_classify4)

    t = sub.add_parser("threshold", parents=[common], help="transversality existence threshold")
    t.add_argument("--kind", choices=["tri", "indep"], required=True)
    t.add_argument("--dim", type=int, required=True)
    t.set_defaults(func=_cmd_threshold)

    x = sub.add_parser("check-transversality", parents=[common], help="codimension check")
    x.add_argument("--dim", type=int, required=True)
    x.add_argument("--target", type=int, required=True)
    x.add_argument("--kind", choices=["tri", "indep"], required=True)
    x.set_defaults(func=_cmd_transversality)
    return p


def run_query(argv: list[str]) -> tuple[str, str, int]:
    """Run one command; returns ``(stdout, stderr, exit_code)``."""
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        payload, text = args.func(args)
    except ParseError as e:
        return "", e.render(), EXIT_PARSE
    except UnsupportedQuery as e:
        return "", f"unsupported query: {e}", EXIT_UNSUPPORTED
    except (SemanticError, ValueError) as e:
        return "", f"error: {e}", EXIT_SEMANTIC
    if as_json:
        return json.dumps(payload, ensure_ascii=False), "", EXIT_OK
    return text, "", EXIT_OK


def main(argv: list[str] | None = None) -> int:
    out, err, code = run_query(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
