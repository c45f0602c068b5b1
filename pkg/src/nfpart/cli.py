"""Command line entry point: ``nfpart {enum,count,expand,verify}``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
(including unparseable element literals and field/ideal mismatches).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .enumeration import enumerate_totally_positive
from .field import AlgInt, FieldMismatch, ParseError, QuadField, parse_element
from .ideals import GlaisherData, Ideal, ideal_from_generators, in_glaisher_S
from .partitions import (Partition, count_chain, count_partitions, enumerate_chains,
                         enumerate_partitions, enumerate_weighted_solutions)
from .qsum import partition_genfun
from .theorems import (verify_chain_theorem, verify_glaisher, verify_ideal_theorem,
                       verify_remark_counterexample)


class UsageError(Exception):
    pass


def _field(d: int) -> QuadField:
    try:
        return QuadField(d)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _ideal(field: QuadField, spec: str) -> Ideal:
    gens = [parse_element(field, g) for g in spec.split(";") if g.strip()]
    if not gens:
        raise UsageError(f"no generators in {spec!r}")
    try:
        return ideal_from_generators(gens)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _glaisher(field: QuadField, spec: str, modulus: int | None) -> GlaisherData:
    if modulus is None:
        raise UsageError("--modulus is required with an S-type restriction")
    try:
        return GlaisherData(_ideal(field, spec), modulus)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _part_predicate(field: QuadField, args) -> tuple[Callable[[AlgInt], bool] | None, str]:
    if getattr(args, "not_in_ideal", None):
        ideal = _ideal(field, args.not_in_ideal)
        return (lambda a: not ideal.contains(a)), f"not in {ideal}"
    if getattr(args, "ideal", None):
        ideal = _ideal(field, args.ideal)
        return ideal.contains, f"in {ideal}"
    if getattr(args, "glaisher_S", None):
        g = _glaisher(field, args.glaisher_S, args.modulus)
        return (lambda a: in_glaisher_S(g, a)), f"in S({g.a}, {g.d})"
    return None, "all"


def _coords(a: AlgInt) -> list[int]:
    return [a.x, a.y]


def _emit_rows(rows: list[dict], fmt: str, columns: list[str], out):
    if fmt == "json":
        for r in rows:
            print(json.dumps(r, ensure_ascii=False), file=out)
        return
    sep = "\t" if fmt == "tsv" else "  "
    if fmt == "tsv":
        print(sep.join(columns), file=out)
    for r in rows:
        cells = []
        for c in columns:
            v = r[c]
            cells.append(",".join(map(str, v)) if isinstance(v, list) else str(v))
        print(sep.join(cells), file=out)


def cmd_enum(args, out) -> int:
    field = _field(args.field)
    rows = [{"field": field.d, "x": a.x, "y": a.y, "trace": a.trace(), "norm": a.norm(),
             "display": str(a)}
            for a in enumerate_totally_positive(field, args.max_trace)]
    _emit_rows(rows, args.format, ["x", "y", "trace", "norm", "display"], out)
    return 0


def cmd_count(args, out) -> int:
    field = _field(args.field)
    delta = parse_element(field, args.delta)
    if not delta.is_totally_positive():
        raise UsageError(f"{delta} is not totally positive")
    record = {"field": field.d, "delta": _coords(delta), "display": str(delta)}
    listing: list[str] = []
    parts_json: list = []
    if args.chain:
        m = args.max_parts
        if args.exact_parts and m is None:
            raise UsageError("--exact-parts needs --max-parts")
        record.update(kind="chain", max_parts=m, exact_parts=args.exact_parts)
        record["count"] = count_chain(delta, m, exact=args.exact_parts)
        if args.list:
            chains = enumerate_chains(delta, m, exact=args.exact_parts)
            chains.sort(key=lambda c: [a.sort_key() for a in c[::-1]], reverse=True)
            listing = [str(Partition(c)) for c in chains]
            parts_json = [[_coords(a) for a in c[::-1]] for c in chains]
        if args.solutions:
            if m is None:
                raise UsageError("--solutions needs --max-parts")
            sols = enumerate_weighted_solutions(delta, m, exact=args.exact_parts)
            record["solutions"] = [[_coords(x) for x in s.xs] for s in sols]
            listing += [f"x = {s}" for s in sols]
    else:
        pred, label = _part_predicate(field, args)
        record.update(kind="partition", parts=label, mult_bound=args.mult_bound)
        record["count"] = count_partitions(delta, pred, args.mult_bound)
        if args.list:
            ps = enumerate_partitions(delta, pred, args.mult_bound)
            listing = [str(p) for p in ps]
            parts_json = [[_coords(a) for a in p.parts] for p in ps]
    if args.list:
        record["partitions"] = parts_json
    if args.format == "json":
        print(json.dumps(record, ensure_ascii=False), file=out)
    else:
        print(f"p({delta}) = {record['count']}", file=out)
        for line in listing:
            print(line, file=out)
    return 0


def cmd_expand(args, out) -> int:
    field = _field(args.field)
    pred, _ = _part_predicate(field, args)
    gf = partition_genfun(field, pred, args.mult_bound, args.max_trace)
    rows = [{"field": field.d, "delta": _coords(k), "display": str(k), "count": c}
            for k, c in gf.items()]
    _emit_rows(rows, args.format, ["delta", "display", "count"], out)
    return 0


def cmd_verify(args, out) -> int:
    field = _field(args.field)
    if args.theorem == "ideal":
        if not args.ideal:
            raise UsageError("--ideal is required for the ideal theorem")
        report = verify_ideal_theorem(_glaisher(field, args.ideal, args.modulus), args.max_trace)
    elif args.theorem == "glaisher":
        if args.modulus is None or args.modulus < 2:
            raise UsageError("--modulus d >= 2 is required")
        report = verify_glaisher(field, args.modulus, args.max_trace)
    elif args.theorem == "chain":
        report = verify_chain_theorem(field, args.max_trace, args.max_parts or 6)
    else:
        report = verify_remark_counterexample()
    if args.format == "json":
        for line in report.to_json_lines():
            print(line, file=out)
    else:
        print(report.summary(), file=out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nfpart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, trace=True):
        p.add_argument("--field", type=int, required=True, help="radicand d; 1 selects Q")
        if trace:
            p.add_argument("--max-trace", type=int, required=True)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="format", action="store_const", const="json")
        fmt.add_argument("--tsv", dest="format", action="store_const", const="tsv")
        p.set_defaults(format="text")

    def restrictions(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--all", action="store_true", help="no restriction on parts")
        g.add_argument("--ideal", help="parts inside the ideal 'g1;g2;...'")
        g.add_argument("--not-in-ideal", help="parts outside the ideal 'g1;g2;...'")
        g.add_argument("--glaisher-S", dest="glaisher_S",
                       help="parts in the set S built from the ideal and --modulus")
        p.add_argument("--modulus", type=int)
        p.add_argument("--mult-bound", type=int)

    p = sub.add_parser("enum", help="list totally positive integers of bounded trace")
    common(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("count", help="count (and list) partitions of one element")
    common(p, trace=False)
    p.add_argument("--delta", required=True, help="'x,y' coordinates or an element literal")
    restrictions(p)
    p.add_argument("--chain", action="store_true", help="count chain partitions")
    p.add_argument("--max-parts", type=int)
    p.add_argument("--exact-parts", action="store_true",
                   help="with --chain: exactly --max-parts parts")
    p.add_argument("--solutions", action="store_true",
                   help="with --chain: list solutions of delta = x_1 + 2 x_2 + ... + m x_m")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("expand", help="coefficients of a partition generating function")
    common(p)
    restrictions(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check an identity on a trace window")
    common(p)
    p.add_argument("--theorem", choices=["ideal", "glaisher", "chain", "remark"], required=True)
    p.add_argument("--ideal")
    p.add_argument("--modulus", type=int)
    p.add_argument("--max-parts", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, FieldMismatch, UsageError) as e:
        print(f"nfpart: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
