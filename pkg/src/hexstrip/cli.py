"""Command-line interface.

Subcommands:

    count      one exact value (sequences, triangle entries, g^{k,l})
    triangle   rows of the c/t/u/v triangles (plain, CSV or JSON)
    poly       the colored-tiling polynomial for a given strip length
    enumerate  brute-force tilings as JSON lines, block words or stats
    verify     run the identity catalog; exit 1 on any failure
    errata     print the documented source misprints

All numbers are printed as exact decimal strings.  Exit codes: 0 ok,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from hexstrip import counting, enumerator, errata, identities
from hexstrip.sequences import fib, narayana, padovan, tetra, tri
from hexstrip.strip_model import TileModel, to_block_word

_SEQ_FAMILIES = {
    "h": counting.h,
    "g": counting.g,
    "fib": fib,
    "tri": tri,
    "tetra": tetra,
    "nar": narayana,
    "pad": padovan,
}
_TRIANGLE_FAMILIES = ("c", "t", "u", "v")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexstrip", description="Exact honeycomb-strip tiling counts."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print one exact count")
    p_count.add_argument(
        "--family",
        required=True,
        choices=sorted(_SEQ_FAMILIES) + list(_TRIANGLE_FAMILIES) + ["gkl"],
    )
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--k", type=int, default=None)
    p_count.add_argument("--l", type=int, default=None)
    p_count.add_argument(
        "--bfile",
        action="store_true",
        help="print a b-file (index value per line) for terms 0..n; sequence families only",
    )
    p_count.add_argument(
        "--offset", type=int, default=0, help="first index printed in b-file output"
    )

    p_tri = sub.add_parser("triangle", help="print rows 0..R of a number triangle")
    p_tri.add_argument("--family", required=True, choices=_TRIANGLE_FAMILIES)
    p_tri.add_argument("--rows", type=int, required=True)
    p_tri.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p_poly = sub.add_parser("poly", help="print the colored-tiling polynomial")
    p_poly.add_argument("--n", type=int, required=True)
    p_poly.add_argument("--format", choices=("plain", "json"), default="plain")

    p_enum = sub.add_parser("enumerate", help="brute-force enumeration of tilings")
    p_enum.add_argument("--model", required=True, choices=("md", "mdt"))
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument(
        "--stats", action="store_true", help="print the tile-count histogram instead"
    )
    p_enum.add_argument(
        "--words", action="store_true", help="print block words instead of JSON tilings"
    )

    p_verify = sub.add_parser("verify", help="check the identity catalog")
    p_verify.add_argument("--id", default=None, choices=None)
    p_verify.add_argument("--max-n", type=int, default=40)
    p_verify.add_argument("--format", choices=("plain", "json"), default="plain")

    sub.add_parser("errata", help="print the documented source misprints")
    return parser


def _cmd_count(args, out) -> int:
    fn = _SEQ_FAMILIES.get(args.family)
    if fn is not None:
        if args.k is not None or args.l is not None:
            raise _UsageError(f"family {args.family!r} takes no --k/--l")
        if args.bfile:
            values = (fn(i) for i in range(args.offset, args.n + 1))
            out.write(counting.b_file(values, offset=args.offset))
        else:
            out.write(f"{fn(args.n)}\n")
        return 0
    if args.bfile:
        raise _UsageError("--bfile applies to sequence families only")
    if args.family == "gkl":
        if args.k is None or args.l is None:
            raise _UsageError("family 'gkl' requires --k and --l")
        out.write(f"{counting.g_kl(args.n, args.k, args.l)}\n")
        return 0
    if args.k is None:
        raise _UsageError(f"family {args.family!r} requires --k")
    entry = {"c": counting.c, "t": counting.t, "u": counting.u, "v": counting.v}
    out.write(f"{entry[args.family](args.n, args.k)}\n")
    return 0


def _cmd_triangle(args, out) -> int:
    tr = counting.triangle(args.family, args.rows)
    if args.format == "csv":
        out.write(tr.to_csv())
    elif args.format == "json":
        out.write(tr.to_json() + "\n")
    else:
        for row in tr.rows:
            out.write(" ".join(str(x) for x in row) + "\n")
    return 0


def _cmd_poly(args, out) -> int:
    poly = counting.h_colored(args.n)
    if args.format == "json":
        terms = [
            {"a": i, "b": j, "coeff": coeff} for i, j, coeff in poly.sorted_terms()
        ]
        out.write(json.dumps({"n": args.n, "terms": terms}) + "\n")
    else:
        out.write(str(poly) + "\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    model = TileModel(args.model)
    if args.stats:
        hist = enumerator.count_by_statistics(args.n, model)
        lines = {}
        for key in sorted(hist):
            if model is TileModel.MD:
                label = f"(monomers={key[0]},dimers={key[1]})"
            else:
                label = f"(monomers={key[0]},dimers={key[1]},trimers={key[2]})"
            lines[label] = hist[key]
        out.write(json.dumps(lines) + "\n")
        return 0
    for tiling in enumerator.enumerate_tilings(args.n, model):
        if args.words:
            out.write(to_block_word(tiling) + "\n")
        else:
            out.write(json.dumps(tiling.to_json_dict(model)) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.id is not None:
        reports = [identities.verify(args.id, args.max_n)]
    else:
        reports = identities.verify_all(args.max_n)
    if args.format == "json":
        out.write(json.dumps([r.to_json_dict() for r in reports]) + "\n")
    else:
        for r in reports:
            line = f"{r.status.upper():4}  {r.id}  ({r.range})"
            if r.counterexample:
                line += f"  counterexample: {r.counterexample}"
            out.write(line + "\n")
    return 0 if all(r.passed for r in reports) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "count":
            return _cmd_count(args, out)
        if args.command == "triangle":
            return _cmd_triangle(args, out)
        if args.command == "poly":
            return _cmd_poly(args, out)
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        out.write(errata.errata_text())
        return 0
    except (_UsageError, KeyError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
