"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 parse error, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import load_presentation
from .ideals import render_ideal
from .invariants import (
    alexander_matrix,
    elementary_ideal,
    handlebody_invariant,
    surfacelink_invariant,
    twisted_matrix,
)
from .maps import MapError, abelian_map, conjugacy_classes, enumerate_homs, lemma36_rho
from .presentations import ParseError
from .rings import RingError
from . import verify


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def parse_alpha_spec(spec_text, pres):
    """Parse `x1=t,x2=t^-4@t^k` (or `@t^inf`) into an AbelianMap."""
    if "@" not in spec_text:
        raise CliError("alpha spec needs a target, e.g. '...@t^2'", 2)
    imgpart, _, target = spec_text.rpartition("@")
    if not target.startswith("t^"):
        raise CliError("alpha target must be 't^k' or 't^inf'", 2)
    ordtext = target[2:]
    order = 0 if ordtext == "inf" else int(ordtext)
    exps = {}
    for piece in imgpart.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, _, val = piece.partition("=")
        if not val.startswith("t"):
            raise CliError(f"bad image {piece!r}", 2)
        exps[name.strip()] = int(val[2:]) if val.startswith("t^") else 1
    try:
        images = tuple((exps[name],) for name in pres.generators)
    except KeyError as exc:
        raise CliError(f"alpha spec missing generator {exc}", 2)
    try:
        return abelian_map(pres, images, (("t", order),))
    except MapError as exc:
        raise CliError(str(exc), 1)


def parse_ring_spec(text):
    """`pZ:k1,k2,...` -> (p, orders); default single infinite variable."""
    if text is None:
        return 0
    raise CliError("--ring is reserved for future multi-variable targets", 2)


def _load(source):
    try:
        pres, _ = load_presentation(source)
    except (ParseError, OSError) as exc:
        raise CliError(str(exc), 2)
    return pres


def _parse_rho(text, pres, p=2):
    if text == "lemma36":
        return lemma36_rho(pres, pres.s)
    raise CliError("only --rho lemma36 is built in; supply a rep via the API", 2)


def cmd_ideal(args):
    pres = _load(args.source)
    alpha = parse_alpha_spec(args.alpha, pres)
    m = alexander_matrix(pres, alpha, modulus=args.p)
    ncols = m.declared_cols
    if args.all_d:
        ds = range(ncols + 1)
    else:
        ds = [args.d if args.d is not None else 1]
    for d in ds:
        print(f"E_{d} = {render_ideal(elementary_ideal(m, d))}")
    return 0


def cmd_twisted(args):
    pres = _load(args.source)
    alpha = parse_alpha_spec(args.alpha, pres)
    rho = _parse_rho(args.rho, pres)
    m = twisted_matrix(pres, alpha, rho)
    print(f"E_{args.d} = {render_ideal(elementary_ideal(m, args.d))}")
    return 0


def cmd_reps(args):
    pres = _load(args.source)
    homs = enumerate_homs(pres, n=2, p=args.p)
    classes = conjugacy_classes(homs)
    print(f"homomorphisms: {len(homs)}")
    print(f"conjugacy classes: {len(classes)}")
    return 0


def _emit_table(table, as_json):
    if as_json:
        print(json.dumps(table.to_json()))
    else:
        print(table.render())


def cmd_table1(args):
    pres = _load(args.source)
    table = handlebody_invariant(pres, p=args.p, k=args.k, d=args.d)
    _emit_table(table, args.json)
    return 0


def cmd_table3(args):
    pres = _load(args.source)
    table = surfacelink_invariant(pres, p=args.p, k=args.k)
    _emit_table(table, args.json)
    return 0


def cmd_verify(args):
    target = args.target
    if target == "theorem3.4":
        results = [(n, verify.check_theorem34(n)) for n in range(3, args.n_max + 1)]
    elif target == "theorem3.7":
        results = [(n, verify.check_theorem37(n)) for n in _parse_ns(args.n_list)]
    elif target == "lemma3.6":
        results = [(n, verify.check_lemma36(n)) for n in _parse_ns(args.n_list)]
    elif target == "remark3.4":
        results = [(n, verify.check_remark34(n)) for n in range(3, args.n_max + 1)]
    else:
        raise CliError(f"unknown verification target {target!r}", 2)
    ok = True
    for n, good in results:
        print(f"{target} n={n}: {'ok' if good else 'MISMATCH'}")
        ok = ok and good
    return 0 if ok else 3


def _parse_ns(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise CliError(f"bad n list {text!r}", 2)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="foxcalc",
        description="Alexander and twisted Alexander ideals of finitely presented groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", help="untwisted elementary ideals")
    p.add_argument("source", help="catalog key, inline presentation, or file")
    p.add_argument("--alpha", required=True, help="e.g. 'x1=t,x2=t^-4@t^inf'")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--all-d", action="store_true")
    p.add_argument("--p", type=int, default=0, help="coefficient modulus")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("twisted", help="twisted elementary ideals")
    p.add_argument("source")
    p.add_argument("--alpha", required=True)
    p.add_argument("--rho", required=True, help="'lemma36'")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_twisted)

    p = sub.add_parser("reps", help="count homomorphisms to SL(2;Z_p)")
    p.add_argument("source")
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("table1", help="matrix-form handlebody invariant")
    p.add_argument("source")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table3", help="row-form surface-link invariant")
    p.add_argument("source")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("verify", help="re-derive the theta-curve formulas")
    p.add_argument("target", help="theorem3.4 | remark3.4 | theorem3.7 | lemma3.6")
    p.add_argument("--n-max", type=int, default=24)
    p.add_argument("--n-list", default="5,7,11,13")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (RingError, MapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
