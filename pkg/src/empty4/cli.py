"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad tuple, not cyclic, parse failure,
...), 2 usage error.  One result per line; tuples use the V:b0,b1,b2,b3,b4
syntax and simplices one vertex per line.
"""

from __future__ import annotations

import argparse
import sys

from . import families as F
from . import search as S
from .census import (diff_census, excess_report, histogram_by_volume,
                     read_census, width_histogram, write_census)
from .errors import Empty4Error
from .geometry import hstar, parse_simplex, realize, tuple_from_simplex, width
from .oracle import is_empty, is_hollow
from .tuples import parse_tuple


def _read_coords(path: str):
    if path == "-":
        return parse_simplex(sys.stdin.read())
    with open(path) as fh:
        return parse_simplex(fh.read())


def _cmd_classify(args) -> int:
    t = parse_tuple(args.tuple)
    if not is_empty(t):
        print("not-empty")
        return 0
    labels = F.family_membership(t)
    if not labels:
        print("sporadic")
        return 0
    for text in sorted(str(l) for l in labels):
        print("family " + text)
    return 0


def _cmd_empty_check(args) -> int:
    t = parse_tuple(args.tuple)
    print("empty" if is_empty(t) else "not-empty")
    return 0


def _cmd_hollow_check(args) -> int:
    t = parse_tuple(args.tuple)
    print("hollow" if is_hollow(t) else "not-hollow")
    return 0


def _cmd_realize(args) -> int:
    print(realize(parse_tuple(args.tuple)))
    return 0


def _cmd_tuple_of(args) -> int:
    print(tuple_from_simplex(_read_coords(args.coords)))
    return 0


def _cmd_width(args) -> int:
    if args.coords:
        s = _read_coords(args.coords)
    elif args.tuple:
        s = realize(parse_tuple(args.tuple))
    else:
        print("width needs a tuple or --coords", file=sys.stderr)
        return 2
    print(width(s))
    return 0


def _cmd_hstar(args) -> int:
    print(" ".join(str(x) for x in hstar(parse_tuple(args.tuple))))
    return 0


def _cmd_families(args) -> int:
    if args.what != "list":
        print("unknown families subcommand %r" % args.what, file=sys.stderr)
        return 2
    print("# primitive rows (member at volume V: entries mod V; "
          "admissible iff no prime of V divides two entries)")
    for spec in F.PRIMITIVE_SPECS:
        print("%s  %s  max-facets %s" %
              (spec.id, ",".join("%d" % x for x in spec.b),
               ",".join(str(v) for v in spec.max_facets)))
    print("# nonprimitive rows (member: sign*(V/I)*a + b mod V; "
          "conditions on m = sign*V/I)")
    for spec in F.NONPRIMITIVE_SPECS:
        conds = []
        for cond, mod in ((spec.cond2, 2), (spec.cond3, 3)):
            if cond:
                conds.append("m %s %d (mod %d)"
                             % ("==" if cond[0] == "eq" else "!=", cond[1], mod))
        tail = "never-empty" if spec.never_empty else "; ".join(conds) or "always"
        print("%s  I=%d  a=%s/%d  b=%s  %s" %
              (spec.id, spec.index,
               ",".join("%d" % x for x in spec.a_num), spec.index,
               ",".join("%d" % x for x in spec.b), tail))
    return 0


def _cmd_enumerate(args) -> int:
    cfg = S.SearchConfig(v_min=args.v_from, v_max=args.v_to, workers=args.workers,
                         prune_families=args.sporadic,
                         checkpoint_path=args.checkpoint)
    census = (S.enumerate_sporadic if args.sporadic else S.enumerate_census)(cfg)
    if args.out:
        write_census(census, args.out)
        print("%d rows -> %s" % (len(census), args.out))
    else:
        write_census(census, sys.stdout)
    return 0


def _cmd_stats(args) -> int:
    census = read_census(args.census)
    hist = histogram_by_volume(census)
    for V in sorted(hist):
        print("%d %d" % (V, hist[V]))
    print("total %d" % len(census))
    return 0


def _cmd_diff(args) -> int:
    only_a, only_b = diff_census(read_census(args.a), read_census(args.b))
    for V, b in only_a:
        print("< %d %s" % (V, " ".join(str(x) for x in b)))
    for V, b in only_b:
        print("> %d %s" % (V, " ".join(str(x) for x in b)))
    return 0


def _cmd_widths(args) -> int:
    hist = width_histogram(read_census(args.census))
    for w in sorted(hist):
        n, lo, hi = hist[w]
        print("%d %d %d %d" % (w, n, lo, hi))
    return 0


def _cmd_excess(args) -> int:
    for ev, es, (V, b) in excess_report(read_census(args.census)):
        print("%d %d %d %s" % (ev, es, V, " ".join(str(x) for x in b)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="empty4",
                                description="empty 4-simplex toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("classify", help="family labels / sporadic / not-empty")
    q.add_argument("tuple")
    q.set_defaults(func=_cmd_classify)

    q = sub.add_parser("empty-check", help="lattice-point emptiness")
    q.add_argument("tuple")
    q.set_defaults(func=_cmd_empty_check)

    q = sub.add_parser("hollow-check", help="no interior lattice points")
    q.add_argument("tuple")
    q.set_defaults(func=_cmd_hollow_check)

    q = sub.add_parser("realize", help="vertex coordinates for a tuple")
    q.add_argument("tuple")
    q.set_defaults(func=_cmd_realize)

    q = sub.add_parser("tuple-of", help="tuple of a coordinate simplex")
    q.add_argument("--coords", required=True, help="vertex file, - for stdin")
    q.set_defaults(func=_cmd_tuple_of)

    q = sub.add_parser("width", help="lattice width")
    q.add_argument("tuple", nargs="?")
    q.add_argument("--coords")
    q.set_defaults(func=_cmd_width)

    q = sub.add_parser("hstar", help="h* vector of an empty tuple")
    q.add_argument("tuple")
    q.set_defaults(func=_cmd_hstar)

    q = sub.add_parser("families", help="embedded family tables")
    q.add_argument("what", choices=["list"])
    q.set_defaults(func=_cmd_families)

    q = sub.add_parser("enumerate", help="census of empty classes")
    q.add_argument("--from", dest="v_from", type=int, default=1)
    q.add_argument("--to", dest="v_to", type=int, required=True)
    q.add_argument("--sporadic", action="store_true",
                   help="drop classes belonging to an infinite family")
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--out")
    q.add_argument("--checkpoint")
    q.set_defaults(func=_cmd_enumerate)

    q = sub.add_parser("stats", help="per-volume counts of a census file")
    q.add_argument("census")
    q.set_defaults(func=_cmd_stats)

    q = sub.add_parser("diff", help="rows only in one of two censuses")
    q.add_argument("a")
    q.add_argument("b")
    q.set_defaults(func=_cmd_diff)

    q = sub.add_parser("widths", help="width histogram of a census file")
    q.add_argument("census")
    q.set_defaults(func=_cmd_widths)

    q = sub.add_parser("excess", help="volume/surface excess per census row")
    q.add_argument("census")
    q.set_defaults(func=_cmd_excess)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Empty4Error, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
