"""Command-line front end: ``heapseg {stats,stab,cover,layout,bench}``.

Exit codes: 0 ok, 1 bad input or usage, 2 invariant violation or disagreement
between implementations (including ``--check`` failures against the oracle).
"""
from __future__ import annotations

import argparse
import logging
import math
import os
import sys

from . import layout, oracle
from .bench import IMPLS, MismatchError, run_bench
from .bottom_up import insert_iterative, stab_iterative
from .heap_tree import HeapSegmentTree, InvariantError, canonical_covering
from .interval_io import Workload, normalize, parse
from .reference_tree import LinkedSegmentTree

log = logging.getLogger("heapseg")


class CheckFailed(RuntimeError):
    pass


def _fmt_num(v: float) -> str:
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def _fmt_region(pieces) -> str:
    return "∪".join(f"[{b},{e}]" for b, e in pieces)


def _load(args):
    intervals = parse(args.input, args.format)
    x, mapped = normalize(intervals)
    live = [iv for iv in mapped if not iv.degenerate]
    return intervals, x, mapped, live


def cmd_stats(args) -> int:
    intervals, x, mapped, live = _load(args)
    degenerate = len(mapped) - len(live)
    if not intervals:
        print("n=0 N=0 union=0 clique=0")
        return 0
    tree = HeapSegmentTree(x)
    for b, e in live:
        insert_iterative(tree, b, e)
    union, clique = tree.union_measure(), tree.max_clique()
    line = f"n={len(intervals)} N={tree.n} union={_fmt_num(union)} clique={clique}"
    if degenerate:
        line += f" degenerate={degenerate}"
    print(line)
    if args.check:
        want_u, want_c = oracle.oracle_union(intervals), oracle.oracle_clique(intervals)
        if not math.isclose(union, want_u, rel_tol=1e-9) or clique != want_c:
            raise CheckFailed(f"oracle says union={want_u!r} clique={want_c}")
    return 0


def _parse_queries(text: str) -> list[float]:
    try:
        qs = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"bad query list {text!r}") from None
    if not qs or not all(math.isfinite(q) for q in qs):
        raise ValueError(f"bad query list {text!r}")
    return qs


def cmd_stab(args) -> int:
    queries = _parse_queries(args.query)
    intervals, x, mapped, live = _load(args)
    if not intervals:
        answers = [0] * len(queries)
    elif args.impl == "linked":
        tree = LinkedSegmentTree(x)
        for b, e in live:
            tree.insert(b, e)
        answers = [tree.stab(q) for q in queries]
    else:
        tree = HeapSegmentTree(x)
        for b, e in live:
            if args.impl == "heap-rec":
                tree.insert_recursive(b, e)
            else:
                insert_iterative(tree, b, e)
        stab = tree.stab_recursive if args.impl == "heap-rec" else (lambda q: stab_iterative(tree, q))
        answers = [stab(q) for q in queries]
    print(" ".join(map(str, answers)))
    if args.check:
        for q, got in zip(queries, answers):
            want = oracle.oracle_stab(intervals, q)
            if got != want:
                raise CheckFailed(f"stab({q!r}) = {got}, oracle says {want}")
    return 0


def cmd_cover(args) -> int:
    n, b, e = args.n, args.b, args.e
    if n < 1 or not 0 <= b < e <= n:
        raise ValueError(f"need N >= 1 and 0 <= b < e <= N, got N={n} b={b} e={e}")
    if args.impl == "linked":
        nodes = LinkedSegmentTree(range(n + 1)).covering(b, e)
    else:
        nodes = canonical_covering(n, b, e)
        if args.check and nodes != oracle.oracle_covering(n, b, e):
            raise CheckFailed(f"oracle covering is {oracle.oracle_covering(n, b, e)}")
    print(" ".join(map(str, nodes)))
    return 0


def _layout_row(x: int, n: int) -> str:
    kind = layout.node_kind(x, n).value
    return f"{kind} h={layout.height(x, n)} region={_fmt_region(layout.standard_region(x, n))}"


def cmd_layout(args) -> int:
    n = args.n
    if n < 1:
        raise ValueError("N must be >= 1")
    if args.node is not None:
        print(_layout_row(args.node, n))
        return 0
    print(f"# N={n} lowest_y={layout.lowest_y_node(n) or '-'}")
    for x in range(1, 2 * n):
        print(f"{x} {_layout_row(x, n)}")
    return 0


def cmd_bench(args) -> int:
    impls = [s.strip() for s in args.impl.split(",") if s.strip()]
    w = Workload(seed=args.seed, n=args.n, ops=args.ops, dist=args.dist)
    report = run_bench(w, impls, repeat=args.repeat, warmup=args.warmup)
    out = report.to_tsv() if args.format == "tsv" else report.to_json()
    sys.stdout.write(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heapseg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("--input", required=True, help="interval file (CSV l,r rows or JSONL)")
        sp.add_argument("--format", choices=("csv", "jsonl"), default=None)
        sp.add_argument("--check", action="store_true", help="cross-verify answers against brute force")

    sp = sub.add_parser("stats", help="union measure and maximum clique")
    add_input(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("stab", help="stabbing counts at query points")
    add_input(sp)
    sp.add_argument("--query", required=True, help="comma-separated query coordinates")
    sp.add_argument("--impl", choices=("heap-rec", "heap-iter", "linked"), default="heap-iter")
    sp.set_defaults(func=cmd_stab)

    sp = sub.add_parser("cover", help="canonical covering node numbers")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--impl", choices=("heap", "linked"), default="heap")
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("layout", help="node kinds, heights and regions")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--node", type=int, default=None)
    sp.set_defaults(func=cmd_layout)

    sp = sub.add_parser("bench", help="time a seeded workload")
    sp.add_argument("--n", type=int, default=1000, help="number of intervals")
    sp.add_argument("--ops", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--impl", default="heap-rec,heap-iter", help=f"comma list of {','.join(IMPLS)}")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--dist", choices=("uniform", "grid"), default="uniform")
    sp.add_argument("--repeat", type=int, default=3)
    sp.add_argument("--warmup", type=int, default=1000, help="ops replayed once before timing")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    level = os.environ.get("SEGTREE_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (InvariantError, MismatchError, CheckFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
