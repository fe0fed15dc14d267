"""Worst-case node visits per update, recursive vs iterative, against 4*(floor(log2 2N)+1).

    python3 scripts/visit_bound.py --sizes 1024,1000,32768,32767 --ops 10000
"""
import argparse
import random

import numpy as np

from heapseg.bottom_up import delete_iterative, insert_iterative
from heapseg.heap_tree import HeapSegmentTree


def worst_visits(n, ops, seed):
    rng = random.Random(seed)
    out = {}
    for name in ("recursive", "iterative"):
        tree = HeapSegmentTree(np.arange(n + 1.0))
        ins = tree.insert_recursive if name == "recursive" else (lambda b, e: insert_iterative(tree, b, e))
        dele = tree.delete_recursive if name == "recursive" else (lambda b, e: delete_iterative(tree, b, e))
        worst = 0
        for _ in range(ops // 2):
            b = rng.randrange(n)
            e = rng.randint(b + 1, n)
            ins(b, e)
            worst = max(worst, tree.last_visits)
            dele(b, e)
            worst = max(worst, tree.last_visits)
        out[name] = worst
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1024,1000,32768,32767,1048576,1048575")
    ap.add_argument("--ops", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print("N\tbound\trecursive\titerative")
    for n in map(int, args.sizes.split(",")):
        w = worst_visits(n, args.ops, args.seed)
        print(f"{n}\t{4 * (2 * n).bit_length()}\t{w['recursive']}\t{w['iterative']}")


if __name__ == "__main__":
    main()
