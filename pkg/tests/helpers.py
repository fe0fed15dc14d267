import random

import numpy as np

from heapseg.bottom_up import delete_iterative, insert_iterative, stab_iterative
from heapseg.heap_tree import HeapSegmentTree
from heapseg.layout import NodeKind, height, node_kind, standard_region
from heapseg.oracle import explicit_tree

FIXTURE = [(1.0, 4.0), (2.0, 6.0), (3.0, 5.0)]


def mask_of(pieces):
    m = 0
    for b, e in pieces:
        m |= ((1 << e) - 1) ^ ((1 << b) - 1)
    return m


def layout_mismatches(n):
    """Node numbers where the layout algebra disagrees with a BFS-built tree."""
    bad = []
    for v in explicit_tree(n)[1:]:
        x = v.number
        want = NodeKind.LEAF if v.is_leaf else (NodeKind.C if v.complete else NodeKind.Y)
        pieces = standard_region(x, n)
        ok = (
            node_kind(x, n) == want
            and height(x, n) == v.height
            and mask_of(pieces) == v.leaves
            and len(pieces) == (2 if want is NodeKind.Y else 1)
            and all(b < e for b, e in pieces)
            and (len(pieces) == 1 or pieces[0].e <= pieces[1].b)
        )
        if not ok:
            bad.append(x)
    return bad


def random_endpoints(rng, n, grid=None):
    if grid:
        return sorted(float(rng.randrange(grid)) for _ in range(n + 1))
    return sorted(rng.uniform(-100.0, 100.0) for _ in range(n + 1))


def random_intervals(rng, n, grid=None):
    out = []
    for _ in range(n):
        if grid:
            a, b = rng.randrange(grid), rng.randrange(grid)
        else:
            a, b = rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)
        out.append((float(min(a, b)), float(max(a, b))))
    return out


STRATEGIES = {
    "recursive": (HeapSegmentTree.insert_recursive, HeapSegmentTree.delete_recursive),
    "iterative": (insert_iterative, delete_iterative),
}


def assigned_nodes(tree, before):
    return sorted(int(v) for v in np.flatnonzero(tree.cnt != before))


def stabs(tree, q):
    return tree.stab_recursive(q), stab_iterative(tree, q)


__all__ = ["FIXTURE", "random", "STRATEGIES"]
