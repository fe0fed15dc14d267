"""Brute-force references for differential testing.

Nothing here imports the tree implementations.  The stab/union/clique oracles
work on raw coordinates with the same half-open containment ``l < q <= r``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable


def oracle_stab(intervals: Iterable[tuple[float, float]], q: float) -> int:
    return sum(1 for l, r in intervals if l < q <= r)


def _elementary(intervals):
    pts = sorted({c for iv in intervals for c in iv})
    return list(zip(pts, pts[1:]))


def _cover(intervals, lo, hi):
    return sum(1 for l, r in intervals if l <= lo and hi <= r)


def oracle_union(intervals: Iterable[tuple[float, float]]) -> float:
    intervals = list(intervals)
    return sum(hi - lo for lo, hi in _elementary(intervals) if _cover(intervals, lo, hi))


def oracle_clique(intervals: Iterable[tuple[float, float]]) -> int:
    intervals = list(intervals)
    return max((_cover(intervals, lo, hi) for lo, hi in _elementary(intervals)), default=0)


@dataclass(eq=False)
class ExplicitNode:
    number: int
    depth: int
    parent: "ExplicitNode | None" = None
    children: list = field(default_factory=list)
    height: int = 0
    complete: bool = True
    leaves: int = 0  # bitmask of elementary-interval indices below this node

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def region_runs(self) -> list[tuple[int, int]]:
        """Maximal runs ``[a, b]`` of covered elementary intervals."""
        runs, i, m = [], 0, self.leaves
        while m:
            if m & 1:
                start = i
                while m & 1:
                    m >>= 1
                    i += 1
                runs.append((start, i))
            else:
                m >>= 1
                i += 1
        return runs


def explicit_tree(n: int) -> list[ExplicitNode | None]:
    """Nearly complete binary tree of ``2n - 1`` nodes, built by BFS.

    Returned as a list indexed by BFS number (index 0 is ``None``).  Nodes are
    created one at a time by giving each dequeued node two children until the
    node budget is spent; derived fields are then filled bottom-up.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    root = ExplicitNode(1, 0)
    nodes: list[ExplicitNode | None] = [None, root]
    queue = deque([root])
    while len(nodes) - 1 < 2 * n - 1:
        p = queue.popleft()
        for _ in range(2):
            c = ExplicitNode(len(nodes), p.depth + 1, parent=p)
            p.children.append(c)
            nodes.append(c)
            queue.append(c)
    leaf_depths: dict[int, tuple[int, int]] = {}
    for v in reversed(nodes[1:]):
        if v.is_leaf:
            # leaves sit in array slots n..2n-1 and hold elementary interval slot - n
            v.leaves = 1 << (v.number - n)
            leaf_depths[v.number] = (v.depth, v.depth)
        else:
            a, b = v.children
            v.leaves = a.leaves | b.leaves
            lo = min(leaf_depths[a.number][0], leaf_depths[b.number][0])
            hi = max(leaf_depths[a.number][1], leaf_depths[b.number][1])
            leaf_depths[v.number] = (lo, hi)
            v.height = hi - v.depth
            v.complete = lo == hi
    return nodes


def oracle_covering(n: int, b: int, e: int, tree: list | None = None) -> list[int]:
    """Canonical covering of ``[b, e]`` by exhaustive search.

    A node qualifies when its subtree is complete, all its elementary
    intervals lie inside ``[b, e]``, and its parent does not also qualify.
    Nodes with incomplete subtrees cover two separated index ranges and are
    never assigned intervals, so they are excluded even when contained.
    """
    if not 0 <= b < e <= n:
        raise ValueError(f"need 0 <= b < e <= {n}, got ({b}, {e})")
    nodes = tree if tree is not None else explicit_tree(n)
    want = ((1 << e) - 1) ^ ((1 << b) - 1)

    def inside(v):
        return v.complete and v.leaves & ~want == 0

    return [v.number for v in nodes[1:] if inside(v) and not (v.parent and inside(v.parent))]
