"""Classic pointer-linked segment tree, used as a baseline and comparator.

Every node stores its index span ``[b, e]``, split key and child links.  Only
the cardinality of the assigned set is kept (``cnt``).  Nodes also carry a
heap-style ``number`` (root 1, children ``2i``/``2i+1``) purely so that
coverings can be reported and compared by number.
"""
from __future__ import annotations

import bisect
from collections import Counter
from typing import Iterator, Sequence

from .heap_tree import InvariantError


class LinkedNode:
    __slots__ = ("b", "e", "key", "left", "right", "cnt", "number")

    def __init__(self, b: int, e: int, number: int):
        self.b = b
        self.e = e
        self.key = None
        self.left = None
        self.right = None
        self.cnt = 0
        self.number = number

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __repr__(self) -> str:
        return f"LinkedNode(#{self.number} [{self.b},{self.e}] cnt={self.cnt})"


def build(s: int, t: int, number: int = 1) -> LinkedNode:
    if not s < t:
        raise ValueError(f"need s < t, got ({s}, {t})")
    v = LinkedNode(s, t, number)
    if s + 1 < t:
        v.key = m = (s + t) // 2
        v.left = build(s, m, 2 * number)
        v.right = build(m, t, 2 * number + 1)
    return v


def iter_nodes(root: LinkedNode) -> Iterator[LinkedNode]:
    stack = [root]
    while stack:
        v = stack.pop()
        yield v
        if v.left is not None:
            stack.append(v.right)
            stack.append(v.left)


def _collect(b: int, e: int, v: LinkedNode, out: list) -> None:
    if b <= v.b and e >= v.e:
        out.append(v)
        return
    if b < v.key:
        _collect(b, e, v.left, out)
    if v.key < e:
        _collect(b, e, v.right, out)


def _covering_nodes(b: int, e: int, root: LinkedNode) -> list[LinkedNode]:
    if not root.b <= b < e <= root.e:
        raise ValueError(f"need {root.b} <= b < e <= {root.e}, got ({b}, {e})")
    out: list[LinkedNode] = []
    _collect(b, e, root, out)
    return out


def insert(b: int, e: int, root: LinkedNode) -> list[int]:
    """Assign ``[b, e]`` to its covering nodes; returns their numbers."""
    nodes = _covering_nodes(b, e, root)
    for v in nodes:
        v.cnt += 1
    return [v.number for v in nodes]


def delete(b: int, e: int, root: LinkedNode) -> list[int]:
    nodes = _covering_nodes(b, e, root)
    # check before touching anything so a bad delete leaves counts intact
    if any(v.cnt == 0 for v in nodes):
        raise InvariantError(f"deleting [{b},{e}] would drive a count negative")
    for v in nodes:
        v.cnt -= 1
    return [v.number for v in nodes]


def canonical_covering(b: int, e: int, root: LinkedNode) -> list[int]:
    return sorted(v.number for v in _covering_nodes(b, e, root))


class LinkedSegmentTree:
    """Linked tree over a fixed endpoint array with coordinate-level stabbing."""

    def __init__(self, x: Sequence[float]):
        if len(x) < 2:
            raise ValueError("need at least two endpoints (N >= 1)")
        self.x = list(map(float, x))
        self.n = len(self.x) - 1
        self.root = build(0, self.n)
        self.live: Counter[tuple[int, int]] = Counter()

    def insert(self, b: int, e: int) -> None:
        insert(b, e, self.root)
        self.live[(b, e)] += 1

    def delete(self, b: int, e: int) -> None:
        if self.live[(b, e)] <= 0:
            del self.live[(b, e)]
            raise ValueError(f"interval ({b}, {e}) is not currently inserted")
        delete(b, e, self.root)
        self.live[(b, e)] -= 1
        if not self.live[(b, e)]:
            del self.live[(b, e)]

    def stab(self, q: float) -> int:
        """Sum of counts on the root-to-leaf path of the leaf holding ``q``."""
        x = self.x
        if not x[0] < q <= x[self.n]:
            return 0
        pos = bisect.bisect_left(x, q) - 1  # x[pos] < q <= x[pos + 1]
        v = self.root
        total = v.cnt
        while v.left is not None:
            v = v.left if pos < v.key else v.right
            total += v.cnt
        return total

    def covering(self, b: int, e: int) -> list[int]:
        return canonical_covering(b, e, self.root)
