"""Heap-ordered segment tree with no per-node structural fields.

Per-node storage is one flat record array of ``(cnt, uni, clq)`` indexed by
node number ``1..2N-1``; slot 0 is unused.  Node geometry comes from
:mod:`heapseg.layout`.

Stabbing follows the half-open convention of the elementary intervals: a
stored interval ``[l, r]`` contains ``q`` iff ``l < q <= r``.  A query sitting
exactly on a left endpoint therefore does not count that interval.
"""
from __future__ import annotations

from collections import Counter
from typing import NamedTuple, Sequence

import numpy as np
from numba import njit

from .layout import _span


class InvariantError(RuntimeError):
    """A count would go negative or the tree's internal invariants broke."""


class NodePayload(NamedTuple):
    cnt: int
    uni: float
    clq: int


PAYLOAD = np.dtype([("cnt", np.int64), ("uni", np.float64), ("clq", np.int64)])


@njit(cache=True)
def _change(v, k, tree):
    c = tree[v].cnt + k
    if c < 0:
        raise InvariantError("negative count: interval was never inserted")
    tree[v].cnt = c


@njit(cache=True)
def _update(v, n, x, tree):
    lo, hi, y = _span(v, n)
    c = tree[v].cnt
    if c > 0 and y:
        raise InvariantError("Y node holds a positive count")
    if hi - lo == 1:
        tree[v].clq = c
        tree[v].uni = x[hi] - x[lo] if c > 0 else 0.0
    else:
        # record locals are materialized copies in numba; index directly
        tree[v].clq = c + max(tree[2 * v].clq, tree[2 * v + 1].clq)
        if c > 0:
            tree[v].uni = x[hi] - x[lo]
        else:
            tree[v].uni = tree[2 * v].uni + tree[2 * v + 1].uni


@njit(cache=True)
def _insert_rec(b, e, v, k, n, x, tree):
    # returns the number of nodes visited
    visits = 1
    lo, hi, y = _span(v, n)
    if y:
        visits += _insert_rec(b, e, 2 * v, k, n, x, tree)
        visits += _insert_rec(b, e, 2 * v + 1, k, n, x, tree)
    else:
        if b >= hi or e <= lo:
            return visits
        if b <= lo and hi <= e:
            _change(v, k, tree)
        else:
            m = (lo + hi) // 2
            if b < m:
                visits += _insert_rec(b, e, 2 * v, k, n, x, tree)
            if m < e:
                visits += _insert_rec(b, e, 2 * v + 1, k, n, x, tree)
    _update(v, n, x, tree)
    return visits


@njit(cache=True)
def _stab_rec(q, v, n, x, tree):
    lo, hi, y = _span(v, n)
    if y:
        return _stab_rec(q, 2 * v, n, x, tree) + _stab_rec(q, 2 * v + 1, n, x, tree)
    if not (x[lo] < q <= x[hi]):
        return 0
    c = tree[v].cnt
    if hi - lo > 1:
        m = (lo + hi) // 2
        if q <= x[m]:
            c += _stab_rec(q, 2 * v, n, x, tree)
        else:
            c += _stab_rec(q, 2 * v + 1, n, x, tree)
    return c


class HeapSegmentTree:
    """Segment tree over a fixed endpoint array ``x[0..N]``.

    Nothing is built up front: all payloads start at zero and every structural
    question is answered by :mod:`heapseg.layout`.  ``live`` tracks the
    multiset of inserted ``(b, e)`` pairs so that deleting an interval that was
    never inserted raises instead of corrupting counts.
    """

    def __init__(self, x: Sequence[float]):
        x = np.ascontiguousarray(x, dtype=np.float64)
        if x.ndim != 1 or len(x) < 2:
            raise ValueError("need at least two endpoints (N >= 1)")
        if not np.all(np.isfinite(x)):
            raise ValueError("endpoints must be finite")
        if np.any(x[1:] < x[:-1]):
            raise ValueError("endpoints must be sorted non-decreasing")
        self.x = x
        self.n = len(x) - 1
        self.tree = np.zeros(2 * self.n, dtype=PAYLOAD)
        self.cnt = self.tree["cnt"]
        self.uni = self.tree["uni"]
        self.clq = self.tree["clq"]
        self.live: Counter[tuple[int, int]] = Counter()
        self.last_visits = 0

    def __len__(self) -> int:
        # payload slots actually addressable; slot 0 is padding
        return 2 * self.n - 1

    def __repr__(self) -> str:
        return f"HeapSegmentTree(N={self.n}, live={sum(self.live.values())})"

    def payload(self, v: int) -> NodePayload:
        self._check_node(v)
        return NodePayload(int(self.cnt[v]), float(self.uni[v]), int(self.clq[v]))

    def _check_node(self, v: int) -> None:
        if not 1 <= v <= 2 * self.n - 1:
            raise IndexError(f"node {v} outside [1, {2 * self.n - 1}]")

    def _check_interval(self, b: int, e: int) -> None:
        if not 0 <= b < e <= self.n:
            raise ValueError(f"need 0 <= b < e <= {self.n}, got ({b}, {e})")

    def _admit(self, b: int, e: int) -> None:
        self._check_interval(b, e)
        self.live[(b, e)] += 1

    def _retire(self, b: int, e: int) -> None:
        self._check_interval(b, e)
        if self.live[(b, e)] <= 0:
            del self.live[(b, e)]
            raise ValueError(f"interval ({b}, {e}) is not currently inserted")
        self.live[(b, e)] -= 1
        if not self.live[(b, e)]:
            del self.live[(b, e)]

    # single-node primitives

    def change(self, v: int, k: int) -> None:
        self._check_node(v)
        if k not in (1, -1):
            raise ValueError("k must be +1 or -1")
        _change(v, k, self.tree)

    def update(self, v: int) -> None:
        self._check_node(v)
        _update(v, self.n, self.x, self.tree)

    # top-down strategy

    def insert_recursive(self, b: int, e: int) -> None:
        self._admit(b, e)
        self.last_visits = _insert_rec(b, e, 1, 1, self.n, self.x, self.tree)

    def delete_recursive(self, b: int, e: int) -> None:
        self._retire(b, e)
        self.last_visits = _insert_rec(b, e, 1, -1, self.n, self.x, self.tree)

    def stab_recursive(self, q: float) -> int:
        return int(_stab_rec(float(q), 1, self.n, self.x, self.tree))

    # O(1) summaries

    def union_measure(self) -> float:
        return float(self.uni[1])

    def max_clique(self) -> int:
        return int(self.clq[1])

    def is_clear(self) -> bool:
        return not (self.cnt.any() or self.uni.any() or self.clq.any())


def canonical_covering(n: int, b: int, e: int, strategy: str = "recursive") -> list[int]:
    """Nodes that receive ``(b, e)`` when inserted into an empty tree over ``N``."""
    tree = HeapSegmentTree(np.arange(n + 1, dtype=np.float64))
    if strategy == "recursive":
        tree.insert_recursive(b, e)
    else:
        from .bottom_up import insert_iterative

        insert_iterative(tree, b, e)
    return [int(v) for v in np.flatnonzero(tree.cnt)]
