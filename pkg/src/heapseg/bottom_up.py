"""Non-recursive, leaf-anchored operations on a :class:`HeapSegmentTree`.

Insertion climbs from the two boundary leaves ``b + N`` and ``e - 1 + N``
toward the root, assigning the interval to every node that leaves the
shrinking cursor range, then refreshes the two boundary ancestor chains.
Both strategies assign exactly the same node sets, so an interval inserted one
way may be deleted the other way.
"""
from __future__ import annotations

from numba import njit

from .heap_tree import HeapSegmentTree, _change, _update
from .layout import _is_y


@njit(cache=True)
def _modify(v, k, n, x, tree):
    _change(v, k, tree)
    _update(v, n, x, tree)


@njit(cache=True)
def _pushup(v, n, x, tree):
    steps = 0
    while v > 0:
        _update(v, n, x, tree)
        v //= 2
        steps += 1
    return steps


@njit(cache=True)
def _climb(b, e, k, n, x, tree):
    # returns the number of nodes modified or refreshed
    lo = b + n
    hi = e - 1 + n
    s = lo // 2
    t = hi // 2
    visits = 0
    while lo <= hi:
        if lo & 1:
            _modify(lo, k, n, x, tree)
            lo += 1
            visits += 1
        if not hi & 1:
            _modify(hi, k, n, x, tree)
            hi -= 1
            visits += 1
        lo //= 2
        hi //= 2
    visits += _pushup(s, n, x, tree)
    visits += _pushup(t, n, x, tree)
    return visits


@njit(cache=True)
def _bsearch(q, x):
    # first j with x[j] >= q, over x[1..N]; caller guarantees x[0] < q <= x[N]
    lo = 1
    hi = len(x) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if x[mid] >= q:
            hi = mid
        else:
            lo = mid + 1
    return lo


@njit(cache=True)
def _stab_iter(q, n, x, tree):
    if not (x[0] < q <= x[n]):
        return 0
    v = _bsearch(q, x) - 1 + n
    a = 0
    # every ancestor of a Y node is Y, and Y nodes never hold counts
    while v >= 1 and not _is_y(v, n):
        a += tree[v].cnt
        v //= 2
    return a


def modify(tree: HeapSegmentTree, v: int, k: int) -> None:
    tree._check_node(v)
    if k not in (1, -1):
        raise ValueError("k must be +1 or -1")
    _modify(v, k, tree.n, tree.x, tree.tree)


def pushup(tree: HeapSegmentTree, v: int) -> None:
    """Refresh ``v`` and all its ancestors; ``v = 0`` is a no-op."""
    if v != 0:
        tree._check_node(v)
    _pushup(v, tree.n, tree.x, tree.tree)


def insert_iterative(tree: HeapSegmentTree, b: int, e: int) -> None:
    tree._admit(b, e)
    tree.last_visits = _climb(b, e, 1, tree.n, tree.x, tree.tree)


def delete_iterative(tree: HeapSegmentTree, b: int, e: int) -> None:
    tree._retire(b, e)
    tree.last_visits = _climb(b, e, -1, tree.n, tree.x, tree.tree)


def stab_iterative(tree: HeapSegmentTree, q: float) -> int:
    return int(_stab_iter(float(q), tree.n, tree.x, tree.tree))
