"""Structural algebra of the implicit heap layout.

A heap-ordered segment tree over ``N`` elementary intervals has ``2N - 1``
nodes numbered ``1..2N-1`` in breadth-first order; leaves are ``N..2N-1`` and
leaf ``N + i`` holds the elementary interval ``[i, i+1]``.  Everything a
linked segment tree stores per node (height, endpoint range, child split) is
recovered here from the node number and ``N`` alone, with integer bit
operations only.

The underscore-prefixed functions are numba kernels shared with the tree
kernels in :mod:`heapseg.heap_tree` and :mod:`heapseg.bottom_up`; they skip
argument validation.  The public functions validate and return Python objects.
"""
from __future__ import annotations

from enum import Enum

from numba import njit
from numba.cpython.unsafe.numbers import leading_zeros as _clz
from numba.cpython.unsafe.numbers import trailing_zeros as _cttz

from .interval_io import IndexInterval


class NodeKind(str, Enum):
    C = "C"
    Y = "Y"
    LEAF = "Leaf"


@njit(cache=True)
def _floor_log2(v):
    # index of the most significant set bit, v >= 1
    return 63 - _clz(v)


@njit(cache=True)
def _trailing_zeros(n):
    return _cttz(n)


@njit(cache=True)
def _lowest_y(n):
    return n >> (1 + _trailing_zeros(n))


@njit(cache=True)
def _height(x, n):
    if x >= n:
        return 0
    k = _floor_log2(n) - _floor_log2(x)
    if (x << k) < n:
        k += 1
    return k


@njit(cache=True)
def _is_y(x, n):
    y = _lowest_y(n)
    if y == 0:
        return False
    dx = _floor_log2(x)
    dy = _floor_log2(y)
    if dx > dy:
        return False
    return (y >> (dy - dx)) == x


@njit(cache=True)
def _left_end(x, n):
    return (x << _height(x, n)) - n


@njit(cache=True)
def _right_end(x, n):
    h = _height(x, n)
    if _is_y(x, n):
        h -= 1
    return ((x + 1) << h) - n


@njit(cache=True)
def _span(x, n):
    # (left_end, right_end, is_y) with shared work; n >= 1, 1 <= x < 2n
    h = _height(x, n)
    y = _is_y(x, n)
    hr = h - 1 if y else h
    return (x << h) - n, ((x + 1) << hr) - n, y


def _check_universe(n: int) -> None:
    if n < 1:
        raise ValueError(f"universe size must be >= 1, got {n}")


def _check_node(x: int, n: int) -> None:
    _check_universe(n)
    if not 1 <= x <= 2 * n - 1:
        raise IndexError(f"node {x} outside [1, {2 * n - 1}] for N={n}")


def trailing_zeros(n: int) -> int:
    """Number of trailing zero bits of ``n``."""
    _check_universe(n)
    return int(_trailing_zeros(n))


def lowest_y_node(n: int) -> int | None:
    """Deepest node whose subtree is nearly complete but not complete.

    ``None`` when ``n`` is a power of two (the tree is perfect).
    """
    _check_universe(n)
    y = int(_lowest_y(n))
    return y or None


def node_kind(x: int, n: int) -> NodeKind:
    _check_node(x, n)
    if x >= n:
        return NodeKind.LEAF
    return NodeKind.Y if _is_y(x, n) else NodeKind.C


def height(x: int, n: int) -> int:
    """Height of the subtree rooted at ``x``: least ``k`` with ``x * 2**k >= n``."""
    _check_node(x, n)
    return int(_height(x, n))


def leftmost_leaf(x: int, n: int) -> int:
    _check_node(x, n)
    return x << int(_height(x, n))


def rightmost_leaf(x: int, n: int) -> int:
    """Rightmost leaf number below ``x``.

    For a Y node this is the last leaf on the shallower row.
    """
    _check_node(x, n)
    h = int(_height(x, n))
    if _is_y(x, n):
        h -= 1
    return ((x + 1) << h) - 1


def left_end(x: int, n: int) -> int:
    _check_node(x, n)
    return int(_left_end(x, n))


def right_end(x: int, n: int) -> int:
    _check_node(x, n)
    return int(_right_end(x, n))


def standard_region(x: int, n: int) -> tuple[IndexInterval, ...]:
    """Endpoint-index coverage of node ``x`` as ascending pieces.

    C nodes cover one contiguous piece.  Y nodes cover ``[0, right_end]``
    (their shallow leaves) and ``[left_end, N]`` (their deep leaves); at the
    root the two pieces touch.
    """
    _check_node(x, n)
    lo, hi = int(_left_end(x, n)), int(_right_end(x, n))
    if _is_y(x, n):
        return IndexInterval(0, hi), IndexInterval(lo, n)
    return (IndexInterval(lo, hi),)
