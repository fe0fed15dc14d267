import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from heapseg.heap_tree import InvariantError
from heapseg.reference_tree import (
    LinkedSegmentTree,
    build,
    canonical_covering,
    delete,
    insert,
    iter_nodes,
)


def by_number(root):
    return {v.number: v for v in iter_nodes(root)}


def test_build_n13():
    root = build(0, 13)
    assert root.key == 6
    assert (root.left.b, root.left.e) == (0, 6)
    assert (root.right.b, root.right.e) == (6, 13)
    assert sum(1 for _ in iter_nodes(root)) == 25


def test_build_single_leaf():
    root = build(0, 1)
    assert root.is_leaf and (root.b, root.e) == (0, 1)


def test_build_balanced():
    root = build(0, 4)
    nodes = list(iter_nodes(root))
    assert len(nodes) == 7
    assert sorted((v.b, v.e) for v in nodes if v.is_leaf) == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_build_rejects_empty():
    with pytest.raises(ValueError):
        build(3, 3)


@given(st.integers(0, 50), st.integers(1, 50))
def test_node_invariants(s, width):
    root = build(s, s + width)
    nodes = list(iter_nodes(root))
    assert len(nodes) == 2 * width - 1
    for v in nodes:
        assert v.b < v.e
        assert v.is_leaf == (v.e == v.b + 1) == (v.right is None)
        if not v.is_leaf:
            assert v.key == (v.b + v.e) // 2
            assert (v.left.b, v.left.e, v.right.b, v.right.e) == (v.b, v.key, v.key, v.e)


def test_fig1_covering():
    root = build(0, 13)
    assert canonical_covering(2, 5, root) == [10, 19, 22]
    assert canonical_covering(0, 13, root) == [1]
    assert canonical_covering(0, 3, root) == [4]
    leaf = canonical_covering(0, 1, root)
    assert len(leaf) == 1 and by_number(root)[leaf[0]].is_leaf


def test_insert_delete_counts():
    root = build(0, 13)
    nodes = by_number(root)
    assert sorted(insert(2, 5, root)) == [10, 19, 22]
    insert(2, 5, root)
    delete(2, 5, root)
    assert {v.number for v in nodes.values() if v.cnt} == {10, 19, 22}
    assert all(nodes[k].cnt == 1 for k in (10, 19, 22))
    delete(2, 5, root)
    assert all(v.cnt == 0 for v in nodes.values())


def test_delete_never_inserted():
    root = build(0, 13)
    with pytest.raises(InvariantError):
        delete(2, 5, root)
    assert all(v.cnt == 0 for v in iter_nodes(root))


def test_bad_interval():
    root = build(0, 13)
    for b, e in [(5, 5), (6, 2), (0, 14), (-1, 3)]:
        with pytest.raises(ValueError):
            insert(b, e, root)


@st.composite
def universe_and_interval(draw):
    n = draw(st.integers(1, 300))
    b = draw(st.integers(0, n - 1))
    return n, b, draw(st.integers(b + 1, n))


@given(universe_and_interval())
def test_covering_tiles_interval(case):
    n, b, e = case
    root = build(0, n)
    nodes = by_number(root)
    cover = canonical_covering(b, e, root)
    spans = sorted((nodes[k].b, nodes[k].e) for k in cover)
    assert spans[0][0] == b and spans[-1][1] == e
    assert all(p[1] == q[0] for p, q in zip(spans, spans[1:]))
    numbers = set(cover)
    assert not any(k ^ 1 in numbers for k in cover if k > 1)
    per_level = Counter(k.bit_length() for k in cover)
    assert max(per_level.values()) <= 2
    assert len(cover) <= 2 * (n.bit_length())


def test_stab_path_sum_matches_brute_force():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 40)
        x = sorted(rng.uniform(0, 10) for _ in range(n + 1))
        tree = LinkedSegmentTree(x)
        live = []
        for _ in range(30):
            b = rng.randrange(n)
            e = rng.randint(b + 1, n)
            tree.insert(b, e)
            live.append((b, e))
        for _ in range(40):
            q = rng.choice([rng.uniform(-1, 11), rng.choice(x)])
            want = sum(1 for b, e in live if x[b] < q <= x[e])
            assert tree.stab(q) == want


def test_linked_tree_live_tracking():
    tree = LinkedSegmentTree(range(14))
    tree.insert(2, 5)
    tree.delete(2, 5)
    with pytest.raises(ValueError):
        tree.delete(2, 5)
    assert all(v.cnt == 0 for v in iter_nodes(tree.root))
    assert tree.covering(2, 5) == [10, 19, 22]
