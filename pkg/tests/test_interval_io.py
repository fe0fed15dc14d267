import io
import math

import pytest
from hypothesis import given, strategies as st

from heapseg.interval_io import (
    IndexInterval,
    Interval,
    ParseError,
    Workload,
    dump_trace,
    generate,
    make_intervals,
    normalize,
    parse,
    serialize,
)

from helpers import FIXTURE


def test_normalize_fixture():
    x, mapped = normalize(FIXTURE)
    assert x == [1, 2, 3, 4, 5, 6]
    assert mapped == [(0, 3), (1, 5), (2, 4)]


def test_normalize_duplicates_map_to_first_occurrence():
    x, mapped = normalize([(1, 2), (2, 3)])
    assert x == [1, 2, 2, 3]
    assert mapped == [IndexInterval(0, 1), IndexInterval(1, 3)]


def test_normalize_degenerate():
    x, mapped = normalize([(3, 3)])
    assert x == [3, 3]
    assert mapped[0].degenerate


@pytest.mark.parametrize("bad", [[(2, 1)], [(0, math.inf)], [(math.nan, 1)]])
def test_normalize_rejects(bad):
    with pytest.raises(ValueError):
        normalize(bad)


def test_parse_csv():
    text = "# header\n1,4\n\n2, 6\n3,5\n"
    assert parse(io.StringIO(text)) == [Interval(1, 4), Interval(2, 6), Interval(3, 5)]


def test_parse_jsonl():
    text = '{"l": 1, "r": 4}\n{"l": 2.5, "r": 6}\n'
    assert parse(io.StringIO(text), "jsonl") == [(1.0, 4.0), (2.5, 6.0)]


@pytest.mark.parametrize("text, fmt, lineno", [
    ("1,4\n1,2,3\n", "csv", 2),
    ("1,4\nabc,3\n", "csv", 2),
    ('{"l": 1}\n', "jsonl", 1),
    ("{nope\n", "jsonl", 1),
    ('{"l": true, "r": 2}\n', "jsonl", 1),
])
def test_parse_errors_name_line(text, fmt, lineno):
    with pytest.raises(ParseError) as exc:
        parse(io.StringIO(text), fmt)
    assert exc.value.lineno == lineno


def test_parse_reversed_is_value_error():
    with pytest.raises(ValueError, match="line 1"):
        parse(io.StringIO("5,1\n"))


def test_parse_path_infers_format(tmp_path):
    p = tmp_path / "a.jsonl"
    p.write_text('{"l": 0, "r": 1}\n')
    assert parse(p) == [(0.0, 1.0)]


finite = st.floats(-1e12, 1e12, allow_nan=False)
pairs = st.lists(st.tuples(finite, finite).map(lambda t: tuple(sorted(t))), max_size=20)


@given(pairs, st.sampled_from(["csv", "jsonl"]))
def test_round_trip(ivs, fmt):
    assert parse(io.StringIO(serialize(ivs, fmt)), fmt) == make_intervals(ivs)


@given(pairs)
def test_normalize_preserves_point_sets(ivs):
    x, mapped = normalize(ivs)
    assert x == sorted(x) and len(x) == 2 * len(ivs)
    for (l, r), (b, e) in zip(ivs, mapped):
        assert x[b] == l and x[e] == r


def test_generate_deterministic():
    w = Workload(seed=7, n=50, ops=500)
    assert generate(w) == generate(w)
    assert generate(w) != generate(Workload(seed=8, n=50, ops=500))


@pytest.mark.parametrize("dist", ["uniform", "grid"])
def test_generate_deletes_reference_live(dist):
    ivs, trace = generate(Workload(seed=1, n=20, ops=2000, dist=dist, span=100, max_len=10))
    assert all(l < r for l, r in ivs)
    live = []
    for op in trace:
        if op.kind == "insert":
            live.append(op.arg)
        elif op.kind == "delete":
            live.remove(op.arg)
    kinds = {op.kind for op in trace}
    assert kinds == {"insert", "delete", "stab"}


def test_generate_empty():
    assert generate(Workload(n=0, ops=100)) == ([], [])
    ivs, trace = generate(Workload(n=5, ops=0))
    assert len(ivs) == 5 and trace == []


def test_workload_validation():
    with pytest.raises(ValueError):
        Workload(dist="zipf")
    with pytest.raises(ValueError):
        Workload(n=-1)


def test_dump_trace():
    _, trace = generate(Workload(seed=2, n=3, ops=4))
    assert len(dump_trace(trace).splitlines()) == 4
