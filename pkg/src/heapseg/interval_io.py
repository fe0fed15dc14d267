"""Interval ingestion, normalization to endpoint indices, and synthetic workloads."""
from __future__ import annotations

import bisect
import io
import json
import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, NamedTuple


class Interval(NamedTuple):
    l: float
    r: float


class IndexInterval(NamedTuple):
    """Interval expressed as indices ``(b, e)`` into the sorted endpoint array."""

    b: int
    e: int

    @property
    def degenerate(self) -> bool:
        return self.b == self.e


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _coerce(l, r, lineno=None) -> Interval:
    where = f"line {lineno}: " if lineno is not None else ""
    try:
        lf, rf = float(l), float(r)
    except (TypeError, ValueError):
        raise ParseError(lineno or 0, f"non-numeric coordinate in {l!r}, {r!r}") from None
    if not (math.isfinite(lf) and math.isfinite(rf)):
        raise ValueError(f"{where}non-finite coordinate in ({lf}, {rf})")
    if lf > rf:
        raise ValueError(f"{where}left end {lf} exceeds right end {rf}")
    return Interval(lf, rf)


def make_intervals(pairs: Iterable[tuple[float, float]]) -> list[Interval]:
    return [_coerce(l, r) for l, r in pairs]


def _open(source) -> IO[str]:
    if isinstance(source, (str, Path)):
        return open(source, encoding="utf-8")
    return source


def _infer_format(source, fmt: str | None) -> str:
    if fmt:
        return fmt
    if isinstance(source, (str, Path)) and str(source).endswith((".jsonl", ".json")):
        return "jsonl"
    return "csv"


def parse(source, fmt: str | None = None) -> list[Interval]:
    """Read intervals from a path or text stream.

    CSV rows are ``l,r``; blank lines and ``#`` comments are skipped.  JSONL
    rows are objects with ``l`` and ``r`` fields.  Errors name the 1-based line.
    """
    fmt = _infer_format(source, fmt)
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown format {fmt!r}")
    stream = _open(source)
    out = []
    try:
        for lineno, raw in enumerate(stream, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if fmt == "csv":
                fields = [f.strip() for f in line.split(",")]
                if len(fields) != 2:
                    raise ParseError(lineno, f"expected 2 fields, got {len(fields)}")
                out.append(_coerce(fields[0], fields[1], lineno))
            else:
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ParseError(lineno, f"bad JSON ({exc.msg})") from None
                if not isinstance(obj, dict) or "l" not in obj or "r" not in obj:
                    raise ParseError(lineno, "expected an object with fields l and r")
                if isinstance(obj["l"], bool) or isinstance(obj["r"], bool):
                    raise ParseError(lineno, "boolean coordinate")
                out.append(_coerce(obj["l"], obj["r"], lineno))
    finally:
        if stream is not source:
            stream.close()
    return out


def serialize(intervals: Iterable[tuple[float, float]], fmt: str = "csv") -> str:
    buf = io.StringIO()
    for l, r in intervals:
        if fmt == "csv":
            buf.write(f"{float(l)!r},{float(r)!r}\n")
        elif fmt == "jsonl":
            buf.write(json.dumps({"l": float(l), "r": float(r)}) + "\n")
        else:
            raise ValueError(f"unknown format {fmt!r}")
    return buf.getvalue()


def normalize(intervals: Iterable[tuple[float, float]]) -> tuple[list[float], list[IndexInterval]]:
    """Sorted endpoint array (duplicates kept) and per-interval index pairs.

    Each endpoint maps to its first occurrence in the array, so ``(x[b], x[e]]``
    is the same point set as ``(l, r]`` even when coordinates repeat.
    """
    items = [_coerce(l, r) for l, r in intervals]
    x = sorted(c for it in items for c in it)
    mapped = [IndexInterval(bisect.bisect_left(x, l), bisect.bisect_left(x, r)) for l, r in items]
    return x, mapped


# --- synthetic workloads ----------------------------------------------------

OP_KINDS = ("insert", "delete", "stab")


class Op(NamedTuple):
    kind: str
    arg: float  # interval number for insert/delete, coordinate for stab


@dataclass(frozen=True)
class Workload:
    seed: int = 0
    n: int = 1000
    ops: int = 10000
    insert_ratio: float = 0.45
    delete_ratio: float = 0.35
    stab_ratio: float = 0.20
    dist: str = "uniform"  # "uniform" reals or "grid" integers (forces duplicates)
    span: float = 1e6
    max_len: float = 1e4

    def __post_init__(self):
        if self.n < 0 or self.ops < 0:
            raise ValueError("n and ops must be non-negative")
        if min(self.insert_ratio, self.delete_ratio, self.stab_ratio) < 0:
            raise ValueError("ratios must be non-negative")
        if self.dist not in ("uniform", "grid"):
            raise ValueError(f"unknown distribution {self.dist!r}")


def _draw_interval(rng: random.Random, w: Workload) -> Interval:
    if w.dist == "grid":
        l = float(rng.randrange(int(w.span)))
        return Interval(l, l + rng.randint(1, max(1, int(w.max_len))))
    l = rng.uniform(0.0, w.span)
    length = rng.uniform(0.0, w.max_len)
    while length == 0.0:
        length = rng.uniform(0.0, w.max_len)
    return Interval(l, l + length)


def generate(w: Workload) -> tuple[list[Interval], list[Op]]:
    """Interval set plus an operation trace, fully determined by ``w``.

    Deletes only ever name a currently inserted interval; when nothing is live
    a drawn delete becomes an insert.  Generated intervals are never degenerate.
    """
    rng = random.Random(w.seed)
    intervals = [_draw_interval(rng, w) for _ in range(w.n)]
    trace: list[Op] = []
    if w.n == 0:
        return intervals, trace
    weights = (w.insert_ratio, w.delete_ratio, w.stab_ratio)
    if sum(weights) <= 0:
        raise ValueError("at least one ratio must be positive")
    lo = min(iv.l for iv in intervals)
    hi = max(iv.r for iv in intervals)
    live: list[int] = []
    for _ in range(w.ops):
        kind = rng.choices(OP_KINDS, weights)[0]
        if kind == "delete" and not live:
            kind = "insert"
        if kind == "insert":
            i = rng.randrange(w.n)
            live.append(i)
            trace.append(Op("insert", i))
        elif kind == "delete":
            j = rng.randrange(len(live))
            live[j], live[-1] = live[-1], live[j]
            trace.append(Op("delete", live.pop()))
        else:
            trace.append(Op("stab", rng.uniform(lo - 1.0, hi + 1.0)))
    return intervals, trace


def dump_trace(trace: Iterable[Op]) -> str:
    return "".join(json.dumps([op.kind, op.arg]) + "\n" for op in trace)
