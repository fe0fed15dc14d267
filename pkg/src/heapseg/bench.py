"""Replay a seeded workload through each implementation and time it.

Each implementation replays the same trace from an empty tree; timings are
taken around runs of consecutive same-kind operations and the best of
``repeat`` replays is reported.  Before reporting, the end states (and every
stab answer along the way) must agree across implementations.
"""
from __future__ import annotations

import itertools
import json
import logging
import random
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .bottom_up import delete_iterative, insert_iterative, stab_iterative
from .heap_tree import HeapSegmentTree
from .interval_io import OP_KINDS, Op, Workload, generate, normalize
from .reference_tree import LinkedSegmentTree

log = logging.getLogger(__name__)

IMPLS = ("heap-rec", "heap-iter", "linked")
REPORT_COLUMNS = ("impl", "op", "count", "total_ns", "ns_per_op")


class MismatchError(RuntimeError):
    """Two implementations disagree on an answer or end state."""


def make_impl(name: str, x):
    """Fresh tree plus ``{op kind: callable}`` for implementation ``name``."""
    if name == "heap-rec":
        t = HeapSegmentTree(x)
        return t, {"insert": t.insert_recursive, "delete": t.delete_recursive, "stab": t.stab_recursive}
    if name == "heap-iter":
        t = HeapSegmentTree(x)
        return t, {
            "insert": lambda b, e: insert_iterative(t, b, e),
            "delete": lambda b, e: delete_iterative(t, b, e),
            "stab": lambda q: stab_iterative(t, q),
        }
    if name == "linked":
        t = LinkedSegmentTree(x)
        return t, {"insert": t.insert, "delete": t.delete, "stab": t.stab}
    raise ValueError(f"unknown implementation {name!r}; choose from {', '.join(IMPLS)}")


@dataclass
class BenchRow:
    impl: str
    op: str
    count: int
    total_ns: int

    @property
    def ns_per_op(self) -> float:
        return self.total_ns / self.count if self.count else 0.0


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def to_tsv(self) -> str:
        lines = ["\t".join(REPORT_COLUMNS)]
        for r in self.rows:
            lines.append(f"{r.impl}\t{r.op}\t{r.count}\t{r.total_ns}\t{r.ns_per_op:.1f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = [dict(asdict(r), ns_per_op=round(r.ns_per_op, 1)) for r in self.rows]
        return json.dumps({"meta": self.meta, "rows": rows}, indent=2) + "\n"


def _batches(trace: list[Op], mapped) -> list[tuple[str, list]]:
    out = []
    for kind, group in itertools.groupby(trace, key=lambda op: op.kind):
        if kind == "stab":
            out.append((kind, [op.arg for op in group]))
        else:
            out.append((kind, [mapped[op.arg] for op in group]))
    return out


def replay(name: str, x, batches) -> tuple[object, dict[str, int], list[int]]:
    """Run ``batches`` once on a fresh tree; returns (tree, ns per kind, stab answers)."""
    tree, fns = make_impl(name, x)
    totals = dict.fromkeys(OP_KINDS, 0)
    answers: list[int] = []
    clock = time.perf_counter_ns
    for kind, args in batches:
        fn = fns[kind]
        if kind == "stab":
            t0 = clock()
            answers.extend([fn(q) for q in args])
        else:
            t0 = clock()
            for b, e in args:
                fn(b, e)
        totals[kind] += clock() - t0
    return tree, totals, answers


def check_agreement(trees: dict, answers: dict, seed: int = 0, probes: int = 1000) -> None:
    """Raise :class:`MismatchError` unless all implementations ended identically."""
    names = list(trees)
    ref = names[0]
    for name in names[1:]:
        if answers[name] != answers[ref]:
            bad = next(i for i, (a, b) in enumerate(zip(answers[name], answers[ref])) if a != b)
            raise MismatchError(f"{name} and {ref} disagree on stab #{bad}")
        if trees[name].live != trees[ref].live:
            raise MismatchError(f"{name} and {ref} hold different interval multisets")
    heaps = [n for n in names if isinstance(trees[n], HeapSegmentTree)]
    for name in heaps[1:]:
        a, b = trees[heaps[0]], trees[name]
        if not np.array_equal(a.cnt, b.cnt):
            raise MismatchError(f"{name} and {heaps[0]} have different counts")
        if not (np.allclose(a.uni, b.uni, rtol=1e-12, atol=0) and np.array_equal(a.clq, b.clq)):
            raise MismatchError(f"{name} and {heaps[0]} have different union/clique payloads")
    if len(names) > 1:
        x = trees[ref].x
        rng = random.Random(seed)
        qs = [float(x[0]), float(x[-1])] + [rng.uniform(float(x[0]), float(x[-1])) for _ in range(probes)]
        stabbers = {n: make_stabber(trees[n]) for n in names}
        for q in qs:
            got = {n: s(q) for n, s in stabbers.items()}
            if len(set(got.values())) > 1:
                raise MismatchError(f"end-state stab at {q!r} disagrees: {got}")


def make_stabber(tree):
    if isinstance(tree, HeapSegmentTree):
        return lambda q: stab_iterative(tree, q)
    return tree.stab


def run_bench(workload: Workload, impls: list[str], repeat: int = 3, warmup: int = 1000) -> BenchReport:
    for name in impls:
        if name not in IMPLS:
            raise ValueError(f"unknown implementation {name!r}; choose from {', '.join(IMPLS)}")
    intervals, trace = generate(workload)
    x, mapped = normalize(intervals)
    meta = {
        "seed": workload.seed,
        "n": workload.n,
        "N": max(len(x) - 1, 0),
        "ops": len(trace),
        "repeat": repeat,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }
    report = BenchReport(meta=meta)
    if not trace:
        return report
    batches = _batches(trace, mapped)
    warm = _batches(trace[:warmup], mapped)
    trees, answers = {}, {}
    for name in impls:
        replay(name, x, warm)
        best = None
        for _ in range(max(1, repeat)):
            tree, totals, ans = replay(name, x, batches)
            best = totals if best is None else {k: min(best[k], totals[k]) for k in totals}
        log.info("%s: %s", name, best)
        trees[name], answers[name] = tree, ans
        counts = {k: sum(1 for op in trace if op.kind == k) for k in OP_KINDS}
        for kind in OP_KINDS:
            if counts[kind]:
                report.rows.append(BenchRow(name, kind, counts[kind], best[kind]))
    check_agreement(trees, answers, seed=workload.seed)
    return report
