"""Scaling harness: median test time over random instances of growing size."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass

from .generators import gen_random_ipsp
from .tester import test

DEFAULT_SIZES = (2**14, 2**15, 2**16, 2**17)


@dataclass
class BenchRow:
    n: int
    elapsed_ms: float
    computations: int
    tree_edges: int


def run_bench(sizes=DEFAULT_SIZES, runs: int = 5, seed: int = 1) -> list[BenchRow]:
    """One random instance per size; ``elapsed_ms`` is the median of ``runs`` tests."""
    rows = []
    for i, n in enumerate(sizes):
        g = gen_random_ipsp(n, seed + i)
        times = []
        report = None
        for _ in range(runs):
            # like timeit: keep the cyclic collector out of the measurement
            gc.collect()
            gc.disable()
            try:
                start = time.perf_counter()
                report = test(g)
                times.append((time.perf_counter() - start) * 1000)
            finally:
                gc.enable()
        rows.append(BenchRow(g.n, statistics.median(times), report.computations, report.tree_edges))
    return rows


def ratios(rows: list[BenchRow]) -> list[float]:
    """Raw time ratios between consecutive sizes."""
    return [b.elapsed_ms / a.elapsed_ms for a, b in zip(rows, rows[1:])]


def to_csv(rows: list[BenchRow]) -> str:
    lines = ["n,elapsed_ms"]
    lines.extend(f"{r.n},{r.elapsed_ms:.3f}" for r in rows)
    return "\n".join(lines) + "\n"
