"""Seeded uniform-square experiments and naive-vs-fast timing.

Random streams come from numpy's PCG64 seeded through ``SeedSequence(seed,
spawn_key=(tag,))``; data points use tag 0 and query points tag 1, so the two
set sizes can change independently without disturbing each other's draws.
"""

from __future__ import annotations

import json
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .simplicial import simplicial_depth
from .spherical import DataSet, spherical_depth_fast2d, spherical_depth_naive

DATA_STREAM = 0
QUERY_STREAM = 1

# Ratio marker for queries outside every triangle (SD = 0).
INF = "inf"


@dataclass(frozen=True)
class ExperimentConfig:
    n_data: int = 750
    n_queries: int = 100
    seed: int = 42
    bounds: tuple[float, float] = (-10.0, 10.0)

    def __post_init__(self):
        if self.n_data < 3:
            raise ValueError("n_data must be at least 3")
        if self.n_queries < 1:
            raise ValueError("n_queries must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        lo, hi = self.bounds
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError("bounds must be finite with low < high")


def rng_for(seed: int, stream_tag: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream_tag,))))


def generate_uniform_square(count: int, cfg: ExperimentConfig, stream_tag: int) -> DataSet:
    if count < 0:
        raise ValueError("count must be nonnegative")
    lo, hi = cfg.bounds
    pts = rng_for(cfg.seed, stream_tag).uniform(lo, hi, size=(count, 2))
    return DataSet(pts.reshape(count, 2))


@dataclass(frozen=True)
class QueryRow:
    query: tuple[float, float]
    sd: float
    sphd: float
    ratio: float | str
    sd_method: str


@dataclass
class ExperimentSummary:
    config: ExperimentConfig
    rows: list[QueryRow] = field(default_factory=list)

    @property
    def finite_ratios(self) -> list[float]:
        return [r.ratio for r in self.rows if r.ratio != INF]

    @property
    def n_infinite(self) -> int:
        return sum(1 for r in self.rows if r.ratio == INF)

    def stats(self) -> dict:
        sd = [r.sd for r in self.rows]
        sphd = [r.sphd for r in self.rows]
        ratios = self.finite_ratios
        return {
            "sd": {"min": min(sd), "max": max(sd)},
            "sphd": {"min": min(sphd), "max": max(sphd)},
            "ratio": {
                "min": min(ratios) if ratios else None,
                "max": max(ratios) if ratios else None,
                "n_infinite": self.n_infinite,
            },
        }

    def to_dict(self) -> dict:
        c = self.config
        return {
            "config": {"n_data": c.n_data, "n_queries": c.n_queries, "seed": c.seed, "bounds": list(c.bounds)},
            "summary": self.stats(),
            "per_query": [
                {"query": list(r.query), "sd": r.sd, "sphd": r.sphd, "ratio": r.ratio, "sd_method": r.sd_method}
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        st = self.stats()
        rmin = st["ratio"]["min"]
        rmax = INF if st["ratio"]["n_infinite"] else st["ratio"]["max"]

        def fmt(v):
            if v is None:
                return "-"
            if v == INF:
                return "inf"
            return f"{v:.2f}"

        c = self.config
        lines = [
            f"n_data={c.n_data} n_queries={c.n_queries} seed={c.seed} bounds={list(c.bounds)}",
            f"{'':<8}{'Min':>8}{'Max':>8}",
            f"{'SD':<8}{fmt(st['sd']['min']):>8}{fmt(st['sd']['max']):>8}",
            f"{'SphD':<8}{fmt(st['sphd']['min']):>8}{fmt(st['sphd']['max']):>8}",
            f"{'SphD/SD':<8}{fmt(rmin):>8}{fmt(rmax):>8}",
            f"queries with SD = 0: {st['ratio']['n_infinite']}",
        ]
        return "\n".join(lines) + "\n"


def run_experiment(cfg: ExperimentConfig, queries: Sequence[Sequence[float]] | None = None) -> ExperimentSummary:
    """Simplicial and spherical depth of every query against one data set.

    ``queries`` overrides the generated query stream.
    """
    data = generate_uniform_square(cfg.n_data, cfg, DATA_STREAM)
    if queries is None:
        qs = generate_uniform_square(cfg.n_queries, cfg, QUERY_STREAM).points
    else:
        qs = np.asarray(queries, dtype=float).reshape(-1, 2)
    summary = ExperimentSummary(cfg)
    for q in qs:
        sd_res, method = simplicial_depth(q, data)
        sphd = spherical_depth_fast2d(q, data).depth
        sd = sd_res.depth
        ratio = sphd / sd if sd > 0 else INF
        summary.rows.append(QueryRow((float(q[0]), float(q[1])), sd, sphd, ratio, method))
    return summary


@dataclass(frozen=True)
class BenchRow:
    n: int
    naive_ms: float | None
    fast_ms: float
    agree: bool | None


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def to_table(self) -> str:
        out = [f"{'n':>10}  {'naive_ms':>12}  {'fast_ms':>10}  agree"]
        for r in self.rows:
            naive = "-" if r.naive_ms is None else f"{r.naive_ms:.3f}"
            agree = "-" if r.agree is None else str(r.agree).lower()
            out.append(f"{r.n:>10}  {naive:>12}  {r.fast_ms:>10.3f}  {agree}")
        return "\n".join(out) + "\n"


def median_time(fn, repeats: int = 3):
    """Median wall-clock milliseconds of ``fn()`` and its last return value."""
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append((time.perf_counter() - t0) * 1e3)
    return statistics.median(times), result


def run_bench(sizes: Sequence[int], cfg: ExperimentConfig, naive_cutoff: int, repeats: int = 3) -> BenchReport:
    if not sizes or any(n < 2 for n in sizes):
        raise ValueError("sizes must be integers >= 2")
    repeats = max(repeats, 3)
    report = BenchReport()
    for n in sizes:
        # the stream tag carries the size so every n gets its own draw
        data = generate_uniform_square(n, cfg, DATA_STREAM + 2 * n)
        q = generate_uniform_square(1, cfg, QUERY_STREAM + 2 * n).points[0]
        fast_ms, fast = median_time(lambda: spherical_depth_fast2d(q, data), repeats)
        naive_ms = agree = None
        if n <= naive_cutoff:
            naive_ms, naive = median_time(lambda: spherical_depth_naive(q, data), repeats)
            agree = naive.count == fast.count
        report.rows.append(BenchRow(n, naive_ms, fast_ms, agree))
    return report
