"""Doubling-ratio timings for the naive and planar spherical depth routes.

    python scripts/bench_scaling.py
"""

from sphdepth.experiment import ExperimentConfig, run_bench

FAST_SIZES = [25_000, 50_000, 100_000, 200_000, 400_000, 800_000]
NAIVE_SIZES = [2500, 5000, 10_000, 20_000]


def ratios(rows, attr):
    pts = [(r.n, getattr(r, attr)) for r in rows if getattr(r, attr) is not None]
    return [(n2, t2 / t1) for (n1, t1), (n2, t2) in zip(pts, pts[1:])]


def main():
    cfg = ExperimentConfig(seed=42)
    fast = run_bench(FAST_SIZES, cfg, naive_cutoff=0, repeats=7)
    naive = run_bench(NAIVE_SIZES, cfg, naive_cutoff=max(NAIVE_SIZES), repeats=3)
    print(fast.to_table())
    print(naive.to_table())
    for n, r in ratios(fast.rows, "fast_ms"):
        print(f"fast  t({n}) / t({n // 2}) = {r:.2f}")
    for n, r in ratios(naive.rows, "naive_ms"):
        print(f"naive t({n}) / t({n // 2}) = {r:.2f}")


if __name__ == "__main__":
    main()
