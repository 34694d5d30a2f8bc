"""Min/max of SD, SphD and SphD/SD at the three experiment scales.

    python scripts/reproduce_table1.py [--seed 42] [--json out.json]
"""

import argparse
import json
import time

from sphdepth.experiment import ExperimentConfig, run_experiment

SCALES = [(750, 100), (2500, 750), (10_000, 2500)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--json", help="also write all summaries to this file")
    args = ap.parse_args()

    out = []
    for n_data, n_queries in SCALES:
        t0 = time.perf_counter()
        s = run_experiment(ExperimentConfig(n_data=n_data, n_queries=n_queries, seed=args.seed))
        print(s.to_table(), end="")
        print(f"({time.perf_counter() - t0:.1f}s)\n")
        out.append({"n_data": n_data, "n_queries": n_queries, "summary": s.stats()})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
