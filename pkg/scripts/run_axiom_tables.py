#!/usr/bin/env python3
"""Run the axiom score-card and emit the results table as JSON.

Usage: python scripts/run_axiom_tables.py [--trials N] [--seed S] [--out FILE]

Curated cells replay their frozen witness instances; 'satisfied' cells run
seeded random sweeps. Cells whose expectation is 'violated-divergence'
mark table claims from the source material that the harness refutes with a
concrete witness.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pbtk import suite


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--seed", type=int, default=20240801)
    parser.add_argument("--out", default="axiom_tables.json")
    args = parser.parse_args()

    t0 = time.time()
    done = []

    def progress(row):
        done.append(row)
        mark = "x" if row.verdict == "violated" else "ok"
        print(f"{len(done):3d}  {row.rule:16s} {row.axiom:28s} {mark}")

    rows = suite.run_suite(trials=args.trials, seed=args.seed, progress=progress)
    Path(args.out).write_text(suite.to_json(rows))
    ok = suite.suite_ok(rows)
    print(f"\n{len(rows)} cells in {time.time() - t0:.1f}s -> {args.out}")
    print("score-card matches expectations" if ok else "MISMATCHES PRESENT")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
