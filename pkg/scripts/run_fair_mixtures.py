#!/usr/bin/env python3
"""Build entitlement-fair mixtures for sample group setups and verify them.

Usage: python scripts/run_fair_mixtures.py [--seed S] [--per-case N]

For each arithmetic regime the script draws group parameters, constructs
the mixture, and replays the strong guarantee by full profile enumeration.
"""

import argparse
import random
import sys
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pbtk.errors import ConditionNotMet
from pbtk.speaked import (GroupStructure, RepFunction, check_strong_geg_enum,
                          construct_fair_mixture)


def draw(rng, case, m):
    g = rng.choice([1, 2])
    members = ((0, 1, 2),) if g == 1 else ((0,), (1, 2))
    sizes = tuple(len(x) for x in members)
    if case == "I":
        kappa = tuple(rng.randint((m + 2) // 2, m) for _ in range(g))
        left, eta = F(1), []
        for _ in range(g):
            e = F(rng.randint(0, int(left * 10)), 10)
            eta.append(e)
            left -= e
        eta = tuple(eta)
    elif case == "II":
        kappa = tuple(rng.randint(1, m) for _ in range(g))
        cap = F(1, m // min(kappa))
        eta = tuple(F(rng.randint(0, int(cap * 10)), 10) for _ in range(g))
    else:
        kappa = tuple(rng.randint(1, m // 2) for _ in range(g))
        eta = tuple(min(F(rng.randint(0, 3), 10), F(1, sum(sizes))) for _ in range(g))
    psi = tuple(RepFunction(rng.choice(["r1", "r2", "r3", "r4"]), kappa[q], m,
                            rng.randint(1, sizes[q])) for q in range(g))
    return GroupStructure(members, kappa, eta, psi)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--per-case", type=int, default=10)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    failures = 0
    for case in ("I", "II", "III"):
        built = 0
        while built < args.per_case:
            m = rng.choice([3, 4]) if case == "II" else 3
            gs = draw(rng, case, m)
            try:
                mix = construct_fair_mixture(case, gs, m)
            except ConditionNotMet:
                continue
            built += 1
            ok, witness = check_strong_geg_enum(mix.distribution, gs, m)
            mark = "ok" if ok else "FAIL"
            if not ok:
                failures += 1
            print(f"case {case}: kappa={gs.kappa} eta={tuple(map(str, gs.eta))} "
                  f"psi={[p.tag for p in gs.psi]} -> {mark}")
    print("all mixtures verified" if failures == 0 else f"{failures} failures")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
