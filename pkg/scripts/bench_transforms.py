#!/usr/bin/env python3
"""Operation-count scaling of the fast zeta/Mobius stage across families.

Prints one table per family: n, |S|, counted additions of the fast zeta
transform, and the reference budget the counts should stay under
(2 n^2 |S| for the sweep families, n^2 2^n + n + 1 for rotation, n - 1
for the chain).
"""
import argparse
import time

import numpy as np

from invsemifft.families import FamilySpec, build, predicted_size
from invsemifft.fast_transforms import OpCounter, fast_zeta
from invsemifft.groups import label_group_by_name
from invsemifft.structure import SEMIGROUP, FunctionOnS


def budget(family: str, n: int, size: int) -> int:
    if family == "rotation":
        return n * n * 2 ** n + n + 1
    if family == "chain":
        return n - 1
    return 2 * n * n * size


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    jobs = [("rook", None), ("planar_rook", None), ("cyclic_shift", None),
            ("rotation", None), ("wreath_rook", "Z2"), ("chain", None)]
    for family, lg_name in jobs:
        print(f"\n{family}" + (f" (labels {lg_name})" if lg_name else ""))
        print(f"{'n':>3} {'|S|':>8} {'zeta adds':>10} {'budget':>10} {'secs':>8}")
        lg = label_group_by_name(lg_name) if lg_name else None
        n = 1
        while True:
            spec = FamilySpec(family, n, lg)
            if predicted_size(spec) > args.max_size or (family == "chain" and n > 8):
                break
            S = build(spec)
            f = FunctionOnS(S, SEMIGROUP, rng.normal(size=len(S)))
            counter = OpCounter()
            t0 = time.perf_counter()
            fast_zeta(f, counter)
            dt = time.perf_counter() - t0
            print(f"{n:>3} {len(S):>8} {counter.additions:>10} "
                  f"{budget(family, n, len(S)):>10} {dt:>8.4f}")
            n += 1


if __name__ == "__main__":
    main()
