#!/usr/bin/env python3
"""Structure report for the partial rotation monoid.

For each n, lists the D-classes with their idempotent counts and maximal
subgroup orders, and checks them against the orbit predictions: a class
whose idempotents have domain-orbit size j contains exactly j idempotents
and carries a cyclic subgroup of order n / j.
"""
import argparse

from invsemifft.families import FamilySpec, build, rot_orbit_size


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    for n in range(args.min_n, args.max_n + 1):
        S = build(FamilySpec("rotation", n))
        print(f"\nrotation n={n}: |S|={len(S)}, {len(S.d_classes)} D-classes")
        for dc in S.d_classes:
            e = S.elements[dc.rep_idempotent]
            if e.rank == 0:
                print(f"  class {dc.index}: rank 0 (bottom)")
                continue
            j = rot_orbit_size(e, n)
            ok = (dc.num_idempotents == j and len(dc.subgroup) == n // j)
            gen = dc.subgroup.generator_if_cyclic()
            print(f"  class {dc.index}: rank {e.rank}, idempotents "
                  f"{dc.num_idempotents} (orbit {j}), |G|={len(dc.subgroup)} "
                  f"(expect {n // j}), cyclic={gen is not None} "
                  f"{'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
