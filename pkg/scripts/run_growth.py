"""Leaf counts on forced-no instances (k = OPT - 1) and the fitted growth base."""

import argparse
import json

from edsolve.bench import fit_growth, run_growth
from edsolve.generators import seeded_rng


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("paths", "cycles", "cubic", "gnp"), nargs="+",
                    default=["paths", "cubic"])
    ap.add_argument("--kmax", type=int, default=8)
    ap.add_argument("--per-k", type=int, default=1)
    args = ap.parse_args()

    for family in args.family:
        rows = run_growth(family, args.kmax, seeded_rng(), per_k=args.per_k)
        print(f"== {family}")
        print(f"{'alg':5} {'n':>4} {'k':>3} {'leaves':>8} {'nodes':>8} {'bound':>12} ok")
        for r in rows:
            print(f"{r.algorithm:5} {r.n:4d} {r.k:3d} {r.leaves:8d} {r.nodes:8d} {r.bound:12.0f} {r.within_bound}")
        print(json.dumps(fit_growth(rows), indent=2))


if __name__ == "__main__":
    main()
