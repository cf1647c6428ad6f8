"""Kernel sizes against the quadratic vertex bound on random graphs."""

import argparse
import random

from edsolve import generators as gen
from edsolve.kernel import KernelStatus, kernel_stats, kernelize


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = {"solved_by_m0": 0, "rejected": 0, "regime": 0, "boundary": 0, "over": 0, "ledger": 0}
    worst = []
    for _ in range(args.count):
        n = rng.randint(4, args.nmax)
        g = gen.gnp(n, rng.choice((0.05, 0.1, 0.2)), rng)
        k = rng.randint(1, max(1, n // 3))
        r = kernelize(g, k)
        if r.status is not KernelStatus.KERNEL:
            tally[r.status.value] += 1
            continue
        led = kernel_stats(r)
        tally["ledger"] += bool(led.violations())
        if led.bound_regime:
            tally["regime"] += 1
            tally["over"] += not led.within_vertex_bound
        else:
            tally["boundary"] += 1
            if not led.within_vertex_bound:
                worst.append((led.n_kernel - led.vertex_bound, n, k, led.n_kernel))
    print(tally)
    for excess, n, k, size in sorted(worst, reverse=True)[:10]:
        print(f"  m=2k boundary: n={n} k={k} kernel={size} exceeds 2k^2+2k by {excess}")


if __name__ == "__main__":
    main()
