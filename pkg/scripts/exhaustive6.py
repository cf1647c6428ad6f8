"""Run the three pipelines on every labeled graph on N vertices against brute force."""

import argparse
import time

from edsolve import experiments as ex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--step", type=int, default=1, help="check every step-th graph")
    args = ap.parse_args()

    t0 = time.perf_counter()
    a = ex.exhaustive(args.n, range(args.kmax + 1), args.step)
    print(f"instances      {a.instances}")
    print(f"search trees   {a.runs}")
    print(f"disagreements  {len(a.disagreements)}")
    print(f"node violations {len(a.violations)}")
    print(f"kernels        {a.kernels} ({len(a.kernel_failures)} failures)")
    print(f"seconds        {time.perf_counter() - t0:.1f}")
    for line in a.disagreements[:20]:
        print("  ", line)


if __name__ == "__main__":
    main()
