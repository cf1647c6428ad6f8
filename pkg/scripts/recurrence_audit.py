"""Macro-group audit: sum of 1.5214^-dp per Branch3 group, with the exceptions listed."""

import argparse
from collections import Counter

from edsolve import experiments as ex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--step", type=int, default=4, help="sample every step-th 6-vertex graph")
    ap.add_argument("--random", type=int, default=500, help="random instances to add")
    ap.add_argument("--show", type=int, default=10)
    args = ap.parse_args()

    a = ex.run_sweeps(ex.SweepConfig(step=args.step, random_count=args.random))
    print(f"groups     {a.groups}")
    print(f"exceptions {len(a.group_exceptions)}")
    print(f"pass rate  {a.group_pass_rate:.4%}")
    shapes = Counter((g.rule, g.kind, tuple(sorted(g.deltas))) for _, g in a.group_exceptions)
    for (rule, kind, deltas), count in shapes.most_common():
        print(f"  {count:5d}  rule {rule} ({kind}) deltas {list(deltas)}")
    for label, g in a.group_exceptions[: args.show]:
        print(f"  root_p={g.root_p} weight={g.weight(ex.AUDIT_BASE):.4f} trace={g.trace} on {label}")


if __name__ == "__main__":
    main()
