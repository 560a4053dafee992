"""Compare the plain layered DP with the budget-bounded decision DP on planted instances.

The plain DP explores every window-respecting prefix set; its state count grows
roughly like C(2d, d) once the windows stop constraining anything.
"""

import argparse
import time

from tourfas.generator import gen_planted
from tourfas.solver import solve


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", default="10:2,12:2,14:2,16:2", help="comma list of n:k'")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'n':>4} {'k':>3} {'opt':>4} {'mode':>8} {'seconds':>8} {'states(final trial)':>20}")
    for case in args.cases.split(","):
        n, k = (int(x) for x in case.split(":"))
        t = gen_planted(n, k, args.seed)
        for bounded in (True, False):
            start = time.perf_counter()
            res = solve(t, bounded=bounded)
            mode = "bounded" if bounded else "plain"
            print(f"{n:4d} {k:3d} {res.opt_size:4d} {mode:>8} {time.perf_counter() - start:8.2f} {res.final.dp_states:20d}")


if __name__ == "__main__":
    main()
