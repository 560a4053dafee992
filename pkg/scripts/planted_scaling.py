"""Planted-instance scaling run: n=100, k' in {10, 20, 30}, ten seeds each.

Writes results/planted_n100.csv (plus the trials log) and prints a per-k' summary.
"""

import argparse
import statistics
from pathlib import Path

from tourfas.bench import run_bench, write_csv
from tourfas.windows import candidate_size_bound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=100)
    ap.add_argument("--k-list", default="10,20,30")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--out", default="results/planted_n100.csv")
    args = ap.parse_args()

    ks = [int(x) for x in args.k_list.split(",")]
    rows = run_bench("planted", args.n, ks, range(args.seeds))
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    write_csv(rows, args.out)

    for k in ks:
        sel = [r for r in rows if r.k_planted == k]
        last = [r.trials[-1] for r in sel]
        within = all(tr["max_candidate"] <= candidate_size_bound(tr["num_bad"], tr["d"]) for tr in last)
        print(
            f"k'={k:3d}  opt {min(r.opt for r in sel)}..{max(r.opt for r in sel)}"
            f"  wall ms median {statistics.median(r.wall_ms for r in sel):8.1f} max {max(r.wall_ms for r in sel):8.1f}"
            f"  dp_states mean {statistics.mean(r.dp_states for r in sel):7.1f}"
            f"  max|C| {max(r.max_candidate for r in sel)}  window bound ok: {within}"
        )
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
