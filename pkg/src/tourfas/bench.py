"""Benchmark runner: solve seeded instances and record runtime and DP sizes as CSV."""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .generator import GenSpec, generate
from .solver import solve
from .tournament import verify_fas

COLUMNS = ["family", "n", "k_planted", "seed", "opt", "wall_ms", "max_candidate", "dp_states"]


@dataclass
class BenchRow:
    family: str
    n: int
    k_planted: int
    seed: int
    opt: int
    wall_ms: float
    max_candidate: int
    dp_states: int
    trials: list[dict]

    def csv_row(self) -> dict:
        return {c: getattr(self, c) for c in COLUMNS}


def run_one(spec: GenSpec) -> BenchRow:
    t = generate(spec)
    start = time.perf_counter()
    res = solve(t)
    wall_ms = (time.perf_counter() - start) * 1000
    if not verify_fas(t, res.fas):
        raise AssertionError(f"solver returned an invalid feedback arc set for {spec.describe()}")
    return BenchRow(
        spec.family,
        spec.n,
        spec.planted_k,
        spec.seed,
        res.opt_size,
        round(wall_ms, 3),
        res.final.max_candidate,
        res.final.dp_states,
        [tr.as_dict() for tr in res.trials],
    )


def run_bench(family: str, n: int, k_list: Iterable[int], seeds: Iterable[int]) -> list[BenchRow]:
    return [run_one(GenSpec(family, n, k, s)) for k in k_list for s in seeds]


def write_csv(rows: list[BenchRow], path: str | Path) -> Path:
    """Write the CSV and, next to it, a JSON-lines trials log (``<path>.trials.jsonl``)."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=COLUMNS)
        w.writeheader()
        for r in rows:
            w.writerow(r.csv_row())
    log_path = path.with_name(path.name + ".trials.jsonl")
    with log_path.open("w") as fh:
        for r in rows:
            fh.write(json.dumps({"k_planted": r.k_planted, "seed": r.seed, "trials": r.trials}) + "\n")
    return log_path
