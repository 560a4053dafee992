"""Exact reference solvers used to validate the parameterized algorithm."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .tournament import Order, Tournament

ENUMERATION_MAX_N = 8
SUBSET_DP_MAX_N = 20


class OracleRefused(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    opt_size: int
    order: Order
    method: str


def pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    pos = np.argsort(perms, axis=1)
    pairs = pair_index(n)
    if pairs:
        i, j = np.array(pairs).T
        forward = (pos[:, i] < pos[:, j]).astype(np.int32)
    else:
        forward = np.zeros((len(perms), 0), dtype=np.int32)
    return perms, forward, forward.sum(axis=1)


def pair_bits(t: Tournament) -> np.ndarray:
    return np.array([t.out[i] >> j & 1 for i, j in pair_index(t.n)], dtype=np.int32)


def enumerate_opt(t: Tournament) -> OracleResult:
    """Minimum over all n! orders; ties go to the lexicographically smallest order."""
    if t.n > ENUMERATION_MAX_N:
        raise OracleRefused(f"enumeration is capped at n={ENUMERATION_MAX_N}, got {t.n}")
    perms, forward, fsum = _permutation_table(t.n)
    bits = pair_bits(t)
    # backward arcs = pairs whose orientation disagrees with the order
    costs = int(bits.sum()) + fsum - 2 * (forward @ bits)
    best = int(np.argmin(costs))
    return OracleResult(int(costs[best]), tuple(int(v) for v in perms[best]), "enumeration")


def subset_dp_opt(t: Tournament) -> OracleResult:
    """best[S] = min over v in S of best[S - v] + arcs from v into S - v (v placed last)."""
    n = t.n
    if n > SUBSET_DP_MAX_N:
        raise OracleRefused(f"subset DP is capped at n={SUBSET_DP_MAX_N}, got {n}")
    out = t.out
    size = 1 << n
    best = [0] * size
    last = [0] * size
    for s in range(1, size):
        b = None
        r = s
        while r:
            low = r & -r
            v = low.bit_length() - 1
            rest = s ^ low
            c = best[rest] + (out[v] & rest).bit_count()
            if b is None or c < b:
                b, lv = c, v
            r ^= low
        best[s] = b
        last[s] = lv
    order = []
    s = size - 1
    while s:
        v = last[s]
        order.append(v)
        s ^= 1 << v
    return OracleResult(best[size - 1], tuple(reversed(order)), "subset-dp")


def oracle_opt(t: Tournament) -> OracleResult:
    if t.n <= ENUMERATION_MAX_N:
        return enumerate_opt(t)
    return subset_dp_opt(t)
