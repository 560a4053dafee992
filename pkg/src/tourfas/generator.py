"""Seeded instance families: transitive, planted, uniform, and exhaustive small n.

Randomness comes from the raw 64-bit output stream of NumPy's PCG64 bit
generator seeded through ``SeedSequence(seed)``. Only ``random_raw`` is used,
whose stream is fixed across platforms and NumPy releases; the higher-level
``Generator`` methods carry no such promise.

Pairs ``{i, j}`` with ``i < j`` are indexed lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .tournament import InputError, Tournament, transitive

GENERATOR_NAME = "numpy-PCG64-SeedSequence-raw64"
EXHAUSTIVE_MAX_N = 6
FAMILIES = ("transitive", "planted", "uniform", "exhaustive")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    planted_k: int = 0
    seed: int = 0

    def describe(self) -> str:
        return f"family={self.family} n={self.n} planted_k={self.planted_k} seed={self.seed} rng={GENERATOR_NAME}"


def raw_stream(seed: int, count: int) -> list[int]:
    bitgen = np.random.PCG64(np.random.SeedSequence(seed))
    return [int(x) for x in bitgen.random_raw(count)] if count else []


def pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def gen_transitive(n: int) -> Tournament:
    return transitive(n)


def from_pair_bits(n: int, bits: list[int]) -> Tournament:
    """Bit p set means the p-th pair (i, j) points i -> j."""
    out = [0] * n
    for (i, j), b in zip(pairs(n), bits):
        if b:
            out[i] |= 1 << j
        else:
            out[j] |= 1 << i
    return Tournament(n, tuple(out))


def gen_uniform(n: int, seed: int) -> Tournament:
    """Pair p points forward iff the top bit of raw draw p is set."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    m = n * (n - 1) // 2
    return from_pair_bits(n, [x >> 63 for x in raw_stream(seed, m)])


def gen_planted(n: int, k: int, seed: int) -> Tournament:
    """Transitive tournament with ``k`` distinct pairs reversed.

    The pairs are the first ``k`` slots of a partial Fisher-Yates shuffle of
    the pair indices, drawing slot ``s`` as ``s + raw % (m - s)``.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    m = n * (n - 1) // 2
    if not 0 <= k <= m:
        raise InputError(f"cannot reverse {k} of {m} arcs")
    idx = list(range(m))
    for s, x in enumerate(raw_stream(seed, k)):
        j = s + x % (m - s)
        idx[s], idx[j] = idx[j], idx[s]
    bits = [1] * m
    for p in idx[:k]:
        bits[p] = 0
    return from_pair_bits(n, bits)


def enumerate_all(n: int) -> Iterator[Tournament]:
    """Every labeled tournament on n vertices; bit p of the counter orients pair p."""
    if n > EXHAUSTIVE_MAX_N:
        raise InputError(f"exhaustive enumeration is capped at n={EXHAUSTIVE_MAX_N}, got {n}")
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    m = n * (n - 1) // 2
    for code in range(1 << m):
        yield from_pair_bits(n, [code >> p & 1 for p in range(m)])


def generate(spec: GenSpec) -> Tournament:
    if spec.family == "transitive":
        return gen_transitive(spec.n)
    if spec.family == "planted":
        return gen_planted(spec.n, spec.planted_k, spec.seed)
    if spec.family == "uniform":
        return gen_uniform(spec.n, spec.seed)
    if spec.family == "exhaustive":
        # the seed picks one member of the enumeration
        m = spec.n * (spec.n - 1) // 2
        if spec.n > EXHAUSTIVE_MAX_N or not 0 <= spec.seed < 1 << m:
            raise InputError(f"exhaustive index {spec.seed} out of range for n={spec.n}")
        return from_pair_bits(spec.n, [spec.seed >> p & 1 for p in range(m)])
    raise InputError(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
