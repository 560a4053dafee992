import itertools
import random

import pytest
from hypothesis import strategies as st

from tourfas.tournament import Tournament


def brute_indegree(t, v):
    return sum(1 for u in range(t.n) if u != v and t.matrix()[u][v])


def brute_backward(t, order):
    pos = {v: i for i, v in enumerate(order)}
    m = t.matrix()
    return {(u, v) for u in range(t.n) for v in range(t.n) if m[u][v] and pos[u] > pos[v]}


def brute_triangle_counts(t):
    """Per-arc counts by walking all C(n,3) vertex triples."""
    m = t.matrix()
    counts = {}
    for a, b, c in itertools.combinations(range(t.n), 3):
        for x, y, z in ((a, b, c), (a, c, b)):
            if m[x][y] and m[y][z] and m[z][x]:
                for arc in ((x, y), (y, z), (z, x)):
                    counts[arc] = counts.get(arc, 0) + 1
    return counts


def brute_opt(t):
    return min(len(brute_backward(t, p)) for p in itertools.permutations(range(t.n)))


def random_order(n, rng):
    order = list(range(n))
    rng.shuffle(order)
    return tuple(order)


@st.composite
def tournaments(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    out = [0] * n
    for (i, j), b in zip(((i, j) for i in range(n) for j in range(i + 1, n)), bits):
        if b:
            out[i] |= 1 << j
        else:
            out[j] |= 1 << i
    return Tournament(n, tuple(out))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
