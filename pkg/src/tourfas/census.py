"""Per-arc directed triangle counts, major suspects and the bad-vertex set."""

from __future__ import annotations

from dataclasses import dataclass

from .tournament import ParameterError, Tournament


@dataclass(frozen=True)
class TriangleCensus:
    n: int
    # counts[u][v]: triangles through arc u->v; 0 when v->u is the arc.
    counts: tuple[tuple[int, ...], ...]

    @property
    def total_triangles(self) -> int:
        return sum(map(sum, self.counts)) // 3

    def count(self, u: int, v: int) -> int:
        return self.counts[u][v]

    def suspects(self) -> set[tuple[int, int]]:
        return self.major_suspects(1)

    def major_suspects(self, t: int) -> set[tuple[int, int]]:
        return {(u, v) for u in range(self.n) for v in range(self.n) if self.counts[u][v] >= t and self.counts[u][v] > 0}

    def is_empty(self) -> bool:
        return not any(map(any, self.counts))


def count_triangles(t: Tournament) -> TriangleCensus:
    # For arc u->v the closing vertices are w with v->w and w->u.
    out, inn = t.out, t.inn
    counts = []
    for u in range(t.n):
        row = [0] * t.n
        r = out[u]
        while r:
            low = r & -r
            v = low.bit_length() - 1
            row[v] = (out[v] & inn[u]).bit_count()
            r ^= low
        counts.append(tuple(row))
    return TriangleCensus(t.n, tuple(counts))


def major_suspect_degrees(census: TriangleCensus, t: int) -> list[int]:
    """How many major-suspect arcs touch each vertex (an arc counts at both ends)."""
    deg = [0] * census.n
    for u, row in enumerate(census.counts):
        for v, c in enumerate(row):
            if c >= t and c > 0:
                deg[u] += 1
                deg[v] += 1
    return deg


def bad_vertices(census: TriangleCensus, t: int) -> frozenset[int]:
    if t < 1:
        raise ParameterError(f"threshold t must be >= 1, got {t}")
    return frozenset(v for v, c in enumerate(major_suspect_degrees(census, t)) if c >= t)


def triangle_packing(t: Tournament) -> list[int]:
    """Greedy set of pairwise arc-disjoint triangles, as vertex bitmasks.

    Every feedback arc set must contain a distinct arc of each packed triangle,
    so any subfamily lying inside a vertex set lower-bounds that set's optimum.
    Arcs lying on fewer triangles are tried first.
    """
    census = count_triangles(t)
    arcs = sorted(
        ((c, u, v) for u, row in enumerate(census.counts) for v, c in enumerate(row) if c),
    )
    used = [0] * t.n  # used[u]: heads v of arcs u->v already in the packing
    packed = []
    for _, u, v in arcs:
        if used[u] >> v & 1:
            continue
        closers = t.out[v] & t.inn[u]
        while closers:
            low = closers & -closers
            w = low.bit_length() - 1
            closers ^= low
            if not (used[v] >> w & 1 or used[w] >> u & 1):
                used[u] |= 1 << v
                used[v] |= 1 << w
                used[w] |= 1 << u
                packed.append((1 << u) | (1 << v) | (1 << w))
                break
    return packed
