"""Tournaments, linear orders and feedback arc sets.

A tournament on ``n`` vertices is stored as a dense orientation matrix packed
into one integer bitmask per row: bit ``v`` of ``out[u]`` is set iff ``u -> v``.
A linear order is a tuple of vertices listed by location (``order[i]`` is the
vertex at location ``i``). Arc sets are frozensets of ``(tail, head)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Order = tuple[int, ...]
ArcSet = frozenset[tuple[int, int]]


class InputError(ValueError):
    """Malformed tournament, order or arc set."""


class ParameterError(ValueError):
    """Algorithm parameter outside its valid range."""


@dataclass(frozen=True)
class Tournament:
    n: int
    out: tuple[int, ...]
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"tournament needs at least one vertex, got n={self.n}")
        if len(self.out) != self.n:
            raise InputError(f"expected {self.n} rows, got {len(self.out)}")
        full = (1 << self.n) - 1
        inn = [0] * self.n
        for u, row in enumerate(self.out):
            if row & ~full or row >> u & 1:
                raise InputError(f"row {u} has bits outside the vertex range or on the diagonal")
            r = row
            while r:
                low = r & -r
                inn[low.bit_length() - 1] |= 1 << u
                r ^= low
        for u in range(self.n):
            if self.out[u] & inn[u]:
                v = (self.out[u] & inn[u]).bit_length() - 1
                raise InputError(f"both arcs {u}->{v} and {v}->{u} present")
            if (self.out[u] | inn[u]) != full ^ (1 << u):
                missing = full ^ (1 << u) ^ (self.out[u] | inn[u])
                v = missing.bit_length() - 1
                raise InputError(f"pair {{{u},{v}}} has no arc")
        object.__setattr__(self, "inn", tuple(inn))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "Tournament":
        n = len(rows)
        out = []
        for u, row in enumerate(rows):
            if len(row) != n:
                raise InputError(f"row {u} has length {len(row)}, expected {n}")
            out.append(sum(1 << v for v, x in enumerate(row) if x))
        return cls(n, tuple(out))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u},{v}) out of range for n={n}")
            out[u] |= 1 << v
        return cls(n, tuple(out))

    def arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(self.n) if self.out[u] >> v & 1]

    def matrix(self) -> list[list[int]]:
        return [[self.out[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]

    def indegrees(self) -> list[int]:
        return [m.bit_count() for m in self.inn]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def transitive(n: int) -> Tournament:
    """Acyclic tournament with ``i -> j`` iff ``i < j``."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    full = (1 << n) - 1
    return Tournament(n, tuple(full & ~((1 << (u + 1)) - 1) for u in range(n)))


def three_cycle() -> Tournament:
    return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def indegree(t: Tournament, v: int) -> int:
    if not 0 <= v < t.n:
        raise InputError(f"vertex {v} out of range for n={t.n}")
    return t.inn[v].bit_count()


def check_order(t: Tournament, order: Sequence[int]) -> Order:
    order = tuple(order)
    if len(order) != t.n or sorted(order) != list(range(t.n)):
        raise InputError(f"order is not a permutation of 0..{t.n - 1}: {order}")
    return order


def positions(order: Sequence[int]) -> list[int]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def backward_count(t: Tournament, order: Sequence[int]) -> int:
    """Number of arcs pointing from a later location to an earlier one."""
    placed = 0
    total = 0
    for v in order:
        total += (t.out[v] & placed).bit_count()
        placed |= 1 << v
    return total


def backward_arcs(t: Tournament, order: Sequence[int]) -> ArcSet:
    order = check_order(t, order)
    arcs = []
    placed = 0
    for v in order:
        hits = t.out[v] & placed
        while hits:
            low = hits & -hits
            arcs.append((v, low.bit_length() - 1))
            hits ^= low
        placed |= 1 << v
    return frozenset(arcs)


def indegree_order(t: Tournament) -> Order:
    """Vertices by ascending indegree, ties by vertex id."""
    deg = t.indegrees()
    return tuple(sorted(range(t.n), key=lambda v: (deg[v], v)))


def is_acyclic(t: Tournament) -> bool:
    return backward_count(t, indegree_order(t)) == 0


def topological_certificate(n: int, out: Sequence[int]) -> Order | None:
    """Repeatedly strip a vertex with no remaining in-arcs; None if a cycle blocks."""
    inn = [0] * n
    for u in range(n):
        r = out[u]
        while r:
            low = r & -r
            inn[low.bit_length() - 1] |= 1 << u
            r ^= low
    remaining = (1 << n) - 1
    order = []
    while remaining:
        for v in range(n):
            if remaining >> v & 1 and not inn[v] & remaining:
                break
        else:
            return None
        order.append(v)
        remaining &= ~(1 << v)
    return tuple(order)


def verify_fas(t: Tournament, fas: Iterable[tuple[int, int]]) -> bool:
    out = list(t.out)
    for u, v in fas:
        if not (0 <= u < t.n and 0 <= v < t.n) or not t.arc(u, v):
            raise InputError(f"({u},{v}) is not an arc of the tournament")
        out[u] &= ~(1 << v)
    return topological_certificate(t.n, out) is not None


def indegree_error_sum(t: Tournament, order: Sequence[int]) -> int:
    order = check_order(t, order)
    deg = t.indegrees()
    return sum(abs(i - deg[v]) for i, v in enumerate(order))
