"""Trial parameters, candidate/prefix windows per location, and rejection guards."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .tournament import ParameterError, Tournament


@dataclass(frozen=True)
class Parameters:
    k: int
    t: int  # triangle / major-suspect threshold
    d: int  # indegree window radius


def derive_parameters(k: int) -> Parameters:
    """``t = ceil(3 sqrt k)`` and ``d = 4t`` so that ``d >= 4t`` survives rounding."""
    if k < 1:
        raise ParameterError(f"k must be >= 1 (k=0 is handled by the solver), got {k}")
    t = math.isqrt(9 * k)
    if t * t < 9 * k:
        t += 1
    return Parameters(k, t, 4 * t)


@dataclass(frozen=True)
class WindowFamily:
    """Candidate sets C(i) and prefix sets P(i) for locations ``0..n``.

    Index ``n`` is the boundary after the last location; the DP uses it for the
    terminal layer.
    """

    n: int
    d: int
    bad: frozenset[int]
    candidates: tuple[tuple[int, ...], ...]
    prefixes: tuple[frozenset[int], ...]
    candidate_masks: tuple[int, ...]
    prefix_masks: tuple[int, ...]

    def suffix(self, i: int) -> frozenset[int]:
        return frozenset(range(self.n)) - self.prefixes[i] - set(self.candidates[i])

    @property
    def max_candidates(self) -> int:
        return max(len(c) for c in self.candidates[: self.n])


def build_windows(t: Tournament, bad: frozenset[int] | set[int], d: int) -> WindowFamily:
    if d < 0:
        raise ParameterError(f"window radius must be >= 0, got {d}")
    bad = frozenset(bad)
    deg = t.indegrees()
    good = sorted((deg[v], v) for v in range(t.n) if v not in bad)
    keys = [g[0] for g in good]
    bad_sorted = sorted(bad, key=lambda v: (deg[v], v))
    bad_mask = sum(1 << v for v in bad)

    candidates, prefixes, cmasks, pmasks = [], [], [], []
    for i in range(t.n + 1):
        lo = bisect.bisect_left(keys, i - d)
        hi = bisect.bisect_right(keys, i + d)
        window = [v for _, v in good[lo:hi]]
        cand = tuple(sorted(window + bad_sorted, key=lambda v: (deg[v], v)))
        prefix = frozenset(v for _, v in good[:lo])
        candidates.append(cand)
        prefixes.append(prefix)
        cmasks.append(sum(1 << v for v in window) | bad_mask)
        pmasks.append(sum(1 << v for v in prefix))
    return WindowFamily(
        t.n, d, bad, tuple(candidates), tuple(prefixes), tuple(cmasks), tuple(pmasks)
    )


def candidate_size_bound(num_bad: int, d: int) -> int:
    return num_bad + 4 * d + 1


def bad_size_bound(k: int, t: int) -> int | None:
    """Largest |B| compatible with a FAS of size <= k, or None if t*t <= 2k."""
    if t * t <= 2 * k:
        return None
    return (4 * k * t) // (t * t - 2 * k)


def guard_bounds(bad: frozenset[int] | set[int], wf: WindowFamily, p: Parameters) -> str | None:
    """Return a rejection reason, or None to accept.

    Both bounds hold whenever a feedback arc set of size <= p.k exists, so a
    rejection proves the trial budget is too small.
    """
    limit = candidate_size_bound(len(bad), p.d)
    biggest = wf.max_candidates
    if biggest > limit:
        return f"max |C(i)| = {biggest} > |B| + 4d + 1 = {limit}"
    b_limit = bad_size_bound(p.k, p.t)
    if b_limit is not None and len(bad) > b_limit:
        return f"|B| = {len(bad)} > {b_limit}"
    return None
