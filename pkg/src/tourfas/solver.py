"""Increasing-k driver: census, bad vertices, windows, guards, then the DP."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .census import bad_vertices, count_triangles, triangle_packing
from .dp import dp_solve
from .tournament import ArcSet, Order, Tournament, backward_arcs, indegree_order, is_acyclic
from .windows import build_windows, candidate_size_bound, derive_parameters, guard_bounds

log = logging.getLogger(__name__)

REJECTED = "rejected-by-guard"
INFEASIBLE = "dp-infeasible"
EXCEEDS = "dp-cost-exceeds-k"
SUCCESS = "success"


@dataclass(frozen=True)
class Trial:
    k: int
    outcome: str
    t: int = 0
    d: int = 0
    num_bad: int = 0
    max_candidate: int = 0
    dp_states: int = 0
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "outcome": self.outcome,
            "t": self.t,
            "d": self.d,
            "num_bad": self.num_bad,
            "max_candidate": self.max_candidate,
            "dp_states": self.dp_states,
            "reason": self.reason,
        }


@dataclass
class SolveResult:
    opt_size: int
    order: Order
    fas: ArcSet
    trials: list[Trial] = field(default_factory=list)

    @property
    def final(self) -> Trial:
        return self.trials[-1]


class KLimitExceeded(Exception):
    def __init__(self, max_k: int, trials: list[Trial]):
        super().__init__(f"no feedback arc set of size <= {max_k}")
        self.max_k = max_k
        self.trials = trials


def _trial(
    t: Tournament,
    k: int,
    packing: list[int] | None,
    max_candidates: int | None,
    bounded: bool,
) -> tuple[Trial, Order | None]:
    if k == 0:
        order = indegree_order(t)
        if is_acyclic(t):
            return Trial(0, SUCCESS), order
        return Trial(0, EXCEEDS), None

    p = derive_parameters(k)
    bad = bad_vertices(count_triangles(t), p.t)
    wf = build_windows(t, bad, p.d)
    common = dict(t=p.t, d=p.d, num_bad=len(bad), max_candidate=wf.max_candidates)
    reason = guard_bounds(bad, wf, p)
    if reason is None and max_candidates is not None and wf.max_candidates > max_candidates:
        reason = f"max |C(i)| = {wf.max_candidates} over the cap {max_candidates}"
    if reason is not None:
        return Trial(k, REJECTED, reason=reason, **common), None

    res = dp_solve(t, wf, budget=k if bounded else None, packing=packing)
    if not res.feasible:
        outcome = EXCEEDS if res.pruned else INFEASIBLE
        return Trial(k, outcome, dp_states=res.states, **common), None
    if res.cost > k:
        return Trial(k, EXCEEDS, dp_states=res.states, **common), None
    return Trial(k, SUCCESS, dp_states=res.states, **common), res.order


def decide_k(
    t: Tournament,
    k: int,
    max_candidates: int | None = None,
    bounded: bool = True,
) -> SolveResult | None:
    """A minimum feedback arc set if one of size <= k exists, else None."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    packing = triangle_packing(t) if bounded and k > 0 else None
    trial, order = _trial(t, k, packing, max_candidates, bounded)
    if order is None:
        return None
    fas = backward_arcs(t, order)
    return SolveResult(len(fas), order, fas, [trial])


def solve(
    t: Tournament,
    max_k: int | None = None,
    max_candidates: int | None = None,
    bounded: bool = True,
) -> SolveResult:
    """Minimum feedback arc set by trying k = 0, 1, 2, ... until a trial succeeds.

    The first successful k is the optimum: the DP cost is never below the
    optimum, and once k reaches it the optimal order respects every window.
    ``bounded=False`` runs each DP to completion instead of pruning states that
    cannot finish within k.
    """
    trials: list[Trial] = []
    packing = triangle_packing(t) if bounded else None
    k = 0
    while max_k is None or k <= max_k:
        trial, order = _trial(t, k, packing, max_candidates, bounded)
        trials.append(trial)
        log.debug("k=%d %s", k, trial.outcome)
        if order is not None:
            fas = backward_arcs(t, order)
            assert len(fas) <= k
            return SolveResult(len(fas), order, fas, trials)
        k += 1
    raise KLimitExceeded(max_k, trials)


def candidate_limit(trial: Trial) -> int:
    return candidate_size_bound(trial.num_bad, trial.d)
