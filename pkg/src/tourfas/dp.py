"""Layered subset dynamic program over window-respecting linear orders.

Layer ``i`` holds states for "locations ``0..i-1`` are filled". A state is the
set of candidates of C(i) already placed (a vertex bitmask); the prefix set
P(i) is implicitly placed as well. Placing ``v`` at location ``i`` adds the arcs
from ``v`` back into everything placed so far.

With a ``budget`` the search answers the decision question "is there a
window-respecting order with at most ``budget`` backward arcs?" and drops any
state whose certain cost already exceeds the budget: its backward arcs so far,
the arcs from unplaced into placed vertices (these must point backwards), and
one arc per packed triangle lying wholly among the unplaced vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .census import triangle_packing
from .tournament import Order, Tournament
from .windows import WindowFamily


@dataclass(frozen=True)
class DpState:
    i: int
    placed: int  # bitmask over C(i)
    cost: int

    @property
    def placed_set(self) -> frozenset[int]:
        return frozenset(v for v in range(self.placed.bit_length()) if self.placed >> v & 1)


@dataclass
class DpTable:
    # layers[i][key] = (cost, cut, packed_gone, parent_key, vertex placed at i-1)
    layers: list[dict[int, tuple]] = field(default_factory=list)

    @property
    def states(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def feasible(self) -> bool:
        return bool(self.layers) and bool(self.layers[-1])


@dataclass
class DpResult:
    cost: int | None
    order: Order | None
    states: int
    widest_layer: int
    pruned: int  # successor states discarded by the budget bound

    @property
    def feasible(self) -> bool:
        return self.cost is not None


def dp_transition(t: Tournament, wf: WindowFamily, state: DpState, v: int) -> DpState | None:
    """Place ``v`` at location ``state.i``; None when a forced prefix vertex is left out."""
    i = state.i
    if not wf.candidate_masks[i] >> v & 1 or state.placed >> v & 1:
        raise ValueError(f"vertex {v} is not an unplaced candidate at location {i}")
    placed_all = state.placed | wf.prefix_masks[i]
    new_all = placed_all | 1 << v
    if wf.prefix_masks[i + 1] & ~new_all:
        return None
    inc = (t.out[v] & placed_all).bit_count()
    return DpState(i + 1, new_all & wf.candidate_masks[i + 1], state.cost + inc)


def run_layers(
    t: Tournament,
    wf: WindowFamily,
    budget: int | None = None,
    packing: list[int] | None = None,
) -> tuple[DpTable, int]:
    n = t.n
    out, inn = t.out, t.inn
    full = t.full_mask
    deg = t.indegrees()
    cm, pm = wf.candidate_masks, wf.prefix_masks
    bounded = budget is not None
    if bounded and packing is None:
        packing = triangle_packing(t)
    tri_of: list[list[int]] = [[] for _ in range(n)]
    for tri in packing or ():
        for v in range(n):
            if tri >> v & 1:
                tri_of[v].append(tri)
    npack = len(packing or ())

    table = DpTable([{0: (0, 0, 0, None, None)}])
    pruned = 0
    if bounded and npack > budget:
        table.layers[0] = {}
        return table, 1
    for i in range(n):
        cur = table.layers[i]
        nxt: dict[int, tuple] = {}
        cands = wf.candidates[i]
        pm_i, pm_next, cm_next = pm[i], pm[i + 1], cm[i + 1]
        for key, (cost, cut, gone, _, _) in cur.items():
            placed_all = key | pm_i
            assert placed_all.bit_count() == i
            unplaced = full ^ placed_all
            committed = cost + cut
            for v in cands:
                bit = 1 << v
                if key & bit:
                    continue
                if bounded and committed + deg[v] - i > budget:
                    # candidates are sorted by indegree, so the rest are worse
                    pruned += 1
                    break
                new_all = placed_all | bit
                if pm_next & ~new_all:
                    continue
                inc = (out[v] & placed_all).bit_count()
                ncost = cost + inc
                nkey = new_all & cm_next
                if bounded:
                    ncut = cut - inc + (inn[v] & unplaced & ~bit).bit_count()
                    ngone = gone
                    for tri in tri_of[v]:
                        if not tri & placed_all:
                            ngone += 1
                    if ncost + ncut + npack - ngone > budget:
                        pruned += 1
                        continue
                else:
                    ncut = ngone = 0
                prev = nxt.get(nkey)
                if prev is None or ncost < prev[0]:
                    nxt[nkey] = (ncost, ncut, ngone, key, v)
        table.layers.append(nxt)
        if not nxt:
            # every branch died; pad so layer indices stay aligned
            table.layers.extend({} for _ in range(n - i - 1))
            break
    return table, pruned


def reconstruct(table: DpTable) -> Order:
    if not table.feasible:
        raise ValueError("no terminal state: the table is infeasible")
    last = table.layers[-1]
    key = min(last, key=lambda k: last[k][0])
    order = []
    for layer in reversed(table.layers[1:]):
        _, _, _, parent, v = layer[key]
        order.append(v)
        key = parent
    return tuple(reversed(order))


def dp_solve(
    t: Tournament,
    wf: WindowFamily,
    budget: int | None = None,
    packing: list[int] | None = None,
) -> DpResult:
    """Cheapest order placing a vertex of C(i) at every location i.

    Without a budget the result is the exact minimum over window-respecting
    orders. With one, the minimum is returned only if it is <= budget.
    """
    table, pruned = run_layers(t, wf, budget, packing)
    widest = max(len(layer) for layer in table.layers)
    if not table.feasible:
        return DpResult(None, None, table.states, widest, pruned)
    last = table.layers[-1]
    cost = min(entry[0] for entry in last.values())
    return DpResult(cost, reconstruct(table), table.states, widest, pruned)
