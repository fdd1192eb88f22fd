"""Brute-force ground truth for small graphs.

Two tiers, matching what each consumer needs:

* full enumeration (default budget 14 vertices) for set-valued answers:
  all maximum independent sets, all maximum matchings, the set of vertices
  missed by some maximum matching, the intersection of all maximum
  independent sets;
* exact recursive search with degree-one reductions (default budget 22
  vertices) when only the numbers alpha and nu are needed.

The recursive matching search is not a shortcut taken on faith: tests pin it
against exhaustive edge-subset maximization for every graph up to 12 vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import Graph


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 14
    time_limit: float | None = None  # seconds


ENUMERATION_BUDGET = OracleBudget(max_vertices=14)
SEARCH_BUDGET = OracleBudget(max_vertices=22)


class _Deadline:
    def __init__(self, budget: OracleBudget):
        self.expires = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self._tick = 0

    def check(self) -> None:
        if self.expires is None:
            return
        self._tick += 1
        if self._tick % 256 == 0 and time.monotonic() > self.expires:
            raise BudgetExceeded("oracle time limit exceeded")


def _require_budget(g: Graph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds oracle budget of {budget.max_vertices}")


def _adjacency_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in range(g.n)]


def brute_alpha(g: Graph, budget: OracleBudget | None = None) -> int:
    """Exact independence number by branch and bound with degree pruning.

    Vertices of degree at most one in the remaining subgraph are always safe
    to take, which collapses forests and unicyclic graphs without branching.
    """
    budget = budget or SEARCH_BUDGET
    _require_budget(g, budget)
    adj = _adjacency_masks(g)
    deadline = _Deadline(budget)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        deadline.check()
        best_v, best_deg = -1, None
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (adj[v] & mask).bit_count()
            if best_deg is None or deg > best_deg:
                best_v, best_deg = v, deg
            if deg <= 1:
                best_v, best_deg = v, deg
                break
        v = best_v
        if best_deg <= 1:
            result = 1 + rec(mask & ~(adj[v] | (1 << v)))
        else:
            result = max(rec(mask & ~(1 << v)), 1 + rec(mask & ~(adj[v] | (1 << v))))
        memo[mask] = result
        return result

    return rec((1 << g.n) - 1)


def brute_nu(g: Graph, budget: OracleBudget | None = None) -> int:
    """Exact matching number by recursive search with leaf reduction.

    A degree-one vertex can always be matched along its unique edge without
    losing optimality; otherwise branch on a highest-degree vertex being
    unmatched or matched to each neighbor in turn.
    """
    budget = budget or SEARCH_BUDGET
    _require_budget(g, budget)
    adj = _adjacency_masks(g)
    deadline = _Deadline(budget)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        deadline.check()
        best_v, best_deg = -1, 0
        leaf = -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = (adj[v] & mask).bit_count()
            if deg == 1:
                leaf = v
                break
            if deg > best_deg:
                best_v, best_deg = v, deg
        if leaf >= 0:
            u = (adj[leaf] & mask).bit_length() - 1
            result = 1 + rec(mask & ~((1 << leaf) | (1 << u)))
        elif best_deg == 0:
            result = 0
        else:
            v = best_v
            result = rec(mask & ~(1 << v))
            rest = adj[v] & mask
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                result = max(result, 1 + rec(mask & ~((1 << v) | (1 << u))))
        memo[mask] = result
        return result

    return rec((1 << g.n) - 1)


def maximum_independent_sets(g: Graph, budget: OracleBudget | None = None) -> list[frozenset[int]]:
    """All maximum independent sets, by exhausting vertex subsets."""
    budget = budget or ENUMERATION_BUDGET
    _require_budget(g, budget)
    adj = _adjacency_masks(g)
    deadline = _Deadline(budget)
    best = -1
    hits: list[int] = []
    for subset in range(1 << g.n):
        deadline.check()
        size = subset.bit_count()
        if size < best:
            continue
        m = subset
        independent = True
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if adj[v] & subset:
                independent = False
                break
        if not independent:
            continue
        if size > best:
            best = size
            hits = [subset]
        else:
            hits.append(subset)
    return [frozenset(_bits(mask)) for mask in hits]


def maximum_matchings(g: Graph, budget: OracleBudget | None = None) -> list[frozenset[tuple[int, int]]]:
    """All maximum matchings, by exhausting edge subsets."""
    budget = budget or ENUMERATION_BUDGET
    _require_budget(g, budget)
    edges = list(g.edges())
    edge_masks = [(1 << u) | (1 << v) for u, v in edges]
    deadline = _Deadline(budget)
    best = -1
    hits: list[int] = []
    for subset in range(1 << len(edges)):
        deadline.check()
        size = subset.bit_count()
        if size < best:
            continue
        used = 0
        ok = True
        m = subset
        while m:
            e = (m & -m).bit_length() - 1
            m &= m - 1
            if used & edge_masks[e]:
                ok = False
                break
            used |= edge_masks[e]
        if not ok:
            continue
        if size > best:
            best = size
            hits = [subset]
        else:
            hits.append(subset)
    return [frozenset(edges[e] for e in _bits(mask)) for mask in hits]


def edmonds_gallai_set(g: Graph, budget: OracleBudget | None = None) -> frozenset[int]:
    """Vertices missed by at least one maximum matching."""
    missed: set[int] = set()
    everything = frozenset(range(g.n))
    for matching in maximum_matchings(g, budget):
        saturated = {v for edge in matching for v in edge}
        missed |= everything - saturated
    return frozenset(missed)


def max_independent_intersection(g: Graph, budget: OracleBudget | None = None) -> frozenset[int]:
    """Intersection of all maximum independent sets."""
    sets = maximum_independent_sets(g, budget)
    out = set(sets[0]) if sets else set()
    for s in sets[1:]:
        out &= s
    return frozenset(out)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out
