from __future__ import annotations

import pytest

from nulldecomp import (
    Graph,
    OracleBudget,
    brute_alpha,
    brute_nu,
    edmonds_gallai_set,
    max_independent_intersection,
    maximum_independent_sets,
    maximum_matchings,
    tree_support,
)
from nulldecomp.errors import BudgetExceeded

from conftest import cycle_graph, path_graph, star_graph


def test_brute_alpha_examples(ex_type1):
    assert brute_alpha(cycle_graph(5)) == 2
    assert brute_alpha(ex_type1) == 10
    single = Graph.from_edges([], isolated=["v"])
    assert brute_alpha(single) == 1


def test_brute_nu_examples(ex_type1):
    assert brute_nu(path_graph(4)) == 2
    assert brute_nu(ex_type1) == 8
    assert brute_nu(cycle_graph(5)) == 2


def test_budget_enforced():
    g = path_graph(6)
    with pytest.raises(BudgetExceeded):
        brute_alpha(g, OracleBudget(max_vertices=5))
    with pytest.raises(BudgetExceeded):
        edmonds_gallai_set(g, OracleBudget(max_vertices=5))


def test_edmonds_gallai_examples():
    p3 = path_graph(3)
    assert edmonds_gallai_set(p3) == {0, 2}
    assert edmonds_gallai_set(path_graph(2)) == frozenset()
    star = star_graph(3)
    leaves = {star.index_of(f"x{i:02d}") for i in range(3)}
    assert edmonds_gallai_set(star) == leaves


def test_max_independent_intersection_examples():
    assert max_independent_intersection(path_graph(3)) == {0, 2}
    assert max_independent_intersection(path_graph(4)) == frozenset()
    assert max_independent_intersection(path_graph(2)) == frozenset()


def test_enumeration_consistency():
    for g in (path_graph(5), cycle_graph(6), star_graph(4)):
        mis = maximum_independent_sets(g)
        assert all(len(s) == brute_alpha(g) for s in mis)
        assert all(g.is_independent_set(s) for s in mis)
        matchings = maximum_matchings(g)
        assert all(len(m) == brute_nu(g) for m in matchings)


def test_nu_matches_exhaustive_small():
    # The recursive matching search against exhaustive edge-subset search.
    graphs = [
        path_graph(7),
        cycle_graph(5),
        cycle_graph(7),
        cycle_graph(12),
        star_graph(5),
        Graph.from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e")]),
    ]
    for g in graphs:
        assert brute_nu(g) == len(next(iter(maximum_matchings(g))))


def test_mis_facts_for_trees():
    # Core vertices miss some maximum independent set; N-vertices swing.
    from nulldecomp import tree_decomposition

    for g in (path_graph(6), star_graph(4), path_graph(3)):
        d = tree_decomposition(g)
        mis = maximum_independent_sets(g)
        for v in d.core:
            assert any(v not in s for s in mis)
        for v in d.n_vertices:
            assert any(v in s for s in mis)
            assert any(v not in s for s in mis)


def test_eg_equals_support_on_trees():
    for g in (path_graph(3), path_graph(6), star_graph(4)):
        assert edmonds_gallai_set(g) == tree_support(g)
        assert max_independent_intersection(g) == tree_support(g)


def test_time_limit():
    g = cycle_graph(14)
    with pytest.raises(BudgetExceeded):
        maximum_independent_sets(g, OracleBudget(max_vertices=14, time_limit=0.0))
