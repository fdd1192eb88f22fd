from __future__ import annotations

import pytest

from nulldecomp import (
    CASE_FOREST,
    CASE_TI1,
    CASE_TI3,
    CASE_TII_4K,
    CASE_TII_NON4K,
    Graph,
    alpha,
    analyze,
    decomposition_from_basis,
    n_graph,
    nu,
    s_graph,
    structural_decomposition,
)
from nulldecomp.errors import NotUnicyclic, UnsupportedGraphClass

from conftest import cycle_graph, cycle_with_attachments, path_graph


def labels(g: Graph, s) -> set[str]:
    return set(g.label_set(s))


def test_example_type1_decomposition(ex_type1):
    d = decomposition_from_basis(ex_type1)
    assert labels(ex_type1, d.support) == {"a", "b", "e", "f", "i"}
    assert labels(ex_type1, d.core) == {"c", "v", "g", "h"}
    assert len(d.n_vertices) == 9
    assert labels(ex_type1, d.n_vertices) == {"d", "l", "j", "m", "n", "o", "p", "r", "q"}
    assert d.case == CASE_TI3
    assert d.nullity == 2


def test_example_type1_formulas(ex_type1):
    assert alpha(ex_type1) == 10
    assert nu(ex_type1) == 8


def test_example_star_decomposition(ex_star):
    d = decomposition_from_basis(ex_star)
    assert labels(ex_star, d.support) == {"v7", "v8", "v9"}
    assert labels(ex_star, d.core) == {"v6"}
    assert len(d.n_vertices) == 14
    assert d.case == CASE_TI1
    gs = s_graph(ex_star, d)
    assert gs.n == 4 and gs.edge_count == 3
    gn = n_graph(ex_star, d)
    assert gn.n == 14


def test_example_five_cycle_decomposition(ex_five_cycle):
    # The circulating support listing for this example is an erratum (it
    # includes i, which the same listing places in the core, and has m as an
    # N-vertex while omitting q); the computed sets below are consistent
    # with its alpha = 15 and nu = 9.
    d = decomposition_from_basis(ex_five_cycle)
    assert labels(ex_five_cycle, d.support) == set("ghjlmtuvwyz")
    assert labels(ex_five_cycle, d.core) == set("firsx")
    assert labels(ex_five_cycle, d.n_vertices) == set("abcdenopq")
    assert (len(d.support), len(d.core), len(d.n_vertices)) == (11, 5, 9)
    assert d.case == CASE_TII_NON4K
    assert alpha(ex_five_cycle) == 15
    assert nu(ex_five_cycle) == 9


def test_example_four_cycle_decomposition(ex_four_cycle):
    d = decomposition_from_basis(ex_four_cycle)
    assert labels(ex_four_cycle, d.support) == set("bcdejluvzw")
    assert labels(ex_four_cycle, d.core) == set("faiuvzw")
    assert labels(ex_four_cycle, d.n_vertices) == {"g", "h"}
    assert d.case == CASE_TII_4K
    assert labels(ex_four_cycle, d.support & d.core) == {"u", "v", "w", "z"}
    assert d.nullity == 5
    assert alpha(ex_four_cycle) == 9
    assert nu(ex_four_cycle) == 6


def test_plain_c4():
    g = cycle_graph(4)
    d = decomposition_from_basis(g)
    assert d.support == d.core == frozenset(range(4))
    assert d.n_vertices == frozenset()
    assert alpha(g) == 2 and nu(g) == 2
    gs = s_graph(g, d)
    assert gs.n == 4 and gs.edge_count == 4
    assert n_graph(g, d).n == 0


def test_structural_agrees_on_examples(ex_type1, ex_star, ex_five_cycle, ex_four_cycle):
    for g in (ex_type1, ex_star, ex_five_cycle, ex_four_cycle):
        a = decomposition_from_basis(g)
        b = structural_decomposition(g)
        assert (a.support, a.core, a.n_vertices, a.case) == (
            b.support,
            b.core,
            b.n_vertices,
            b.case,
        )


def test_structural_rejects_forest():
    with pytest.raises(NotUnicyclic):
        structural_decomposition(path_graph(4))


def test_unsupported_graph_class():
    theta = Graph.from_edges(
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]
    )
    with pytest.raises(UnsupportedGraphClass):
        decomposition_from_basis(theta)
    with pytest.raises(UnsupportedGraphClass):
        alpha(theta)
    with pytest.raises(UnsupportedGraphClass):
        nu(theta)


def test_forest_route():
    g = path_graph(3)
    d = decomposition_from_basis(g)
    assert d.case == CASE_FOREST and d.cls is None
    assert alpha(g) == 2 and nu(g) == 1
    two = Graph.from_edges([("a", "b")])
    assert alpha(two) == 1 and nu(two) == 1


def test_empty_support_s_graph():
    g = path_graph(4)
    d = decomposition_from_basis(g)
    assert s_graph(g, d).n == 0
    assert n_graph(g, d) == g


def test_report_shape(ex_four_cycle):
    report = analyze(ex_four_cycle)
    data = report.to_dict()
    assert data["class"] == "type2" and data["case"] == CASE_TII_4K
    assert data["cycle"] == ["u", "v", "w", "z"]
    assert data["support"] == sorted(data["support"])
    assert data["alpha"] == 9 and data["nu"] == 6 and data["nullity"] == 5
    assert data["checks"] == {}
    assert data["n"] == 15 and data["m"] == 15
    assert report.alpha + report.nu <= ex_four_cycle.n
    text = report.to_text()
    assert "alpha: 9" in text and "case TII-4k" in text


def test_report_verified(ex_four_cycle):
    report = analyze(ex_four_cycle, verify=True)
    assert report.checks and all(report.checks.values())


def test_alpha_ge_support_outside_tii4k(ex_type1, ex_star):
    for g in (ex_type1, ex_star, cycle_graph(6)):
        d = decomposition_from_basis(g)
        assert d.case != CASE_TII_4K
        assert alpha(g, d) >= len(d.support)


def test_case_examples_from_families(families):
    for case, graphs in families.items():
        for g in graphs:
            assert structural_decomposition(g).case == case


def test_ti2_sets():
    g = cycle_with_attachments(4, leaves={0: 2})
    d = structural_decomposition(g)
    assert d.case == "TI-2"
    assert labels(g, d.support) == {"u00x00", "u00x01", "c01", "c03"}
    assert labels(g, d.core) == {"c00", "c02"}
    assert d.n_vertices == frozenset()
    assert alpha(g) == 4 and nu(g) == 2
