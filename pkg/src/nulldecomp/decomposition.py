"""Support/core/N-vertex decomposition of forests and unicyclic graphs,
case analysis, and the closed formulas for the independence and matching
numbers.

Two independent routes produce the decomposition:

* ``decomposition_from_basis`` reads the support straight off the canonical
  kernel basis of the whole adjacency matrix.  This is the source of truth.
* ``structural_decomposition`` assembles the same sets from pendant-tree and
  complement decompositions according to a six-way case split (four Type I
  cases by how the complement kernel behaves at the witness's cycle
  neighbors, two Type II cases by cycle length mod 4).

Their agreement on every unicyclic graph is one of the package's central
verified properties.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import CaseContradiction, NotUnicyclic, OddNSet, UnsupportedGraphClass
from .graph import Graph, pendant_trees
from .linalg import null_space_basis, support_indices
from .trees import TreeDecomposition, tree_decomposition
from .unicyclic import TYPE1, TYPE2, UnicyclicClass, classify, unicyclic_nullity

CASE_TI1 = "TI-1"
CASE_TI2 = "TI-2"
CASE_TI3 = "TI-3"
CASE_TI4 = "TI-4"
CASE_TII_NON4K = "TII-non4k"
CASE_TII_4K = "TII-4k"
CASE_FOREST = "Forest"

TYPE1_CASES = (CASE_TI1, CASE_TI2, CASE_TI3, CASE_TI4)
TYPE2_CASES = (CASE_TII_NON4K, CASE_TII_4K)


@dataclass(frozen=True)
class Decomposition:
    """Support, core, and N-vertices of a graph, with case and class tags.

    ``support | core`` induces the S-graph, the rest the N-graph.  Support and
    core are disjoint except in the TII-4k case, where they intersect exactly
    in the cycle.
    """

    support: frozenset[int]
    core: frozenset[int]
    n_vertices: frozenset[int]
    case: str
    nullity: int
    cls: UnicyclicClass | None = None

    @property
    def s_graph_vertices(self) -> frozenset[int]:
        return self.support | self.core


def _sub_decomposition(g: Graph, vertices: frozenset[int] | set[int]) -> TreeDecomposition:
    """Decompose the induced forest, with the sets mapped back to g's indices."""
    vs = sorted(vertices)
    sub = g.induced_subgraph(vs)
    d = tree_decomposition(sub)
    back = {j: vs[j] for j in range(len(vs))}
    return TreeDecomposition(
        frozenset(back[j] for j in d.support),
        frozenset(back[j] for j in d.core),
        frozenset(back[j] for j in d.n_vertices),
        d.nullity,
    )


def _case_tag(g: Graph, cls: UnicyclicClass) -> str:
    """Select which of the six unicyclic cases applies."""
    if cls.tag == TYPE2:
        return CASE_TII_4K if cls.cycle.length % 4 == 0 else CASE_TII_NON4K
    v = cls.witness
    u, w = cls.cycle.neighbors_on_cycle(v)
    pend = pendant_trees(g, cls.cycle)[v]
    rest_vertices = sorted(set(range(g.n)) - pend)
    rest = g.induced_subgraph(rest_vertices)
    pos = {vertex: j for j, vertex in enumerate(rest_vertices)}
    basis = null_space_basis(rest.adjacency_matrix())
    if any(vec[pos[u]] + vec[pos[w]] != 0 for vec in basis):
        return CASE_TI4
    if all(vec[pos[u]] == 0 and vec[pos[w]] == 0 for vec in basis):
        return CASE_TI1
    pend_d = _sub_decomposition(g, pend)
    if v in pend_d.core:
        return CASE_TI2
    if v in pend_d.n_vertices:
        return CASE_TI3
    raise CaseContradiction(
        f"witness {g.labels[v]!r} matches no Type I case; support test inconsistent"
    )


def decomposition_from_basis(g: Graph) -> Decomposition:
    """Decomposition read off the canonical kernel basis of A(g).

    Accepts forests and unicyclic graphs; anything else is out of scope for
    the decomposition theory.
    """
    if g.is_forest():
        cls = None
        case = CASE_FOREST
    elif g.is_unicyclic():
        cls = classify(g)
        case = _case_tag(g, cls)
    else:
        raise UnsupportedGraphClass(
            f"graph with {g.n} vertices and {g.edge_count} edges is neither a forest nor unicyclic"
        )
    basis = null_space_basis(g.adjacency_matrix())
    support: set[int] = set()
    for vec in basis:
        support.update(support_indices(vec))
    core = g.neighborhood(support)
    n_vertices = frozenset(range(g.n)) - support - core
    return Decomposition(frozenset(support), core, n_vertices, case, len(basis), cls)


def structural_decomposition(g: Graph) -> Decomposition:
    """Decomposition assembled from subgraph decompositions, case by case."""
    if not g.is_unicyclic():
        raise NotUnicyclic(f"graph has {g.n} vertices and {g.edge_count} edges")
    cls = classify(g)
    case = _case_tag(g, cls)
    pend = pendant_trees(g, cls.cycle)

    if case in (CASE_TI1, CASE_TI2, CASE_TI3, CASE_TI4):
        v = cls.witness
        pend_vertices = pend[v]
        rest_vertices = frozenset(range(g.n)) - pend_vertices
        rest_d = _sub_decomposition(g, rest_vertices)
        if case == CASE_TI4:
            sub_d = _sub_decomposition(g, pend_vertices - {v})
            support = sub_d.support | rest_d.support
            core = sub_d.core | rest_d.core | {v}
            n_vertices = sub_d.n_vertices | rest_d.n_vertices
        else:
            pend_d = _sub_decomposition(g, pend_vertices)
            support = pend_d.support | rest_d.support
            core = pend_d.core | rest_d.core
            n_vertices = pend_d.n_vertices | rest_d.n_vertices
            if case == CASE_TI3:
                core |= {v}
                n_vertices -= {v}
    elif case == CASE_TII_NON4K:
        forest_d = _sub_decomposition(g, frozenset(range(g.n)) - cls.cycle.vertex_set())
        support = forest_d.support
        core = forest_d.core
        n_vertices = forest_d.n_vertices | cls.cycle.vertex_set()
    else:
        support, core, n_vertices = set(), set(cls.cycle.vertices), set()
        for v in cls.cycle.vertices:
            tree_d = _sub_decomposition(g, pend[v])
            support |= tree_d.support
            core |= tree_d.core
            n_vertices |= tree_d.n_vertices
    return Decomposition(
        frozenset(support),
        frozenset(core),
        frozenset(n_vertices),
        case,
        unicyclic_nullity(g, cls),
        cls,
    )


def s_graph(g: Graph, d: Decomposition) -> Graph:
    """Induced subgraph on the closed neighborhood of the support."""
    return g.induced_subgraph(d.s_graph_vertices)


def n_graph(g: Graph, d: Decomposition) -> Graph:
    """Induced subgraph on the N-vertices (everything off the support's closed neighborhood)."""
    return g.induced_subgraph(d.n_vertices)


def _ceil_half(value: int) -> int:
    return -((-value) // 2)


def alpha(g: Graph, d: Decomposition | None = None) -> int:
    """Independence number from the decomposition alone.

    Forests: |support| + |N|/2 per component.  Unicyclic graphs: when the
    whole cycle sits among the N-vertices the same floor formula applies;
    otherwise the count is |support| + ceil((|N| - |support ∩ core|) / 2).
    """
    if d is None:
        d = decomposition_from_basis(g)
    if d.case == CASE_FOREST:
        if len(d.n_vertices) % 2:
            raise OddNSet(f"odd N-vertex set of size {len(d.n_vertices)} on a forest")
        return len(d.support) + len(d.n_vertices) // 2
    if d.cls.cycle.vertex_set() <= d.n_vertices:
        return len(d.support) + len(d.n_vertices) // 2
    return len(d.support) + _ceil_half(len(d.n_vertices) - len(d.support & d.core))


def nu(g: Graph, d: Decomposition | None = None) -> int:
    """Matching number: |core| + floor((|N| - |support ∩ core|) / 2)."""
    if d is None:
        d = decomposition_from_basis(g)
    if d.case == CASE_FOREST:
        if len(d.n_vertices) % 2:
            raise OddNSet(f"odd N-vertex set of size {len(d.n_vertices)} on a forest")
        return len(d.core) + len(d.n_vertices) // 2
    return len(d.core) + (len(d.n_vertices) - len(d.support & d.core)) // 2


@dataclass(frozen=True)
class AnalysisReport:
    """Full analysis of one graph, serializable to a stable JSON shape."""

    graph: Graph
    decomposition: Decomposition
    alpha: int
    nu: int
    checks: Mapping[str, bool] = field(default_factory=dict)

    @property
    def class_tag(self) -> str:
        if self.decomposition.case == CASE_FOREST:
            return "forest"
        return TYPE1 if self.decomposition.case in TYPE1_CASES else TYPE2

    def to_dict(self) -> dict:
        g, d = self.graph, self.decomposition
        cycle = sorted(g.label_set(d.cls.cycle.vertices)) if d.cls else []
        return {
            "n": g.n,
            "m": g.edge_count,
            "class": self.class_tag,
            "case": d.case,
            "cycle": cycle,
            "nullity": d.nullity,
            "support": sorted(g.label_set(d.support)),
            "core": sorted(g.label_set(d.core)),
            "n_vertices": sorted(g.label_set(d.n_vertices)),
            "alpha": self.alpha,
            "nu": self.nu,
            "checks": dict(self.checks),
        }

    def to_text(self) -> str:
        data = self.to_dict()
        lines = [
            f"graph: {data['n']} vertices, {data['m']} edges",
            f"class: {data['class']} (case {data['case']})",
        ]
        if data["cycle"]:
            lines.append(f"cycle: {' '.join(data['cycle'])}")
        lines.append(f"nullity: {data['nullity']}")
        for key in ("support", "core", "n_vertices"):
            members = " ".join(data[key]) if data[key] else "(empty)"
            lines.append(f"{key.replace('_', '-')} ({len(data[key])}): {members}")
        lines.append(f"alpha: {data['alpha']}")
        lines.append(f"nu: {data['nu']}")
        if self.checks:
            passed = sum(self.checks.values())
            lines.append(f"checks: {passed}/{len(self.checks)} passed")
            for name, ok in sorted(self.checks.items()):
                if not ok:
                    lines.append(f"  FAILED: {name}")
        return "\n".join(lines) + "\n"


def analyze(g: Graph, *, verify: bool = False) -> AnalysisReport:
    """Decompose ``g`` and evaluate the closed formulas; optionally self-verify.

    With ``verify`` the report carries the full pass/fail map of structural,
    spectral, and oracle cross-checks (oracle checks only within budget).
    """
    d = decomposition_from_basis(g)
    report = AnalysisReport(g, d, alpha(g, d), nu(g, d))
    if verify:
        from .checks import run_checks

        return AnalysisReport(g, d, report.alpha, report.nu, run_checks(g))
    return report
