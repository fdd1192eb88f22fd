"""Cross-validation battery: every structural claim the package relies on,
expressed as a named boolean check over one graph.

The checks pit independent computation routes against each other: constructed
kernel bases against RREF kernels, structural decompositions against
basis-derived ones, closed formulas against brute-force search, and the
arithmetic identities that make the case analysis exhaustive.  A failure here
always means a bug somewhere, which is exactly what the fuzzing campaign is
hunting for.
"""

from __future__ import annotations

from typing import Callable

from .decomposition import (
    CASE_TII_4K,
    CASE_TII_NON4K,
    CASE_TI3,
    decomposition_from_basis,
    structural_decomposition,
    alpha,
    nu,
)
from .errors import NullDecompError
from .graph import Graph, pendant_trees
from .linalg import is_zero_vector, mat_vec, same_span
from .oracle import (
    ENUMERATION_BUDGET,
    SEARCH_BUDGET,
    OracleBudget,
    brute_alpha,
    brute_nu,
    edmonds_gallai_set,
    max_independent_intersection,
    maximum_independent_sets,
)
from .trees import tree_alpha, tree_decomposition, tree_nu, tree_support
from .unicyclic import (
    EXTENDED_FOREST,
    EXTENDED_PENDANT,
    TYPE2,
    classify,
    constructed_null_basis,
    rref_null_basis,
    unicyclic_nullity,
)


def run_checks(
    g: Graph,
    *,
    enum_budget: OracleBudget | None = None,
    search_budget: OracleBudget | None = None,
    oracle: bool = True,
) -> dict[str, bool]:
    """Run every applicable check on a forest or unicyclic graph.

    Oracle-backed checks are included only when the graph (or derived
    subgraph) fits the corresponding budget; everything else always runs.
    """
    enum_budget = enum_budget or ENUMERATION_BUDGET
    search_budget = search_budget or SEARCH_BUDGET
    if g.is_forest():
        return _forest_checks(g, enum_budget, search_budget, oracle)
    return _unicyclic_checks(g, enum_budget, search_budget, oracle)


def _guarded(checks: dict[str, bool], name: str, thunk: Callable[[], bool]) -> None:
    try:
        checks[name] = bool(thunk())
    except (NullDecompError, ZeroDivisionError):  # a raising check is a failing check
        checks[name] = False


def _forest_checks(
    g: Graph, enum_budget: OracleBudget, search_budget: OracleBudget, oracle: bool
) -> dict[str, bool]:
    checks: dict[str, bool] = {}
    matrix = g.adjacency_matrix()
    basis = rref_null_basis(g)
    d = tree_decomposition(g)

    checks["basis_exact"] = all(is_zero_vector(mat_vec(matrix, v)) for v in basis.vectors)
    checks["basis_count"] = len(basis.vectors) == d.nullity
    checks["even_n_set"] = len(d.n_vertices) % 2 == 0
    checks["support_independent"] = g.is_independent_set(d.support)
    checks["supp_core_disjoint"] = not (d.support & d.core)
    _guarded(checks, "supported_neighbor_after_deletion", lambda: _forest_neighbor_support(g))
    _guarded(checks, "formula_sum", lambda: tree_alpha(g) + tree_nu(g) == g.n)

    if oracle and g.n <= search_budget.max_vertices:
        _guarded(checks, "alpha_oracle", lambda: tree_alpha(g) == brute_alpha(g, search_budget))
        _guarded(checks, "nu_oracle", lambda: tree_nu(g) == brute_nu(g, search_budget))
    if oracle and g.n <= enum_budget.max_vertices:
        _guarded(
            checks,
            "eg_equals_support",
            lambda: edmonds_gallai_set(g, enum_budget) == d.support,
        )
        _guarded(
            checks,
            "mis_intersection_is_support",
            lambda: max_independent_intersection(g, enum_budget) == d.support,
        )
        mis = maximum_independent_sets(g, enum_budget)
        checks["core_absent_from_some_mis"] = all(
            any(v not in s for s in mis) for v in d.core
        )
        checks["n_vertex_swings_mis"] = all(
            any(v in s for s in mis) and any(v not in s for s in mis) for v in d.n_vertices
        )
    return checks


def _forest_neighbor_support(g: Graph) -> bool:
    """Every off-support vertex of a forest has a supported neighbor once deleted.

    Checked per component: for v outside the support of its tree T, the set
    N(v) intersected with the support of T - v must be nonempty.
    """
    support = tree_support(g)
    for comp in g.components():
        for v in comp:
            if v in support:
                continue
            rest = sorted(set(comp) - {v})
            sub = g.induced_subgraph(rest)
            sub_support = {rest[j] for j in tree_support(sub)}
            if not (set(g.neighbors(v)) & sub_support):
                return False
    return True


def _unicyclic_checks(
    g: Graph, enum_budget: OracleBudget, search_budget: OracleBudget, oracle: bool
) -> dict[str, bool]:
    checks: dict[str, bool] = {}
    cls = classify(g)
    matrix = g.adjacency_matrix()
    cycle_set = cls.cycle.vertex_set()
    pend = pendant_trees(g, cls.cycle)

    constructed = constructed_null_basis(g, cls)
    canonical = rref_null_basis(g)
    checks["basis_exact"] = all(
        is_zero_vector(mat_vec(matrix, v)) for v in constructed.vectors
    )
    checks["basis_count"] = len(constructed.vectors) == len(canonical.vectors)
    _guarded(checks, "nullity_recursion", lambda: unicyclic_nullity(g, cls) >= 0)
    checks["span_equality"] = same_span(constructed.vectors, canonical.vectors)
    tag = EXTENDED_PENDANT if cls.tag != TYPE2 else EXTENDED_FOREST
    name = "pendant_extension_null" if cls.tag != TYPE2 else "forest_extension_null"
    checks[name] = all(
        is_zero_vector(mat_vec(matrix, vec))
        for vec, prov in zip(constructed.vectors, constructed.provenance)
        if prov == tag
    )

    d_basis = decomposition_from_basis(g)
    d_struct = structural_decomposition(g)
    checks["structural_matches_basis"] = (
        d_basis.support == d_struct.support
        and d_basis.core == d_struct.core
        and d_basis.n_vertices == d_struct.n_vertices
        and d_basis.case == d_struct.case
    )
    checks["support_dichotomy"] = g.is_independent_set(d_basis.support) == (
        d_basis.case != CASE_TII_4K
    )
    expected_overlap = cycle_set if d_basis.case == CASE_TII_4K else frozenset()
    checks["supp_core_rule"] = (d_basis.support & d_basis.core) == expected_overlap
    checks["parity_rule"] = _parity_rule(d_basis.case, d_basis, cls.cycle.length)

    if oracle and g.n <= search_budget.max_vertices:
        _guarded(checks, "alpha_oracle", lambda: alpha(g, d_basis) == brute_alpha(g, search_budget))
        _guarded(checks, "nu_oracle", lambda: nu(g, d_basis) == brute_nu(g, search_budget))

    # Whole-graph counts split along the class's natural cut: at the witness's
    # pendant tree for Type I, at the cycle for Type II.  Doubled to stay
    # integral.
    if cls.tag != TYPE2:
        pend_d = tree_decomposition(g.induced_subgraph(sorted(pend[cls.witness])))
        rest_d = tree_decomposition(
            g.induced_subgraph(sorted(set(range(g.n)) - pend[cls.witness]))
        )
        halves = len(pend_d.n_vertices) + len(rest_d.n_vertices)
        checks["alpha_splits_at_witness"] = 2 * alpha(g, d_basis) == 2 * (
            len(pend_d.support) + len(rest_d.support)
        ) + halves
        checks["nu_splits_at_witness"] = 2 * nu(g, d_basis) == 2 * (
            len(pend_d.core) + len(rest_d.core)
        ) + halves
    else:
        cut_d = tree_decomposition(g.delete_vertices(cycle_set))
        base = 2 * (cls.cycle.length // 2)
        checks["alpha_splits_at_cycle"] = 2 * alpha(g, d_basis) == base + 2 * len(
            cut_d.support
        ) + len(cut_d.n_vertices)
        checks["nu_splits_at_cycle"] = 2 * nu(g, d_basis) == base + 2 * len(
            cut_d.core
        ) + len(cut_d.n_vertices)

    # Pendant-tree identities around off-support cycle vertices.
    off_support_roots = []
    for v in cls.cycle.vertices:
        tree_vs = sorted(pend[v])
        tree = g.induced_subgraph(tree_vs)
        sup = {tree_vs[j] for j in tree_support(tree)}
        if v not in sup:
            off_support_roots.append((v, tree_vs, sup))
    if off_support_roots:
        checks["supported_neighbor_after_deletion"] = True
        checks["support_survives_root_deletion"] = True
        checks["alpha_stable_under_root_deletion"] = True
        checks["nu_drops_under_root_deletion"] = True
        for v, tree_vs, sup in off_support_roots:
            rest = sorted(set(tree_vs) - {v})
            sub = g.induced_subgraph(rest)
            sub_support = {rest[j] for j in tree_support(sub)}
            if not (set(g.neighbors(v)) & sub_support):
                checks["supported_neighbor_after_deletion"] = False
            if not sup <= sub_support:
                checks["support_survives_root_deletion"] = False
            whole = tree_decomposition(g.induced_subgraph(tree_vs))
            deleted = tree_decomposition(sub)
            if 2 * len(whole.support) + len(whole.n_vertices) != 2 * len(
                deleted.support
            ) + len(deleted.n_vertices):
                checks["alpha_stable_under_root_deletion"] = False
            if 2 * len(whole.core) + len(whole.n_vertices) != 2 * len(deleted.core) + len(
                deleted.n_vertices
            ) + 2:
                checks["nu_drops_under_root_deletion"] = False

    forest_vs = sorted(set(range(g.n)) - cycle_set)
    forest = g.induced_subgraph(forest_vs)
    if cls.tag == TYPE2:
        forest_support = {forest_vs[j] for j in tree_support(forest)}
        checks["cycle_tree_neighbors_unsupported"] = all(
            u not in forest_support
            for v in cls.cycle.vertices
            for u in g.neighbors(v)
            if u in pend[v]
        )
        pendant_supports: set[int] = set()
        pendant_double_sum = 0
        for v in cls.cycle.vertices:
            tree_vs = sorted(pend[v])
            td = tree_decomposition(g.induced_subgraph(tree_vs))
            pendant_supports |= {tree_vs[j] for j in td.support}
            pendant_double_sum += 2 * len(td.support) + len(td.n_vertices)
        checks["forest_support_in_pendant_supports"] = forest_support <= pendant_supports
        forest_d = tree_decomposition(forest)
        checks["pendant_vs_forest_alpha_identity"] = pendant_double_sum == 2 * cls.cycle.length + 2 * len(
            forest_d.support
        ) + len(forest_d.n_vertices)

    # Formulas and enumeration facts on the derived forests.
    derived = [forest] + [
        g.induced_subgraph(sorted(pend[v] - {v})) for v in cls.cycle.vertices
    ]
    derived = [f for f in derived if f.n]
    if oracle:
        ok_formula, ok_eg, ok_mis = True, True, True
        for f in derived:
            if f.n <= search_budget.max_vertices:
                try:
                    if tree_alpha(f) != brute_alpha(f, search_budget):
                        ok_formula = False
                    if tree_nu(f) != brute_nu(f, search_budget):
                        ok_formula = False
                except NullDecompError:
                    ok_formula = False
            if f.n <= enum_budget.max_vertices:
                sup = tree_support(f)
                if edmonds_gallai_set(f, enum_budget) != sup:
                    ok_eg = False
                if max_independent_intersection(f, enum_budget) != sup:
                    ok_mis = False
        checks["derived_forest_formulas"] = ok_formula
        checks["eg_equals_support"] = ok_eg
        checks["mis_intersection_is_support"] = ok_mis
    return checks


def _parity_rule(case: str, d, cycle_length: int) -> bool:
    """Floor/ceil arguments have the parity the case analysis proves.

    The argument |N| - |support ∩ core| is even in TI-1, TI-2, TI-4 and
    TII-4k, odd in TI-3, and in TII-non4k it matches the cycle length's
    parity (the forest contribution to N is always even).
    """
    value = len(d.n_vertices) - len(d.support & d.core)
    if case == CASE_TI3:
        return value % 2 == 1
    if case == CASE_TII_NON4K:
        return value % 2 == cycle_length % 2
    return value % 2 == 0


def minimize_failing_graph(g: Graph, fails: Callable[[Graph], bool]) -> Graph:
    """Greedy shrink: drop leaves while the failure predicate still holds.

    Leaf deletion preserves the unicyclic class, so the result stays a valid
    reproduction for every unicyclic-only code path.
    """
    current = g
    while True:
        for v in range(current.n):
            if current.degree(v) == 1:
                candidate = current.delete_vertices([v])
                try:
                    still_failing = fails(candidate)
                except NullDecompError:
                    still_failing = True
                if still_failing:
                    current = candidate
                    break
        else:
            return current
