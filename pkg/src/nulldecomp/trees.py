"""Null decomposition of forests: support, core, N-vertices, closed formulas.

The support of a graph is the set of vertices carrying a nonzero coordinate in
some kernel vector of the adjacency matrix; by linearity it equals the union
of supports over any kernel basis, so the canonical RREF basis suffices.  The
core is the union of neighborhoods of supported vertices, and the N-vertices
are everything else.  For forests these three sets partition the vertex set
and yield exact formulas for the independence and matching numbers.

Every operation accepts any forest and distributes over components, since
derived graphs elsewhere in the package (cycle complements, rooted-tree
deletions) are forests rather than single trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, EmptyBasis, InternalCheckError, NotForest, OddNSet
from .graph import Graph
from .linalg import Vector, null_space_basis, support_indices, vec_add, vec_scale


@dataclass(frozen=True)
class TreeDecomposition:
    """Support / core / N-vertex partition of a forest, with its nullity."""

    support: frozenset[int]
    core: frozenset[int]
    n_vertices: frozenset[int]
    nullity: int


def _require_forest(t: Graph) -> None:
    if not t.is_forest():
        raise NotForest(f"graph with {t.n} vertices and {t.edge_count} edges contains a cycle")


def tree_support(t: Graph) -> frozenset[int]:
    """Vertices with a nonzero coordinate somewhere in the kernel of A(t)."""
    _require_forest(t)
    support: set[int] = set()
    for vec in null_space_basis(t.adjacency_matrix()):
        support.update(support_indices(vec))
    return frozenset(support)


def tree_decomposition(t: Graph) -> TreeDecomposition:
    _require_forest(t)
    basis = null_space_basis(t.adjacency_matrix())
    support: set[int] = set()
    for vec in basis:
        support.update(support_indices(vec))
    core = t.neighborhood(support)
    n_vertices = frozenset(range(t.n)) - support - core
    return TreeDecomposition(frozenset(support), core, n_vertices, len(basis))


def tree_alpha(t: Graph) -> int:
    """Independence number of a forest: |support| + |N-vertices| / 2."""
    d = tree_decomposition(t)
    if len(d.n_vertices) % 2:
        raise OddNSet(f"odd N-vertex set of size {len(d.n_vertices)} on a forest")
    return len(d.support) + len(d.n_vertices) // 2


def tree_nu(t: Graph) -> int:
    """Matching number of a forest: |core| + |N-vertices| / 2."""
    d = tree_decomposition(t)
    if len(d.n_vertices) % 2:
        raise OddNSet(f"odd N-vertex set of size {len(d.n_vertices)} on a forest")
    return len(d.core) + len(d.n_vertices) // 2


def full_support_vector(
    basis: Sequence[Vector],
    *,
    nonzero_sum_indices: Sequence[int] | None = None,
) -> Vector:
    """A vector in the span whose support is the union of the basis supports.

    Tries the coefficient vectors (1, t, t^2, ..., t^(k-1)) for t = 1, 2, 3,
    and so on, and returns the first combination in which no union-support
    coordinate cancels.  Each such coordinate is a nonzero polynomial in t of
    degree < k, so only finitely many t are bad and the search terminates.

    When ``nonzero_sum_indices`` is given, the sum of the result over those
    coordinates must come out nonzero as well.  Callers use this where the sum
    feeds a later division; the same finitely-many-roots argument applies as
    long as the sum functional does not vanish on the whole span, which the
    caller must guarantee (it is checked against the basis and reported as an
    internal error otherwise).
    """
    if not basis:
        raise EmptyBasis("cannot build a full-support vector from an empty basis")
    length = len(basis[0])
    if any(len(vec) != length for vec in basis):
        raise DimensionMismatch("basis vectors have differing lengths")
    union: frozenset[int] = frozenset().union(*(support_indices(vec) for vec in basis))
    if nonzero_sum_indices is not None:
        if all(sum(vec[i] for i in nonzero_sum_indices) == 0 for vec in basis):
            raise InternalCheckError(
                "sum functional vanishes on the entire span; no combination can satisfy it"
            )
    t = 0
    while True:
        t += 1
        if t > 10000:
            raise InternalCheckError("full-support search did not terminate")
        combo: Vector = tuple(Fraction(0) for _ in range(length))
        weight = Fraction(1)
        for vec in basis:
            combo = vec_add(combo, vec_scale(weight, vec))
            weight *= t
        if any(combo[i] == 0 for i in union):
            continue
        if nonzero_sum_indices is not None and sum(combo[i] for i in nonzero_sum_indices) == 0:
            continue
        return combo
