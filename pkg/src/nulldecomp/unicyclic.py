"""Type I / Type II classification and explicit null-space bases for unicyclic graphs.

A unicyclic graph is Type I when some cycle vertex v falls outside the support
of its own pendant tree, and Type II when every cycle vertex sits inside.  The
class decides how a kernel basis of the whole graph assembles from kernels of
subgraphs:

* Type I splits along the witness v into the pendant tree and its complement.
  Complement kernel vectors whose coordinates at v's two cycle neighbors sum
  to zero extend by zero-padding; if some vector has a nonzero sum, a single
  corrected vector (a scaled complement pivot plus a full-support kernel
  vector of the pendant tree minus v) fills the gap.
* Type II extends the kernel of the forest left after deleting the cycle.
  When the cycle length is a multiple of 4 the cycle itself contributes two
  extra vectors z1 and z2: alternating-sign sums of normalized full-support
  pendant-tree vectors over the odd and even cycle positions.

Both constructions are verified elsewhere against the canonical RREF kernel
(same span, exact annihilation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InternalCheckError,
    NormalizationFailure,
    NotUnicyclic,
    RecursionMismatch,
    WrongType,
)
from .graph import CycleInfo, Graph, find_cycle, pendant_trees
from .linalg import Vector, null_space_basis, nullity, vec_add, vec_scale
from .trees import full_support_vector, tree_support

TYPE1 = "type1"
TYPE2 = "type2"

# Provenance tags describing how each basis vector was constructed.
RREF_CANONICAL = "RrefCanonical"
EXTENDED_PENDANT = "ExtendedPendant"
EXTENDED_COMPLEMENT = "ExtendedComplement"
CORRECTED = "Corrected"
EXTENDED_FOREST = "ExtendedForest"
CYCLE_ALTERNATING = "CycleAlternating"


@dataclass(frozen=True)
class UnicyclicClass:
    """Classification result: the tag, the cycle, and (for Type I) a witness.

    The witness is the smallest-index cycle vertex that lies outside the
    support of its pendant tree.  Any qualifying vertex would do; fixing the
    smallest keeps every downstream construction reproducible.
    """

    tag: str
    cycle: CycleInfo
    witness: int | None = None


@dataclass(frozen=True)
class NullBasis:
    """An exact kernel basis of A(G) with per-vector construction provenance."""

    vectors: tuple[Vector, ...]
    provenance: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vectors)


def classify(g: Graph) -> UnicyclicClass:
    """Decide Type I / Type II by testing each cycle vertex against its pendant tree."""
    if not g.is_unicyclic():
        raise NotUnicyclic(f"graph has {g.n} vertices and {g.edge_count} edges")
    cycle = find_cycle(g)
    pend = pendant_trees(g, cycle)
    for v in sorted(cycle.vertices):
        tree = g.induced_subgraph(pend[v])
        if tree.index_of(g.labels[v]) not in tree_support(tree):
            return UnicyclicClass(TYPE1, cycle, witness=v)
    return UnicyclicClass(TYPE2, cycle)


def extend_vector(x: Sequence[Fraction], h_vertices: Sequence[int], g: Graph) -> Vector:
    """Zero-pad a subgraph vector to the full vertex set of ``g``.

    ``h_vertices`` are g-indices in ascending order; coordinate j of ``x``
    belongs to ``h_vertices[j]`` (the order induced subgraphs inherit).
    """
    positions = list(h_vertices)
    if len(x) != len(positions):
        raise DimensionMismatch(
            f"vector has {len(x)} coordinates for {len(positions)} vertices"
        )
    if any(not 0 <= v < g.n for v in positions):
        raise DimensionMismatch("subgraph vertex index out of range")
    coords = [Fraction(0)] * g.n
    for value, v in zip(x, positions):
        coords[v] = Fraction(value)
    return tuple(coords)


def cycle_nullity(length: int) -> int:
    """Nullity of a plain cycle: 2 when the length is divisible by 4, else 0."""
    return 2 if length % 4 == 0 else 0


def unicyclic_nullity(g: Graph, cls: UnicyclicClass | None = None) -> int:
    """Nullity via the pendant-tree recursion, cross-checked against the rank.

    Type I with witness v: nullity(G) = nullity(G{v}) + nullity(G - G{v}).
    Type II: nullity(G) = nullity(G - C) + nullity(C).
    A mismatch with the direct rank computation is a bug, never a data error.
    """
    if cls is None:
        cls = classify(g)
    if cls.tag == TYPE1:
        pend = pendant_trees(g, cls.cycle)[cls.witness]
        tree = g.induced_subgraph(pend)
        rest = g.delete_vertices(pend)
        recursed = nullity(tree.adjacency_matrix()) + nullity(rest.adjacency_matrix())
    else:
        forest = g.delete_vertices(cls.cycle.vertices)
        recursed = nullity(forest.adjacency_matrix()) + cycle_nullity(cls.cycle.length)
    direct = nullity(g.adjacency_matrix())
    if recursed != direct:
        raise RecursionMismatch(
            f"pendant-tree recursion gives {recursed}, direct rank gives {direct}"
        )
    return direct


def rref_null_basis(g: Graph) -> NullBasis:
    """Canonical kernel basis of A(g), tagged RrefCanonical.  Works on any graph."""
    vectors = tuple(null_space_basis(g.adjacency_matrix()))
    return NullBasis(vectors, (RREF_CANONICAL,) * len(vectors))


def type1_null_basis(g: Graph, cls: UnicyclicClass) -> NullBasis:
    """Kernel basis of a Type I unicyclic graph built from subgraph kernels."""
    if cls.tag != TYPE1:
        raise WrongType("type1_null_basis needs a Type I classification")
    if not g.is_unicyclic():
        raise NotUnicyclic(f"graph has {g.n} vertices and {g.edge_count} edges")
    v = cls.witness
    u, w = cls.cycle.neighbors_on_cycle(v)

    pend_vertices = sorted(pendant_trees(g, cls.cycle)[v])
    tree = g.induced_subgraph(pend_vertices)
    rest_vertices = sorted(set(range(g.n)) - set(pend_vertices))
    rest = g.induced_subgraph(rest_vertices)
    rest_pos = {vertex: j for j, vertex in enumerate(rest_vertices)}
    pos_u, pos_w = rest_pos[u], rest_pos[w]

    tree_basis = null_space_basis(tree.adjacency_matrix())
    rest_basis = null_space_basis(rest.adjacency_matrix())

    def cycle_sum(vec: Vector) -> Fraction:
        return vec[pos_u] + vec[pos_w]

    vectors: list[Vector] = []
    provenance: list[str] = []

    pivot = next((vec for vec in rest_basis if cycle_sum(vec) != 0), None)
    if pivot is None:
        # Every complement kernel vector already extends to a kernel vector.
        for vec in rest_basis:
            vectors.append(extend_vector(vec, rest_vertices, g))
            provenance.append(EXTENDED_COMPLEMENT)
    else:
        zero_sum = [
            vec_add(vec, vec_scale(-cycle_sum(vec) / cycle_sum(pivot), pivot))
            for vec in rest_basis
            if vec is not pivot
        ]
        sub_vertices = sorted(set(pend_vertices) - {v})
        sub = g.induced_subgraph(sub_vertices)
        sub_pos = {vertex: j for j, vertex in enumerate(sub_vertices)}
        neighbor_positions = [sub_pos[t] for t in g.neighbors(v) if t in sub_pos]
        if not (set(g.neighbors(v)) & {sub_vertices[j] for j in tree_support(sub)}):
            raise InternalCheckError(
                "witness vertex has no supported neighbor in its deleted pendant tree"
            )
        sub_basis = null_space_basis(sub.adjacency_matrix())
        # The neighbor-sum must be nonzero or the corrected vector collapses
        # into the span of the extended pendant-tree kernel.
        y = full_support_vector(sub_basis, nonzero_sum_indices=neighbor_positions)
        coeff = -sum(y[j] for j in neighbor_positions) / cycle_sum(pivot)
        corrected = vec_add(
            vec_scale(coeff, extend_vector(pivot, rest_vertices, g)),
            extend_vector(y, sub_vertices, g),
        )
        vectors.append(corrected)
        provenance.append(CORRECTED)
        for vec in zero_sum:
            vectors.append(extend_vector(vec, rest_vertices, g))
            provenance.append(EXTENDED_COMPLEMENT)
    for vec in tree_basis:
        vectors.append(extend_vector(vec, pend_vertices, g))
        provenance.append(EXTENDED_PENDANT)
    return NullBasis(tuple(vectors), tuple(provenance))


def type2_null_basis(g: Graph, cls: UnicyclicClass) -> NullBasis:
    """Kernel basis of a Type II unicyclic graph built from subgraph kernels."""
    if cls.tag != TYPE2:
        raise WrongType("type2_null_basis needs a Type II classification")
    if not g.is_unicyclic():
        raise NotUnicyclic(f"graph has {g.n} vertices and {g.edge_count} edges")
    cyc = cls.cycle.vertices
    forest_vertices = sorted(set(range(g.n)) - set(cyc))
    forest = g.induced_subgraph(forest_vertices)

    vectors: list[Vector] = []
    provenance: list[str] = []
    for vec in null_space_basis(forest.adjacency_matrix()):
        vectors.append(extend_vector(vec, forest_vertices, g))
        provenance.append(EXTENDED_FOREST)

    if cls.cycle.length % 4 == 0:
        pend = pendant_trees(g, cls.cycle)
        normalized: dict[int, Vector] = {}
        for v in cyc:
            tree_vertices = sorted(pend[v])
            tree = g.induced_subgraph(tree_vertices)
            pos_v = tree_vertices.index(v)
            x = full_support_vector(null_space_basis(tree.adjacency_matrix()))
            if x[pos_v] == 0:
                raise NormalizationFailure(
                    f"full-support vector vanishes at cycle vertex {g.labels[v]!r}"
                )
            x = vec_scale(1 / x[pos_v], x)
            normalized[v] = extend_vector(x, tree_vertices, g)
        half = cls.cycle.length // 2
        z1: Vector = tuple(Fraction(0) for _ in range(g.n))
        z2: Vector = tuple(Fraction(0) for _ in range(g.n))
        for m in range(half):
            sign = Fraction(-1 if m % 2 == 0 else 1)
            z1 = vec_add(z1, vec_scale(sign, normalized[cyc[2 * m]]))
            z2 = vec_add(z2, vec_scale(sign, normalized[cyc[2 * m + 1]]))
        vectors.extend((z1, z2))
        provenance.extend((CYCLE_ALTERNATING, CYCLE_ALTERNATING))
    return NullBasis(tuple(vectors), tuple(provenance))


def constructed_null_basis(g: Graph, cls: UnicyclicClass | None = None) -> NullBasis:
    """Dispatch to the Type I or Type II construction; forests get the canonical basis."""
    if g.is_forest():
        return rref_null_basis(g)
    if cls is None:
        cls = classify(g)
    if cls.tag == TYPE1:
        return type1_null_basis(g, cls)
    return type2_null_basis(g, cls)
