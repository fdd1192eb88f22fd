"""Labeled simple undirected graphs with dense indices, plus structure queries.

Vertices carry arbitrary non-whitespace label tokens.  Internally every graph
uses dense indices 0..n-1 assigned by ascending lexicographic label order, so
all derived output (bases, decompositions, reports) is deterministic for a
given vertex set.

Edge-list text format: one edge per line as two whitespace-separated labels;
a line with a single token declares an isolated vertex; blank lines and lines
starting with ``#`` are ignored.

Graphs are immutable; every operation is a pure function returning new values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdge,
    EmptyInput,
    MalformedLine,
    NotUnicyclic,
    SelfLoop,
    UnknownVertex,
)
from .linalg import Matrix


@dataclass(frozen=True)
class Graph:
    """Canonical simple undirected graph.

    ``labels`` is lexicographically sorted and index i belongs to labels[i];
    adjacency lists are sorted ascending.  Construct through
    :func:`parse_edge_list`, :meth:`Graph.from_edges`, or the derived-graph
    methods, all of which produce this canonical form.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate labels")
        if len(self.adjacency) != n:
            raise ValueError("adjacency length does not match label count")
        if any(self.labels[i] > self.labels[i + 1] for i in range(n - 1)):
            raise ValueError("labels not sorted")
        for i, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency list of vertex {i} not sorted/distinct")
            if i in nbrs:
                raise ValueError(f"self-loop at vertex {i}")
            for j in nbrs:
                if not 0 <= j < n:
                    raise ValueError(f"neighbor index {j} out of range")
                if i not in self.adjacency[j]:
                    raise ValueError(f"asymmetric edge {i}-{j}")

    @staticmethod
    def from_edges(edges: Iterable[tuple[str, str]], isolated: Iterable[str] = ()) -> Graph:
        """Build the canonical graph on the given labeled edges.

        Raises SelfLoop / DuplicateEdge on bad input (without line context;
        the parser adds that).
        """
        label_set: set[str] = set(isolated)
        pairs: list[tuple[str, str]] = []
        seen: set[frozenset[str]] = set()
        for a, b in edges:
            if a == b:
                raise SelfLoop(f"self-loop at {a!r}")
            key = frozenset((a, b))
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {a!r} {b!r}")
            seen.add(key)
            label_set.update((a, b))
            pairs.append((a, b))
        labels = tuple(sorted(label_set))
        index = {lab: i for i, lab in enumerate(labels)}
        nbrs: list[set[int]] = [set() for _ in labels]
        for a, b in pairs:
            nbrs[index[a]].add(index[b])
            nbrs[index[b]].add(index[a])
        return Graph(labels, tuple(tuple(sorted(s)) for s in nbrs))

    # -- basic queries ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(f"unknown vertex label {label!r}") from None

    def label_set(self, indices: Iterable[int]) -> frozenset[str]:
        return frozenset(self.labels[i] for i in indices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """Union of open neighborhoods of the given vertices."""
        out: set[int] = set()
        for v in vertices:
            out.update(self.adjacency[v])
        return frozenset(out)

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        vs = set(vertices)
        return all(not (set(self.adjacency[v]) & vs) for v in vs)

    # -- connectivity and class tests ------------------------------------

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted index tuples, ordered by smallest member."""
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for start in range(self.n):
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.components())

    def is_unicyclic(self) -> bool:
        """Connected with exactly one cycle, i.e. connected and |E| = |V|."""
        return self.n > 0 and self.is_connected() and self.edge_count == self.n

    # -- derived graphs ---------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on the given indices; labels are preserved.

        The new graph's index j corresponds to ``sorted(vertices)[j]`` here,
        because label order is inherited from this graph.
        """
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise UnknownVertex(f"vertex index {v} out of range")
        pos = {v: j for j, v in enumerate(vs)}
        adjacency = tuple(
            tuple(pos[w] for w in self.adjacency[v] if w in pos) for v in vs
        )
        return Graph(tuple(self.labels[v] for v in vs), adjacency)

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def adjacency_matrix(self) -> Matrix:
        """Dense 0/1 adjacency matrix in index order, as exact rationals."""
        zero, one = Fraction(0), Fraction(1)
        matrix = [[zero] * self.n for _ in range(self.n)]
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                matrix[v][w] = one
        return matrix

    # -- serialization ----------------------------------------------------

    def to_edge_list(self) -> str:
        """Canonical edge-list text; ``parse_edge_list`` inverts this exactly."""
        lines = [f"{self.labels[u]} {self.labels[v]}" for u, v in self.edges()]
        lines.extend(self.labels[v] for v in range(self.n) if not self.adjacency[v])
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass(frozen=True)
class CycleInfo:
    """The unique cycle of a unicyclic graph, canonically oriented.

    Traversal starts at the smallest-index cycle vertex and proceeds toward
    its smaller-index cycle neighbor, which pins down one of the two possible
    orientations.  Constructions that hang off an explicit cycle indexing
    depend on this being reproducible.
    """

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def neighbors_on_cycle(self, v: int) -> tuple[int, int]:
        i = self.vertices.index(v)
        return (self.vertices[i - 1], self.vertices[(i + 1) % len(self.vertices)])


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a canonical :class:`Graph`.

    Raises EmptyInput / MalformedLine / SelfLoop / DuplicateEdge, each naming
    the offending line.
    """
    edges: list[tuple[str, str]] = []
    isolated: list[str] = []
    seen: set[frozenset[str]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            isolated.append(tokens[0])
            continue
        if len(tokens) != 2:
            raise MalformedLine("expected one or two tokens", line_no, raw)
        a, b = tokens
        if a == b:
            raise SelfLoop(f"self-loop at {a!r}", line_no, raw)
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {a!r} {b!r}", line_no, raw)
        seen.add(key)
        edges.append((a, b))
    if not edges and not isolated:
        raise EmptyInput("no vertices or edges in input")
    return Graph.from_edges(edges, isolated)


def find_cycle(g: Graph) -> CycleInfo:
    """The unique cycle of a unicyclic graph, canonically oriented.

    Found by peeling degree-1 vertices until only the cycle remains.
    """
    if not g.is_unicyclic():
        raise NotUnicyclic(f"graph has {g.n} vertices and {g.edge_count} edges")
    degrees = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    queue = [v for v in range(g.n) if degrees[v] == 1]
    while queue:
        v = queue.pop()
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degrees[w] -= 1
                if degrees[w] == 1:
                    queue.append(w)
    start = min(alive)
    on_cycle = [w for w in g.neighbors(start) if w in alive]
    walk = [start, min(on_cycle)]
    while True:
        prev, cur = walk[-2], walk[-1]
        nxt = next(w for w in g.neighbors(cur) if w in alive and w != prev)
        if nxt == start:
            break
        walk.append(nxt)
    return CycleInfo(tuple(walk))


def pendant_trees(g: Graph, cycle: CycleInfo | None = None) -> dict[int, frozenset[int]]:
    """Map each cycle vertex v to the vertex set of the tree hanging at v.

    Computed by deleting the cycle edges: each remaining component holds
    exactly one cycle vertex and is that vertex's pendant tree.  The sets
    partition the vertex set.
    """
    if cycle is None:
        cycle = find_cycle(g)
    cyc = cycle.vertices
    cycle_edges = {
        frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))
    }
    result: dict[int, frozenset[int]] = {}
    for v in cyc:
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in g.neighbors(x):
                if w in comp or frozenset((x, w)) in cycle_edges:
                    continue
                comp.add(w)
                stack.append(w)
        result[v] = frozenset(comp)
    return result
