"""
The graph model shared by every other module.

Vertices are integers. Deleting a vertex tombstones it: the ids of the other
vertices never change, so rule traces can refer to the ids of the input file.
`compact` renumbers a graph to 0..n-1 when it has to be written out.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator

import networkx as nx
import numpy as np

from .constants import DENSE_LIMIT
from .settings import settings
from .utils import edge, sorted_edges

__all__ = [
    "Edge",
    "Graph",
    "GraphFormatError",
    "load_graph",
    "dump_graph",
    "read_graph",
    "write_graph",
    "load_edge_list",
    "complement",
    "connected_components",
    "true_twin_classes",
    "is_join",
    "induced_subgraph",
]

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """An edge-list document that does not describe a simple graph."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class Graph:
    """A simple, loopless, undirected graph stored as adjacency sets."""

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        self._adj: dict[int, set[int]] = {v: set() for v in sorted(vertices)}
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def with_vertices(cls, n: int, edges: Iterable[Edge] = ()) -> Graph:
        """A graph on the vertices 0..n-1."""
        return cls(range(n), edges)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> Graph:
        return cls(nx_graph.nodes, nx_graph.edges)

    # Queries

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def vertices(self) -> list[int]:
        """Live vertices, in ascending order."""
        return sorted(self._adj)

    def edges(self) -> list[Edge]:
        """All edges (u, v) with u < v, sorted."""
        return [(u, v) for u in self.vertices() for v in sorted(self._adj[u]) if u < v]

    def non_edges(self, among: Iterable[int] | None = None) -> list[Edge]:
        """All pairs u < v of distinct non-adjacent vertices, sorted."""
        vertices = self.vertices() if among is None else sorted(among)
        return [
            (u, v)
            for i, u in enumerate(vertices)
            for v in vertices[i + 1 :]
            if v not in self._adj[u]
        ]

    def neighbors(self, v: int) -> set[int]:
        """The open neighborhood of v. Do not mutate it."""
        return self._adj[v]

    def closed_neighbors(self, v: int) -> set[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vertices = list(vertices)
        return all(
            v in self._adj[u] for i, u in enumerate(vertices) for v in vertices[i + 1 :]
        )

    def neighbors_in(self, v: int, s: set[int] | frozenset[int]) -> set[int]:
        """N_S(v), the neighbors of v inside s."""
        return self._adj[v] & s

    # Mutation

    def add_vertex(self, v: int):
        if v in self._adj:
            raise ValueError(f"vertex {v} already exists")
        self._adj[v] = set()

    def add_edge(self, u: int, v: int):
        if u == v:
            raise ValueError(f"self-loop on vertex {u}")
        if u not in self._adj or v not in self._adj:
            raise ValueError(f"edge {u}-{v} has an endpoint that is not a vertex")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def add_edges(self, edges: Iterable[Edge]):
        for u, v in edges:
            self.add_edge(u, v)
        self.check()

    def remove_edge(self, u: int, v: int):
        if v not in self._adj.get(u, ()):
            raise ValueError(f"{u}-{v} is not an edge")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def remove_vertices(self, vertices: Iterable[int]):
        for v in vertices:
            if v not in self._adj:
                raise ValueError(f"vertex {v} is not in the graph")
            for u in self._adj.pop(v):
                self._adj[u].discard(v)
        self.check()

    def check(self):
        """Assert symmetry and irreflexivity, when the settings ask for it."""

        if not settings.check_invariants:
            return
        for u, nbrs in self._adj.items():
            assert u not in nbrs, f"self-loop on {u}"
            for v in nbrs:
                assert v in self._adj, f"{u} is adjacent to the removed vertex {v}"
                assert u in self._adj[v], f"asymmetric edge {u}-{v}"

    # Derived graphs

    def copy(self) -> Graph:
        g = Graph()
        g._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        return g

    def subgraph(self, vertices: Iterable[int]) -> Graph:
        """G[S], keeping the vertex ids."""
        keep = set(vertices)
        for v in keep:
            if v not in self._adj:
                raise ValueError(f"vertex {v} is not in the graph")
        g = Graph()
        g._adj = {v: self._adj[v] & keep for v in sorted(keep)}
        return g

    def without(self, vertices: Iterable[int]) -> Graph:
        """G - S, keeping the vertex ids."""
        drop = set(vertices)
        return self.subgraph(v for v in self._adj if v not in drop)

    def plus(self, edges: Iterable[Edge]) -> Graph:
        """G + F, the graph with the extra edges."""
        g = self.copy()
        g.add_edges(edges)
        return g

    def compact(self) -> tuple[Graph, list[int]]:
        """
        Renumber the vertices to 0..n-1, in increasing order of their ids.

        Returns:
            The renumbered graph and the list `labels` with labels[new] = old.
        """

        labels = self.vertices()
        index = {v: i for i, v in enumerate(labels)}
        g = Graph.with_vertices(len(labels))
        for u, v in self.edges():
            g.add_edge(index[u], index[v])
        return g, labels

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges())
        return g

    def adjacency_matrix(self) -> tuple[np.ndarray, list[int]]:
        """
        Dense boolean adjacency view, for graphs with at most DENSE_LIMIT vertices.

        Returns:
            The matrix and the list of vertex ids indexing its rows.
        """

        if self.n > DENSE_LIMIT:
            raise ValueError(f"dense view is limited to {DENSE_LIMIT} vertices, got {self.n}")
        labels = self.vertices()
        index = {v: i for i, v in enumerate(labels)}
        matrix = np.zeros((len(labels), len(labels)), dtype=bool)
        for u, v in self.edges():
            matrix[index[u], index[v]] = matrix[index[v], index[u]] = True
        return matrix, labels


# Input / output


def load_graph(text: str) -> Graph:
    """
    Parse an edge-list document.

    The first non-comment line is "n m", then m lines "u v" follow.
    Lines starting with '#' and blank lines are ignored.

    Raises:
        GraphFormatError: naming the line of the first problem.
    """

    header = None
    g = None
    seen: set[Edge] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}") from None

        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(line_no, "negative size in header")
            header = (a, b)
            g = Graph.with_vertices(a)
            continue

        n, _ = header
        for x in (a, b):
            if not 0 <= x < n:
                raise GraphFormatError(line_no, f"vertex {x} is out of range 0..{n - 1}")
        if a == b:
            raise GraphFormatError(line_no, f"self-loop on vertex {a}")
        e = edge(a, b)
        if e in seen:
            raise GraphFormatError(line_no, f"duplicate edge {a} {b}")
        seen.add(e)
        g.add_edge(a, b)

    if header is None:
        raise GraphFormatError(1, "missing header line 'n m'")
    if len(seen) != header[1]:
        raise GraphFormatError(
            len(text.splitlines()) or 1,
            f"header announces {header[1]} edges but {len(seen)} were given",
        )

    g.check()
    return g


def load_edge_list(text: str) -> list[Edge]:
    """Parse a header-less list of "u v" pairs, used for completion files."""

    result = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            u, v = map(int, tokens)
        except ValueError:
            raise GraphFormatError(line_no, f"expected two integers, got {line!r}") from None
        if u == v:
            raise GraphFormatError(line_no, f"self-loop on vertex {u}")
        result.append(edge(u, v))
    return sorted_edges(result)


def dump_graph(g: Graph) -> str:
    """The edge-list document of g. Tombstoned ids are compacted away."""

    compacted, _ = g.compact()
    lines = [f"{compacted.n} {compacted.m}"]
    lines.extend(f"{u} {v}" for u, v in compacted.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as f:
        return load_graph(f.read())


def write_graph(g: Graph, path):
    with open(path, "w") as f:
        f.write(dump_graph(g))


# Elementary operations


def complement(g: Graph) -> Graph:
    vertices = g.vertices()
    return Graph(vertices, g.non_edges())


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by their smallest vertex."""

    components = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(components, key=lambda c: c[0])


def true_twin_classes(g: Graph) -> list[list[int]]:
    """Classes of vertices with equal closed neighborhoods, ordered by smallest vertex."""

    classes: dict[frozenset[int], list[int]] = defaultdict(list)
    for v in g.vertices():
        classes[frozenset(g.closed_neighbors(v))].append(v)
    return sorted(classes.values(), key=lambda c: c[0])


def is_join(g: Graph, x_ordered: list[int], y: Iterable[int]) -> bool:
    """
    Whether N_Y(x_1) ⊆ N_Y(x_2) ⊆ ... ⊆ N_Y(x_p) along the given order of X.

    Raises:
        ValueError: if X and Y intersect.
    """

    y = set(y)
    overlap = y.intersection(x_ordered)
    if overlap:
        raise ValueError(f"X and Y share the vertices {sorted(overlap)}")

    nested = [g.neighbors_in(x, y) for x in x_ordered]
    return all(a <= b for a, b in zip(nested, nested[1:]))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """
    G[S] renumbered to 0..|S|-1 in increasing order of the ids of S.

    Returns:
        The graph and the map from the ids of g to the new ids.

    Raises:
        ValueError: if s contains a vertex that is not in g.
    """

    sub = g.subgraph(s)
    compacted, labels = sub.compact()
    return compacted, {old: new for new, old in enumerate(labels)}
