"""
Recognition of proper interval graphs and of bi-clique chain graphs.

Proper interval graphs are recognized with three lexicographic breadth first
searches: a plain one, then two "plus" sweeps that break ties in favor of the
vertex found last by the previous sweep. The last order of a connected proper
interval graph is an umbrella ordering. Every candidate order is verified, so
a wrong answer can only be a missed graph, never an invalid ordering.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx

from .graph import Edge, Graph, complement, connected_components, true_twin_classes
from .utils import edge

__all__ = [
    "BicliqueChainWitness",
    "lex_bfs",
    "umbrella_ordering",
    "connected_umbrella_ordering",
    "verify_umbrella",
    "is_umbrella",
    "extremal_edges",
    "is_proper_interval",
    "is_biclique_chain",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BicliqueChainWitness:
    """An umbrella ordering whose prefix order[:split] and suffix order[split:] are cliques."""

    order: tuple[int, ...]
    split: int

    @property
    def first_clique(self) -> tuple[int, ...]:
        return self.order[: self.split]

    @property
    def second_clique(self) -> tuple[int, ...]:
        return self.order[self.split :]


def lex_bfs(g: Graph, vertices: list[int], previous: list[int] | None = None) -> list[int]:
    """
    Lexicographic breadth first search of g[vertices].

    Labels are lists of decreasing visit numbers, compared as lists.
    Ties go to the smallest id, or, when a previous order is given (LBFS+),
    to the vertex that comes last in it.
    """

    n = len(vertices)
    if previous is None:
        tie = {v: v for v in vertices}
    else:
        tie = {v: -i for i, v in enumerate(previous)}

    labels: dict[int, list[int]] = {v: [] for v in vertices}
    order = []
    for step in range(n):
        chosen = max(labels, key=lambda v: (labels[v], -tie[v]))
        del labels[chosen]
        order.append(chosen)
        for u in g.neighbors(chosen):
            if u in labels:
                labels[u].append(n - step)
    return order


def _forward_reach(g: Graph, order: list[int]) -> list[int] | None:
    """
    For each position i, the last position adjacent to order[i] (or i itself).

    Returns None when some forward neighborhood is not contiguous.
    """

    position = {v: i for i, v in enumerate(order)}
    reach = []
    for i, v in enumerate(order):
        forward = sorted(position[u] for u in g.neighbors(v) if position[u] > i)
        if forward and forward != list(range(i + 1, forward[-1] + 1)):
            return None
        reach.append(forward[-1] if forward else i)
    return reach


def is_umbrella(g: Graph, order: list[int]) -> bool:
    """Fast check of the umbrella property: contiguous forward neighborhoods, monotone reach."""

    reach = _forward_reach(g, order)
    if reach is None:
        return False
    return all(a <= b for a, b in zip(reach, reach[1:]))


def verify_umbrella(g: Graph, order: list[int]) -> tuple[bool, tuple[int, int, int] | None]:
    """
    Check that order is an umbrella ordering of g.

    Returns:
        (True, None) when it is, otherwise (False, (u, w, v)) where uv is an edge,
        w lies between u and v, and uw or wv is missing. The triple is the first one
        in lexicographic order of positions.

    Raises:
        ValueError: if order is not a permutation of the vertices of g.
    """

    if len(order) != g.n or set(order) != set(g.vertices()):
        raise ValueError("the order is not a permutation of the vertices")

    if is_umbrella(g, order):
        return True, None

    n = len(order)
    for i in range(n):
        for l in range(i + 1, n):
            for j in range(l + 1, n):
                u, w, v = order[i], order[l], order[j]
                if g.has_edge(u, v) and not (g.has_edge(u, w) and g.has_edge(w, v)):
                    return False, (u, w, v)

    raise AssertionError("fast and slow umbrella checks disagree")


def _quotient(g: Graph, vertices: list[int]) -> tuple[Graph, dict[int, list[int]]]:
    """The true twin quotient of g[vertices], each class represented by its smallest id."""

    sub = g.subgraph(vertices)
    classes = true_twin_classes(sub)
    members = {c[0]: c for c in classes}
    return sub.subgraph(members), members


def connected_umbrella_ordering(g: Graph, vertices: list[int]) -> list[int] | None:
    """
    Umbrella ordering of the connected graph g[vertices], or None.

    The twin-free quotient has a unique ordering up to reversal; we orient it
    as the lexicographically smallest of the two and expand each twin class
    in increasing order of ids.
    """

    quotient, members = _quotient(g, vertices)
    reps = quotient.vertices()

    order = lex_bfs(quotient, reps)
    order = lex_bfs(quotient, reps, order)
    order = lex_bfs(quotient, reps, order)
    if not is_umbrella(quotient, order):
        return None

    order = min(order, order[::-1])
    return [v for rep in order for v in members[rep]]


def umbrella_ordering(g: Graph) -> list[int] | None:
    """
    An umbrella ordering of g if g is a proper interval graph, otherwise None.

    Components are laid out one after the other, by their smallest vertex.
    Maximal sets of true twins are consecutive.
    """

    result = []
    for component in connected_components(g):
        order = connected_umbrella_ordering(g, component)
        if order is None:
            logger.debug("component starting at %d is not proper interval", component[0])
            return None
        result.extend(order)
    return result


def is_proper_interval(g: Graph) -> bool:
    return umbrella_ordering(g) is not None


def extremal_edges(g: Graph, order: list[int]) -> set[Edge]:
    """
    Edges uv of an umbrella ordering not nested in the span of another edge.

    Raises:
        ValueError: if order is not an umbrella ordering of g.
    """

    ok, _ = verify_umbrella(g, order)
    if not ok:
        raise ValueError("extremal edges need an umbrella ordering")

    reach = _forward_reach(g, order)
    result = set()
    best_before = -1
    for i, v in enumerate(order):
        j = reach[i]
        if j > i and j > best_before:
            result.add(edge(v, order[j]))
        best_before = max(best_before, j)
    return result


def is_biclique_chain(g: Graph) -> BicliqueChainWitness | None:
    """
    Recognize two cliques linked by a join.

    The complement must be a bipartite graph with at most one component that has
    edges, and nested neighborhoods. Vertices isolated in the complement are
    universal in g and go at the end of the first clique.
    """

    if g.n == 0:
        return BicliqueChainWitness((), 0)

    h = complement(g)
    nontrivial = [c for c in connected_components(h) if len(c) > 1]
    if len(nontrivial) > 1:
        return None

    if not nontrivial:
        first, second = g.vertices(), []
    else:
        component = h.subgraph(nontrivial[0])
        nx_component = component.to_networkx()
        if not nx.is_bipartite(nx_component):
            return None
        side_a, side_b = nx.bipartite.sets(nx_component)
        if min(nontrivial[0]) not in side_a:
            side_a, side_b = side_b, side_a
        isolated = [v for v in g.vertices() if h.degree(v) == 0]
        first = list(side_a) + isolated
        second = list(side_b)

    # Growing neighborhoods in g toward the junction of the two cliques.
    first.sort(key=lambda v: (-h.degree(v), v))
    second.sort(key=lambda v: (h.degree(v), v))
    order = first + second

    if not (g.is_clique(first) and g.is_clique(second) and is_umbrella(g, order)):
        return None
    return BicliqueChainWitness(tuple(order), len(first))
