"""
Deterministic instance generators.

Every generator takes a seed and builds the same graph for the same
arguments. The planted models start from a member of the class and delete
`edits` random edges, so the instance has a completion with at most `edits`
edges.
"""

from __future__ import annotations

import logging

import numpy as np

from .constants import GENERATOR_MODELS
from .graph import Graph
from .utils import pairs

__all__ = [
    "gnp",
    "path",
    "cycle",
    "star",
    "proper_interval",
    "biclique_chain",
    "planted_pic",
    "planted_bcc",
    "generate",
    "NAMED_GRAPHS",
    "named_graph",
]

logger = logging.getLogger(__name__)


def _check_size(n: int):
    if n < 0:
        raise ValueError(f"the number of vertices must be nonnegative, got {n}")


def gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdős–Rényi graph: every pair is an edge with probability p."""

    _check_size(n)
    if not 0 <= p <= 1:
        raise ValueError(f"the edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    candidates = list(pairs(range(n)))
    keep = rng.random(len(candidates)) < p
    return Graph.with_vertices(n, [e for e, kept in zip(candidates, keep) if kept])


def path(n: int) -> Graph:
    _check_size(n)
    return Graph.with_vertices(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.with_vertices(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Vertex 0 adjacent to the n - 1 others. star(4) is the claw."""

    _check_size(n)
    return Graph.with_vertices(n, [(0, i) for i in range(1, n)])


def _relabel(edges, n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    perm = rng.permutation(n)
    return [(int(perm[u]), int(perm[v])) for u, v in edges]


def proper_interval(n: int, seed: int = 0, length: float | None = None) -> Graph:
    """
    A random unit interval graph with shuffled labels.

    Interval starts are drawn uniformly in [0, length]; two vertices are
    adjacent when their starts are at most 1 apart. Sorting by start gives an
    umbrella ordering.
    """

    _check_size(n)
    rng = np.random.default_rng(seed)
    length = length if length is not None else max(1.0, n / 3)
    starts = np.sort(rng.uniform(0, length, size=n))
    edges = [(u, v) for u, v in pairs(range(n)) if starts[v] - starts[u] <= 1]
    return Graph.with_vertices(n, _relabel(edges, n, rng))


def biclique_chain(n: int, seed: int = 0) -> Graph:
    """
    Two random cliques with a nested join between them, labels shuffled.

    The i-th vertex of the first clique sees a prefix of the second one, and
    the prefixes grow with i.
    """

    _check_size(n)
    rng = np.random.default_rng(seed)
    a = int(rng.integers(0, n + 1))
    first, second = list(range(a)), list(range(a, n))
    reach = np.sort(rng.integers(0, len(second) + 1, size=a))

    edges = list(pairs(first)) + list(pairs(second))
    for u, r in zip(first, reach):
        edges.extend((u, w) for w in second[: int(r)])
    return Graph.with_vertices(n, _relabel(edges, n, rng))


def _delete_edges(g: Graph, edits: int, rng: np.random.Generator) -> Graph:
    if edits < 0:
        raise ValueError(f"the number of edits must be nonnegative, got {edits}")
    edges = g.edges()
    chosen = rng.choice(len(edges), size=min(edits, len(edges)), replace=False)
    g = g.copy()
    for i in sorted(int(i) for i in chosen):
        g.remove_edge(*edges[i])
    return g


def planted_pic(n: int, edits: int, seed: int = 0) -> Graph:
    """A proper interval graph minus `edits` random edges."""

    g = proper_interval(n, seed)
    return _delete_edges(g, edits, np.random.default_rng([seed, 1]))


def planted_bcc(n: int, edits: int, seed: int = 0) -> Graph:
    """A bi-clique chain graph minus `edits` random edges."""

    g = biclique_chain(n, seed)
    return _delete_edges(g, edits, np.random.default_rng([seed, 1]))


def generate(model: str, n: int, seed: int = 0, edits: int = 0, p: float = 0.5) -> Graph:
    """
    Build a graph from one of the named models.

    Raises:
        ValueError: for an unknown model or bad sizes.
    """

    logger.debug("generating %s with n=%d seed=%d edits=%d p=%s", model, n, seed, edits, p)
    match model:
        case "gnp":
            return gnp(n, p, seed)
        case "planted-pic":
            return planted_pic(n, edits, seed)
        case "planted-bcc":
            return planted_bcc(n, edits, seed)
        case "path":
            return path(n)
        case "cycle":
            return cycle(n)
        case "star":
            return star(n)
        case _:
            raise ValueError(f"unknown model {model!r}, expected one of {GENERATOR_MODELS}")


def _named_edges() -> dict[str, tuple[int, list[tuple[int, int]]]]:
    return {
        "claw": (4, [(0, 1), (0, 2), (0, 3)]),
        "p4": (4, [(0, 1), (1, 2), (2, 3)]),
        "c4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        "c5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        "3k1": (3, []),
        "2k2": (4, [(0, 1), (2, 3)]),
        # Triangle 0 1 2 with a pendant vertex on each corner.
        "net": (6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        # Triangle 0 1 2 with a vertex on each side, adjacent to its two ends.
        "3-sun": (6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]),
        "k23": (5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    }


NAMED_GRAPHS = tuple(_named_edges())


def named_graph(name: str) -> Graph:
    """One of the small graphs of NAMED_GRAPHS: claw, p4, c4, c5, 3k1, 2k2, net, 3-sun, k23."""

    try:
        n, edges = _named_edges()[name]
    except KeyError:
        raise ValueError(f"unknown graph {name!r}, expected one of {NAMED_GRAPHS}") from None
    return Graph.with_vertices(n, edges)
