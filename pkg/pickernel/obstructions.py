"""
Forbidden induced subgraphs: enumeration, certificates and sunflowers.

Claws, 4-cycles and independent triples are enumerated by brute force,
which is fine on reduced instances. Holes are found from induced paths of
length two, nets and 3-suns from triangles.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

import networkx as nx
import numpy as np

from .constants import DENSE_LIMIT
from .graph import Edge, Graph
from .utils import edge

__all__ = [
    "ObstructionKind",
    "Obstruction",
    "Sunflower",
    "Census",
    "enumerate_claws",
    "enumerate_c4s",
    "enumerate_c5s",
    "enumerate_3k1s",
    "enumerate_triangles",
    "find_hole",
    "holes_through_p3s",
    "find_net",
    "find_3sun",
    "find_c5",
    "pic_certificate",
    "bcc_certificate",
    "find_claw_sunflower",
    "find_c4_sunflower",
    "find_3k1_sunflower",
    "obstruction_census",
    "is_valid_obstruction",
]

logger = logging.getLogger(__name__)


class ObstructionKind(Enum):
    CLAW = "claw"
    HOLE = "hole"
    NET = "net"
    THREE_SUN = "three_sun"
    C4 = "c4"
    C5 = "c5"
    THREE_K1 = "three_k1"


@dataclass(frozen=True)
class Obstruction:
    """
    A forbidden induced subgraph.

    Vertex order carries the roles: center then leaves for a claw, cycle order
    for holes, C4 and C5, triangle then the three outer vertices for nets and 3-suns
    (the i-th outer vertex hangs on the i-th triangle vertex for a net, and sees
    triangle vertices i and i+1 for a 3-sun).
    """

    kind: ObstructionKind
    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def internal_non_edges(self, g: Graph) -> list[Edge]:
        """The missing pairs among the vertices of the obstruction."""
        return g.non_edges(self.vertices)

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class Sunflower:
    """Obstructions sharing the non-edge `pair`, which must be in every small completion."""

    pair: Edge
    petals: tuple[Obstruction, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.petals)

    def to_json(self) -> dict:
        return {
            "kind": "sunflower",
            "pair": list(self.pair),
            "multiplicity": self.multiplicity,
            "petals": [p.to_json() for p in self.petals],
        }


@dataclass
class Census:
    """Which vertices take part in which obstructions."""

    claw_leaf_sets: int = 0
    claw_leaves: set[int] = field(default_factory=set)
    claw_vertices: set[int] = field(default_factory=set)
    c4_vertices: set[int] = field(default_factory=set)
    three_k1_vertices: set[int] = field(default_factory=set)

    @property
    def pic_dirty(self) -> set[int]:
        """Vertices that a clean K-join may not contain."""
        return self.claw_vertices | self.c4_vertices

    @property
    def bcc_dirty(self) -> set[int]:
        return self.three_k1_vertices | self.c4_vertices


# Enumeration


def enumerate_claws(g: Graph) -> Iterator[Obstruction]:
    for center in g.vertices():
        leaves = sorted(g.neighbors(center))
        for triple in itertools.combinations(leaves, 3):
            a, b, c = triple
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                yield Obstruction(ObstructionKind.CLAW, (center, *triple))


def enumerate_c4s(g: Graph) -> Iterator[Obstruction]:
    """Each induced 4-cycle once, starting at its smallest vertex."""

    for u, v in g.non_edges():
        common = sorted(w for w in g.neighbors(u) & g.neighbors(v) if w > u)
        for w1, w2 in itertools.combinations(common, 2):
            if not g.has_edge(w1, w2):
                yield Obstruction(ObstructionKind.C4, (u, w1, v, w2))


def enumerate_c5s(g: Graph) -> Iterator[Obstruction]:
    """Each induced 5-cycle once, as (a, b, c, d, e) with a smallest and b < e."""

    for a in g.vertices():
        nbrs = sorted(w for w in g.neighbors(a) if w > a)
        closed_a = g.closed_neighbors(a)
        for b, e in itertools.combinations(nbrs, 2):
            if g.has_edge(b, e):
                continue
            for c in sorted(g.neighbors(b)):
                if c < a or c in closed_a or g.has_edge(c, e):
                    continue
                for d in sorted(g.neighbors(c) & g.neighbors(e)):
                    if d < a or d in closed_a or g.has_edge(d, b):
                        continue
                    yield Obstruction(ObstructionKind.C5, (a, b, c, d, e))


def enumerate_3k1s(g: Graph) -> Iterator[Obstruction]:
    """Every independent triple once, sorted."""

    if g.n <= DENSE_LIMIT:
        matrix, labels = g.adjacency_matrix()
        independent = ~matrix
        np.fill_diagonal(independent, False)
        for i, j in zip(*np.nonzero(np.triu(independent))):
            for l in np.nonzero(independent[i] & independent[j])[0]:
                if l > j:
                    yield Obstruction(
                        ObstructionKind.THREE_K1, (labels[i], labels[j], labels[int(l)])
                    )
        return

    for u, v in g.non_edges():
        for w in g.vertices():
            if w > v and not g.has_edge(u, w) and not g.has_edge(v, w):
                yield Obstruction(ObstructionKind.THREE_K1, (u, v, w))


def enumerate_triangles(g: Graph) -> Iterator[tuple[int, int, int]]:
    for a in g.vertices():
        for b in sorted(w for w in g.neighbors(a) if w > a):
            for c in sorted(w for w in g.neighbors(a) & g.neighbors(b) if w > b):
                yield a, b, c


# Certificates


def _hole_through(g: Graph, a: int, b: int, c: int) -> list[int] | None:
    """Shortest induced cycle containing the induced path a-b-c, if any."""

    blocked = (g.closed_neighbors(b) - {a, c})
    sub = g.without(blocked).to_networkx()
    try:
        path = nx.shortest_path(sub, a, c)
    except nx.NetworkXNoPath:
        return None
    return [b, *path]


def holes_through_p3s(g: Graph) -> Iterator[Obstruction]:
    """
    For every induced path a-b-c, the shortest hole through it.

    Every hole contains such a path, so this finds a hole whenever there is one.
    """

    for b in g.vertices():
        for a, c in itertools.combinations(sorted(g.neighbors(b)), 2):
            if g.has_edge(a, c):
                continue
            cycle = _hole_through(g, a, b, c)
            if cycle is not None:
                yield Obstruction(ObstructionKind.HOLE, tuple(cycle))


def find_hole(g: Graph, shortest: bool = False) -> Obstruction | None:
    """An induced cycle of length at least 4, or None if g is chordal."""

    if nx.is_chordal(g.to_networkx()):
        return None
    holes = holes_through_p3s(g)
    if shortest:
        return min(holes, key=len, default=None)
    return next(holes, None)


def find_net(g: Graph) -> Obstruction | None:
    for a, b, c in enumerate_triangles(g):
        na, nb, nc = g.neighbors(a), g.neighbors(b), g.neighbors(c)
        pendants = (
            sorted(na - nb - nc - {b, c}),
            sorted(nb - na - nc - {a, c}),
            sorted(nc - na - nb - {a, b}),
        )
        for x, y, z in itertools.product(*pendants):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return Obstruction(ObstructionKind.NET, (a, b, c, x, y, z))
    return None


def find_3sun(g: Graph) -> Obstruction | None:
    for a, b, c in enumerate_triangles(g):
        na, nb, nc = g.neighbors(a), g.neighbors(b), g.neighbors(c)
        outer = (
            sorted((na & nb) - nc - {c}),
            sorted((nb & nc) - na - {a}),
            sorted((nc & na) - nb - {b}),
        )
        for x, y, z in itertools.product(*outer):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return Obstruction(ObstructionKind.THREE_SUN, (a, b, c, x, y, z))
    return None


def find_c5(g: Graph) -> Obstruction | None:
    return next(enumerate_c5s(g), None)


def pic_certificate(g: Graph) -> Obstruction | None:
    """A claw, hole, net or 3-sun of g, or None when g is a proper interval graph."""

    return (
        next(enumerate_claws(g), None)
        or find_hole(g)
        or find_net(g)
        or find_3sun(g)
    )


def bcc_certificate(g: Graph) -> Obstruction | None:
    """An independent triple, C4 or C5 of g, or None when g is a bi-clique chain graph."""

    return next(enumerate_3k1s(g), None) or next(enumerate_c4s(g), None) or find_c5(g)


_PATTERNS = {
    ObstructionKind.CLAW: nx.star_graph(3),
    ObstructionKind.C4: nx.cycle_graph(4),
    ObstructionKind.C5: nx.cycle_graph(5),
    ObstructionKind.THREE_K1: nx.empty_graph(3),
    ObstructionKind.NET: nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
    ObstructionKind.THREE_SUN: nx.Graph(
        [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]
    ),
}


def is_valid_obstruction(g: Graph, obstruction: Obstruction) -> bool:
    """Re-check an obstruction against the induced subgraph it names."""

    vertices = obstruction.vertices
    if len(set(vertices)) != len(vertices) or any(v not in g for v in vertices):
        return False
    induced = g.subgraph(vertices).to_networkx()
    if obstruction.kind is ObstructionKind.HOLE:
        return len(vertices) >= 4 and nx.is_isomorphic(induced, nx.cycle_graph(len(vertices)))
    return nx.is_isomorphic(induced, _PATTERNS[obstruction.kind])


# Sunflowers


def _best_sunflower(groups: dict[Edge, dict[int, Obstruction]], k: int) -> Sunflower | None:
    """Largest group, ties by smallest pair, if its multiplicity exceeds k."""

    best = None
    for pair in sorted(groups):
        petals = groups[pair]
        if best is None or len(petals) > len(groups[best]):
            best = pair
    if best is None or len(groups[best]) <= k:
        return None
    petals = groups[best]
    return Sunflower(best, tuple(petals[w] for w in sorted(petals)))


def find_claw_sunflower(g: Graph, k: int) -> Sunflower | None:
    """More than k claws with leaves u, v in common and distinct third leaves."""

    groups: dict[Edge, dict[int, Obstruction]] = defaultdict(dict)
    for claw in enumerate_claws(g):
        leaves = claw.vertices[1:]
        for u, v in itertools.combinations(leaves, 2):
            (third,) = set(leaves) - {u, v}
            groups[edge(u, v)].setdefault(third, claw)

    sunflower = _best_sunflower(groups, k)
    if sunflower is not None:
        assert not g.has_edge(*sunflower.pair)
    return sunflower


def find_c4_sunflower(g: Graph, k: int) -> Sunflower | None:
    """More than k distinct induced 4-cycles sharing the diagonal u, v."""

    groups: dict[Edge, dict[int, Obstruction]] = defaultdict(dict)
    for index, cycle in enumerate(enumerate_c4s(g)):
        a, b, c, d = cycle.vertices
        for diagonal in (edge(a, c), edge(b, d)):
            groups[diagonal][index] = cycle

    sunflower = _best_sunflower(groups, k)
    if sunflower is not None:
        assert not g.has_edge(*sunflower.pair)
    return sunflower


def find_3k1_sunflower(g: Graph, k: int) -> Sunflower | None:
    """More than k independent triples sharing the non-edge u, v."""

    groups: dict[Edge, dict[int, Obstruction]] = {}
    for u, v in g.non_edges():
        union = g.neighbors(u) | g.neighbors(v)
        thirds = [w for w in g.vertices() if w != u and w != v and w not in union]
        if thirds:
            groups[(u, v)] = {
                w: Obstruction(ObstructionKind.THREE_K1, tuple(sorted((u, v, w)))) for w in thirds
            }
    return _best_sunflower(groups, k)


def obstruction_census(g: Graph) -> Census:
    census = Census()
    leaf_sets = set()
    for claw in enumerate_claws(g):
        leaf_sets.add(frozenset(claw.vertices[1:]))
        census.claw_leaves.update(claw.vertices[1:])
        census.claw_vertices.update(claw.vertices)
    census.claw_leaf_sets = len(leaf_sets)
    for cycle in enumerate_c4s(g):
        census.c4_vertices.update(cycle.vertices)
    for triple in enumerate_3k1s(g):
        census.three_k1_vertices.update(triple.vertices)
    return census
