"""
K-joins, 1-branches and 2-branches.

A branch is a region of the graph that already behaves like a proper interval
graph and meets the rest of the graph through one (1-branch) or two (2-branch)
attachment cliques with nested neighborhoods. A K-join is a branch that is a
clique. Each structure is stored with its ordering and the partition of the
outside vertices, and every one returned here went through its validator.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass

import networkx as nx

from .graph import Graph, connected_components, true_twin_classes
from .obstructions import obstruction_census
from .recognition import connected_umbrella_ordering, is_umbrella
from .settings import settings
from .utils import pool_map

__all__ = [
    "KJoin",
    "OneBranch",
    "TwoBranch",
    "KJoinDecomposition",
    "kjoin_from_order",
    "check_one_branch",
    "check_two_branch",
    "one_branch_of",
    "two_branch_of",
    "longest_chain",
    "max_kjoin",
    "maximal_kjoins_through",
    "one_branch_candidates",
    "max_one_branch_from",
    "max_two_branch",
    "kjoin_decomposition",
    "clean_subset",
]

logger = logging.getLogger(__name__)

Order = tuple[int, ...]


@dataclass(frozen=True)
class KJoin:
    """
    A clique ordered so that outside neighborhoods nest along the order.

    left: vertices whose neighbors in the clique form a proper prefix.
    right: vertices whose neighbors in the clique form a proper suffix.
    common: vertices adjacent to the whole clique.
    detached: vertices with no neighbor in the clique.
    """

    order: Order
    left: frozenset[int]
    right: frozenset[int]
    common: frozenset[int]
    detached: frozenset[int]

    def __len__(self):
        return len(self.order)

    @property
    def is_simple(self) -> bool:
        return not self.left or not self.right

    def to_json(self) -> dict:
        return {"kind": "kjoin", "order": list(self.order)}


@dataclass(frozen=True)
class OneBranch:
    """A 1-branch; order[l:] is the attachment clique, order[:l] the body."""

    order: Order
    l: int
    right: frozenset[int]
    detached: frozenset[int]

    def __len__(self):
        return len(self.order)

    @property
    def attachment(self) -> Order:
        return self.order[self.l :]

    @property
    def body(self) -> Order:
        return self.order[: self.l]

    def to_json(self) -> dict:
        return {"kind": "1-branch", "order": list(self.order), "attachment_start": self.l}


@dataclass(frozen=True)
class TwoBranch:
    """
    A 2-branch with attachment cliques order[:l_prime + 1] and order[l:].

    The body is what lies strictly between them, it may be empty.
    """

    order: Order
    l: int
    l_prime: int
    left: frozenset[int]
    right: frozenset[int]
    common: frozenset[int]
    detached: frozenset[int]

    def __len__(self):
        return len(self.order)

    @property
    def first_attachment(self) -> Order:
        return self.order[: self.l_prime + 1]

    @property
    def second_attachment(self) -> Order:
        return self.order[self.l :]

    @property
    def body(self) -> Order:
        return self.order[self.l_prime + 1 : self.l]

    def to_json(self) -> dict:
        return {
            "kind": "2-branch",
            "order": list(self.order),
            "first_attachment_end": self.l_prime,
            "second_attachment_start": self.l,
        }


@dataclass(frozen=True)
class KJoinDecomposition:
    blocks: tuple[KJoin, ...]

    def __len__(self):
        return len(self.blocks)


# Validators


def _outside_positions(g: Graph, order: Order) -> Iterator[tuple[int, list[int]]]:
    """For each vertex outside the order, the sorted positions of its neighbors in it."""

    position = {v: i for i, v in enumerate(order)}
    members = set(order)
    for v in g.vertices():
        if v not in members:
            yield v, sorted(position[u] for u in g.neighbors_in(v, members))


def _is_interval(positions: list[int]) -> bool:
    return positions == list(range(positions[0], positions[-1] + 1))


def kjoin_from_order(g: Graph, order: Iterable[int]) -> KJoin | None:
    """The K-join with this order, or None if the order does not define one."""

    order = tuple(order)
    if not g.is_clique(order):
        return None

    m = len(order)
    left, right, common, detached = set(), set(), set(), set()
    for v, positions in _outside_positions(g, order):
        if not positions:
            detached.add(v)
        elif len(positions) == m:
            common.add(v)
        elif not _is_interval(positions):
            return None
        elif positions[0] == 0:
            left.add(v)
        elif positions[-1] == m - 1:
            right.add(v)
        else:
            return None

    return KJoin(order, frozenset(left), frozenset(right), frozenset(common), frozenset(detached))


def _is_connected_umbrella(g: Graph, order: Order) -> bool:
    if not order or len(set(order)) != len(order):
        return False
    sub = g.subgraph(order)
    return len(connected_components(sub)) == 1 and is_umbrella(sub, list(order))


def check_one_branch(g: Graph, order: Iterable[int]) -> OneBranch | None:
    """The 1-branch with this umbrella ordering, or None if the order does not define one."""

    order = tuple(order)
    if not _is_connected_umbrella(g, order):
        return None

    m = len(order)
    position = {v: i for i, v in enumerate(order)}
    l = min(position[u] for u in g.closed_neighbors(order[-1]) if u in position)

    right, detached = set(), set()
    for v, positions in _outside_positions(g, order):
        if not positions:
            detached.add(v)
        elif positions[0] >= l and positions[-1] == m - 1 and _is_interval(positions):
            right.add(v)
        else:
            return None

    return OneBranch(order, l, frozenset(right), frozenset(detached))


def check_two_branch(g: Graph, order: Iterable[int]) -> TwoBranch | None:
    """The 2-branch with this umbrella ordering, or None if the order does not define one."""

    order = tuple(order)
    if not _is_connected_umbrella(g, order):
        return None

    m = len(order)
    position = {v: i for i, v in enumerate(order)}
    l = min(position[u] for u in g.closed_neighbors(order[-1]) if u in position)
    l_prime = max(position[u] for u in g.closed_neighbors(order[0]) if u in position)

    left, right, common, detached = set(), set(), set(), set()
    for v, positions in _outside_positions(g, order):
        if not positions:
            detached.add(v)
            continue
        if not _is_interval(positions):
            return None
        suffix = positions[0] >= l and positions[-1] == m - 1
        prefix = positions[0] == 0 and positions[-1] <= l_prime
        if suffix and prefix:
            common.add(v)
        elif suffix:
            right.add(v)
        elif prefix:
            left.add(v)
        else:
            return None

    return TwoBranch(
        order,
        l,
        l_prime,
        frozenset(left),
        frozenset(right),
        frozenset(common),
        frozenset(detached),
    )


def _canonical_orders(g: Graph, vertices: Iterable[int]) -> list[list[int]] | None:
    """
    Both umbrella orderings of the connected graph g[vertices], as lists of twin classes.

    Returns None when g[vertices] is not a connected proper interval graph.
    """

    vertices = sorted(set(vertices))
    sub = g.subgraph(vertices)
    if len(connected_components(sub)) != 1:
        return None
    order = connected_umbrella_ordering(sub, vertices)
    if order is None:
        return None

    class_of = {}
    for index, members in enumerate(true_twin_classes(sub)):
        for v in members:
            class_of[v] = index
    classes: list[list[int]] = []
    for v in order:
        if classes and class_of[classes[-1][0]] == class_of[v]:
            classes[-1].append(v)
        else:
            classes.append([v])
    return classes


def one_branch_of(g: Graph, vertices: Iterable[int], first: int) -> OneBranch | None:
    """
    The 1-branch on these vertices starting with `first`, if there is one.

    The twin classes of g[vertices] have a forced order, up to reversal; inside
    a class, vertices are sorted by growing outside neighborhoods.
    """

    vertices = set(vertices)
    classes = _canonical_orders(g, vertices)
    if classes is None:
        return None
    if first not in classes[0]:
        classes = classes[::-1]
    if first not in classes[0]:
        return None

    def outside(v):
        return len(g.neighbors(v) - vertices)

    order = []
    for members in classes:
        members = sorted(members, key=lambda v: (v != first, outside(v), v))
        order.extend(members)
    return check_one_branch(g, order)


def two_branch_of(g: Graph, vertices: Iterable[int]) -> TwoBranch | None:
    """A 2-branch on these vertices, trying both orientations."""

    vertices = set(vertices)
    classes = _canonical_orders(g, vertices)
    if classes is None:
        return None

    def outside(v):
        return len(g.neighbors(v) - vertices)

    for oriented in (classes, classes[::-1]):
        order = []
        half = len(oriented) / 2
        for index, members in enumerate(oriented):
            # Left attachments shrink along the order, right ones grow.
            sign = -1 if index < half - 0.5 else 1
            order.extend(sorted(members, key=lambda v: (sign * outside(v), v)))
        branch = check_two_branch(g, order)
        if branch is not None:
            return branch
    return None


# Chains in transitive orientations


def longest_chain(
    vertices: Iterable[int],
    arc: Callable[[int, int], bool],
    first: int | None = None,
    last: int | None = None,
) -> list[int]:
    """
    Longest chain of a transitive relation, as an ordered list.

    Vertices related both ways form classes (true twins in our uses) that are
    taken whole. The heaviest path of the quotient DAG is found with a
    topological sort. `first` and `last` are placed at the ends of their class.
    """

    classes: list[list[int]] = []
    for v in sorted(vertices):
        for members in classes:
            rep = members[0]
            if arc(rep, v) and arc(v, rep):
                members.append(v)
                break
        else:
            classes.append([v])
    if not classes:
        return []

    dag = nx.DiGraph()
    dag.add_nodes_from(range(len(classes)))
    for a, members_a in enumerate(classes):
        for b, members_b in enumerate(classes):
            if a != b and arc(members_a[0], members_b[0]):
                dag.add_edge(a, b)

    best: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for node in nx.lexicographical_topological_sort(dag):
        preds = sorted(dag.predecessors(node), key=lambda p: (-best[p], p))
        parent[node] = preds[0] if preds else None
        best[node] = len(classes[node]) + (best[preds[0]] if preds else 0)

    end = min(best, key=lambda node: (-best[node], node))
    path = []
    while end is not None:
        path.append(end)
        end = parent[end]
    path.reverse()

    chain = []
    for node in path:
        members = sorted(classes[node], key=lambda v: (v != first, v == last, v))
        chain.extend(members)
    return chain


# K-joins


def max_kjoin(g: Graph, x: int, y: int) -> KJoin:
    """
    A maximum K-join with x as first and y as last vertex.

    Raises:
        ValueError: if xy is not an edge.
    """

    if not g.has_edge(x, y):
        raise ValueError(f"{x}-{y} is not an edge")

    closed_x, closed_y = g.closed_neighbors(x), g.closed_neighbors(y)
    common = closed_x & closed_y
    union = closed_x | closed_y
    left = g.neighbors(x) - closed_y
    right = g.neighbors(y) - closed_x

    def arc(u, v):
        return (g.neighbors(v) & left) <= (g.neighbors(u) & left) and (
            g.neighbors(u) & right
        ) <= (g.neighbors(v) & right)

    candidates = [
        u
        for u in sorted(common)
        if common <= g.closed_neighbors(u) <= union and arc(x, u) and arc(u, y)
    ]
    chain = longest_chain(candidates, arc, first=x, last=y)
    kjoin = kjoin_from_order(g, chain)
    assert kjoin is not None, f"max_kjoin({x}, {y}) built an invalid K-join {chain}"
    return kjoin


def maximal_kjoins_through(g: Graph, x: int, jobs: int | None = None) -> list[KJoin]:
    """The maximum K-joins between the ends of every edge uv with x in N[u] ∩ N[v], if they contain x."""

    jobs = jobs or settings.jobs
    edges = [
        (u, v)
        for u, v in g.edges()
        if x in g.closed_neighbors(u) and x in g.closed_neighbors(v)
    ]
    found = [
        kj for kj in pool_map(lambda e: max_kjoin(g, *e), edges, jobs) if x in kj.order
    ]
    if not found:
        return [kjoin_from_order(g, (x,))]

    found.sort(key=lambda kj: (-len(kj), sorted(kj.order)))
    result: list[KJoin] = []
    for kj in found:
        members = set(kj.order)
        if not any(members <= set(other.order) for other in result):
            result.append(kj)
    return result


def clean_subset(g: Graph, kjoin: KJoin, dirty: set[int] | None = None) -> KJoin:
    """
    The vertices of the K-join that lie in no obstruction, in the same order.

    Args:
        dirty: the vertices to drop. Defaults to the vertices of claws and induced C4s.
    """

    if dirty is None:
        dirty = obstruction_census(g).pic_dirty
    order = [v for v in kjoin.order if v not in dirty]
    cleaned = kjoin_from_order(g, order)
    assert cleaned is not None
    return cleaned


# 1-branches


def _bfs_layers(g: Graph, x: int) -> list[list[int]]:
    distances = nx.single_source_shortest_path_length(g.to_networkx(), x)
    layers: list[list[int]] = []
    for v, d in sorted(distances.items(), key=lambda item: (item[1], item[0])):
        while len(layers) <= d:
            layers.append([])
        layers[d].append(v)
    return layers


def _attachment_chain(g: Graph, body: set[int]) -> list[int] | None:
    """
    Largest attachment clique for a given body, or None if there is none.

    The clique must contain every outside neighbor of the body, and its
    vertices must be ordered by shrinking neighborhoods in the body and
    growing closed neighborhoods in the rest of the graph.
    """

    rest = set(g.vertices()) - body
    forced = set().union(*(g.neighbors(s) for s in body)) - body
    outer = {v: g.closed_neighbors(v) & rest for v in rest}

    def arc(u, v):
        return g.neighbors_in(v, body) <= g.neighbors_in(u, body) and outer[u] <= outer[v]

    def comparable(u, v):
        return arc(u, v) or arc(v, u)

    forced_list = sorted(forced)
    if not all(comparable(u, v) for u in forced_list for v in forced_list):
        return None
    candidates = [v for v in sorted(rest) if all(comparable(v, f) for f in forced_list)]
    return longest_chain(candidates, arc)


def one_branch_candidates(g: Graph, x: int) -> list[OneBranch]:
    """
    Every 1-branch starting at x that can be a maximum one.

    Either the branch is a clique, or its body is determined by its last
    vertex q: all vertices closer to x than the layer before q, plus the
    vertices of that layer that do not see q.
    """

    found: dict[frozenset[int], OneBranch] = {}

    def consider(vertices):
        key = frozenset(vertices)
        if key in found:
            return
        branch = one_branch_of(g, key, x)
        if branch is not None and branch.order[0] == x:
            found[key] = branch

    consider({x})

    closed_x = g.closed_neighbors(x)
    above = [v for v in g.vertices() if closed_x <= g.closed_neighbors(v)]
    consider(
        longest_chain(
            above, lambda u, v: g.closed_neighbors(u) <= g.closed_neighbors(v), first=x
        )
    )

    layers = _bfs_layers(g, x)
    bodies = set()
    for t in range(2, len(layers)):
        inner = set().union(*layers[: t - 1])
        for q in layers[t]:
            body = frozenset(inner | (set(layers[t - 1]) - g.neighbors(q)))
            if body in bodies:
                continue
            bodies.add(body)
            chain = _attachment_chain(g, set(body))
            if chain:
                consider(body | set(chain))

    return list(found.values())


def _best(branches: Iterable):
    return min(branches, key=lambda b: (-len(b), sorted(b.order)), default=None)


def max_one_branch_from(g: Graph, x: int) -> OneBranch:
    """A maximum 1-branch with x as first vertex; ties go to the smallest vertex set."""

    if x not in g:
        raise ValueError(f"vertex {x} is not in the graph")
    branch = _best(one_branch_candidates(g, x))
    assert branch is not None
    logger.debug("max 1-branch from %d has %d vertices", x, len(branch))
    return branch


# 2-branches


def _cut_edges(g: Graph, side: Iterable[int], part: Iterable[int]) -> Graph:
    h = g.copy()
    part = set(part)
    for u in side:
        for v in g.neighbors(u) & part:
            h.remove_edge(u, v)
    return h


def max_two_branch(g: Graph, x: int, kjoin: KJoin) -> TwoBranch | None:
    """
    A maximum 2-branch that has x in its body, or None.

    The graph is split at x in two ways: H1 forgets the part of the K-join
    before x and the edges from its left side to the rest of it, H2 does the
    mirror operation. A 1-branch starting at x in each is found, and the two
    are glued at x. When the largest pair does not glue into a valid
    2-branch of g, smaller pairs are tried by decreasing size.

    Raises:
        ValueError: if x is not in the K-join.
    """

    if x not in kjoin.order:
        raise ValueError(f"vertex {x} is not in the K-join {kjoin.order}")

    i = kjoin.order.index(x)
    h1 = _cut_edges(g.without(kjoin.order[:i]), kjoin.left, kjoin.order[i:])
    h2 = _cut_edges(g.without(kjoin.order[i + 1 :]), kjoin.right, kjoin.order[: i + 1])
    forward = one_branch_candidates(h1, x)
    backward = one_branch_candidates(h2, x)

    glued = []
    for f in forward:
        for b in backward:
            if set(f.order[1:]) & set(b.order):
                continue
            glued.append(tuple(reversed(b.order)) + f.order[1:])
    glued.sort(key=lambda order: (-len(order), sorted(order)))

    best_size = None
    found = []
    for order in glued:
        if best_size is not None and len(order) < best_size:
            break
        branch = check_two_branch(g, order) or two_branch_of(g, order)
        if branch is not None and x in branch.body:
            best_size = len(order)
            found.append(branch)

    return _best(found)


def kjoin_decomposition(g: Graph, branch: TwoBranch) -> KJoinDecomposition:
    """
    Tile a 2-branch into consecutive K-joins.

    The first block is the first attachment clique. Each next block starts
    right after the previous one and ends at the last neighbor of its first
    vertex, except that a block starting in the second attachment clique
    runs to the end.
    """

    order = branch.order
    members = set(order)
    position = {v: i for i, v in enumerate(order)}
    spans = [order[: branch.l_prime + 1]]
    start = branch.l_prime + 1
    while start < len(order):
        if start >= branch.l:
            spans.append(order[start:])
            break
        end = max(position[u] for u in g.closed_neighbors(order[start]) & members)
        spans.append(order[start : end + 1])
        start = end + 1

    blocks = []
    for span in spans:
        block = kjoin_from_order(g, span)
        assert block is not None, f"block {span} of {order} is not a K-join"
        blocks.append(block)
    return KJoinDecomposition(tuple(blocks))
