"""
Exact solvers for the completion problems.

`oracle_opt` tries every set of non-edges by increasing size and is the
ground truth of the tests. `branch_solve` branches on the missing pairs of a
smallest obstruction, prunes holes that need more edges than the budget
left, and remembers the edge sets that already failed.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .constants import BCC, BCD, PIC, PROBLEMS
from .graph import Edge, Graph, complement
from .obstructions import (
    Obstruction,
    ObstructionKind,
    bcc_certificate,
    enumerate_3k1s,
    enumerate_c4s,
    enumerate_claws,
    find_3sun,
    find_c5,
    find_hole,
    find_net,
    pic_certificate,
)
from .recognition import is_biclique_chain, umbrella_ordering
from .search import SearchMachine, SearchNode
from .utils import sorted_edges

__all__ = [
    "Solution",
    "hole_lower_bound",
    "in_class",
    "certificate",
    "oracle_opt",
    "branch_solve",
    "solve_optimum",
    "verify_solution",
]

logger = logging.getLogger(__name__)


@dataclass
class Solution:
    feasible: bool
    completion: list[Edge] = field(default_factory=list)
    optimum: int | None = None
    explored: int = 0


def hole_lower_bound(q: int) -> int:
    """Edges needed to triangulate a hole of length q."""
    return max(0, q - 3)


def _check_problem(problem: str):
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}, expected one of {PROBLEMS}")


def in_class(g: Graph, problem: str) -> bool:
    """Whether g is a proper interval graph (pic) or a bi-clique chain graph (bcc)."""

    _check_problem(problem)
    if problem == PIC:
        return umbrella_ordering(g) is not None
    if problem == BCC:
        return is_biclique_chain(g) is not None
    return is_biclique_chain(complement(g)) is not None


def certificate(g: Graph, problem: str) -> Obstruction | None:
    _check_problem(problem)
    if problem == PIC:
        return pic_certificate(g)
    if problem == BCC:
        return bcc_certificate(g)
    return bcc_certificate(complement(g))


def _as_completion(g: Graph, problem: str) -> tuple[Graph, str]:
    """Deletion in g is completion in its complement."""
    if problem == BCD:
        return complement(g), BCC
    return g, problem


def oracle_opt(g: Graph, problem: str, cap: int) -> int | None:
    """
    Smallest number of edges to add (or delete, for bcd), if it is at most cap.

    This enumerates all subsets of non-edges and gets slow quickly beyond
    twelve vertices and a cap of four.

    Returns:
        The optimum, or None when it exceeds cap.
    """

    _check_problem(problem)
    g, problem = _as_completion(g, problem)
    candidates = g.non_edges()
    for size in range(min(cap, len(candidates)) + 1):
        for extra in itertools.combinations(candidates, size):
            if in_class(g.plus(extra), problem):
                return size
    return None


class _Search:
    """What the nodes of one search share."""

    def __init__(self, problem: str):
        self.problem = problem
        self.failed: dict[frozenset[Edge], int] = {}
        self.found: tuple[Edge, ...] | None = None
        self.pruned = 0
        self.machine: SearchMachine | None = None

    def choices(self, g: Graph, budget: int) -> list[Edge] | None:
        """
        The pairs to branch on, or None if g is already in the class.

        Any completion adds at least one missing pair of every obstruction.
        """

        if self.problem == PIC:
            obstruction = next(enumerate_claws(g), None)
            if obstruction is None:
                obstruction = find_hole(g, shortest=True)
                if obstruction is not None and hole_lower_bound(len(obstruction)) > budget:
                    self.pruned += 1
                    return []
            obstruction = obstruction or find_net(g) or find_3sun(g)
        else:
            obstruction = (
                next(enumerate_3k1s(g), None) or next(enumerate_c4s(g), None) or find_c5(g)
            )

        if obstruction is None:
            return None
        if obstruction.kind is ObstructionKind.CLAW:
            # Only the leaves are non-adjacent.
            return g.non_edges(obstruction.vertices[1:])
        return obstruction.internal_non_edges(g)


class _BranchNode(SearchNode):
    def __init__(self, search: _Search, graph: Graph, added: tuple[Edge, ...], budget: int):
        super().__init__()
        self.search = search
        self.graph = graph
        self.added = added
        self.budget = budget
        self.key = frozenset(added)
        self.choices: list[Edge] | None = []

    def on_enter(self):
        super().on_enter()
        if self.search.failed.get(self.key, -1) >= self.budget:
            self.choices = []
        else:
            self.choices = self.search.choices(self.graph, self.budget)

    def logic(self):
        if self.choices is None:
            self.search.found = self.added
            self.search.machine.stop()
            return

        if self.choices and self.budget > 0:
            pair = self.choices.pop(0)
            child = _BranchNode(
                self.search, self.graph.plus([pair]), self.added + (pair,), self.budget - 1
            )
            self.push_state(child)
        else:
            failed = self.search.failed
            failed[self.key] = max(failed.get(self.key, -1), self.budget)
            self.pop_state()


def branch_solve(g: Graph, problem: str, k: int) -> Solution:
    """
    Decide whether at most k edges make g a member of the class.

    For bcd, the edges are deleted instead, and the search runs on the complement.
    """

    _check_problem(problem)
    if k < 0:
        raise ValueError(f"the budget must be nonnegative, got {k}")

    work, target = _as_completion(g, problem)
    search = _Search(target)
    machine = SearchMachine(_BranchNode(search, work, (), k))
    search.machine = machine
    machine.run()

    logger.debug(
        "search for k=%d explored %d nodes, pruned %d holes", k, machine.explored, search.pruned
    )
    if search.found is None:
        return Solution(False, explored=machine.explored)
    return Solution(True, sorted_edges(search.found), explored=machine.explored)


def solve_optimum(g: Graph, problem: str, cap: int) -> Solution:
    """Smallest solution with at most cap edges, found by increasing the budget from zero."""

    explored = 0
    for k in range(cap + 1):
        solution = branch_solve(g, problem, k)
        explored += solution.explored
        if solution.feasible:
            solution.optimum = len(solution.completion)
            solution.explored = explored
            return solution
    return Solution(False, explored=explored)


def verify_solution(g: Graph, problem: str, f: list[Edge]) -> bool:
    """
    Whether g + f is in the class (g - f for bcd).

    Raises:
        ValueError: if a pair of f is already an edge of g (not an edge, for bcd).
    """

    _check_problem(problem)
    f = sorted_edges(f)
    for u, v in f:
        if u not in g or v not in g:
            raise ValueError(f"pair {u} {v} has an endpoint that is not a vertex")
        if problem == BCD and not g.has_edge(u, v):
            raise ValueError(f"pair {u} {v} is not an edge, it cannot be deleted")
        if problem != BCD and g.has_edge(u, v):
            raise ValueError(f"pair {u} {v} is already an edge")

    work, target = _as_completion(g, problem)
    return in_class(work.plus(f), target)
