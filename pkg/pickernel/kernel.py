"""
Kernelization of Proper Interval Completion.

Rules, in priority order:
    1. remove connected components that are proper interval graphs,
    2. trim classes of true twins to k + 1 vertices,
    3. add the common pair of more than k claws or 4-cycles,
    4. shrink clean K-joins to 2k + 2 vertices,
    5. shrink the body of 1-branches to 2k + 1 vertices,
    -  reject on long holes and on long 2-branches that do not disconnect the graph,
    6. shrink the body of disconnecting 2-branches to 4k + 2 vertices.
The driver restarts from rule 1 after every change.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator

import networkx as nx

from .branches import (
    TwoBranch,
    clean_subset,
    kjoin_decomposition,
    max_kjoin,
    max_one_branch_from,
    max_two_branch,
    maximal_kjoins_through,
)
from .constants import (
    PIC,
    RULE_1BRANCH,
    RULE_2BRANCH,
    RULE_CC,
    RULE_KJOIN,
    RULE_REJECT_2BRANCH,
    RULE_REJECT_HOLE,
    RULE_SUNFLOWER,
    RULE_TWINS,
)
from .graph import Edge, Graph, connected_components, true_twin_classes
from .obstructions import (
    find_c4_sunflower,
    find_claw_sunflower,
    holes_through_p3s,
    obstruction_census,
)
from .recognition import connected_umbrella_ordering
from .settings import settings
from .trace import Instance, ReductionTrace, Status
from .utils import pool_map

__all__ = [
    "Rule",
    "dirty_kjoin_bound",
    "kjoin_bound",
    "one_branch_bound",
    "two_branch_bound",
    "kernel_bound",
    "rule_cc",
    "rule_twins",
    "rule_sunflower",
    "rule_kjoin",
    "rule_1branch",
    "reject_long_hole",
    "reject_long_2branch",
    "rule_2branch",
    "two_branches",
    "PIC_RULES",
    "run_rules",
    "reduce",
    "audit_kernel",
]

logger = logging.getLogger(__name__)

Rule = Callable[[Instance], bool]


# Bounds


def dirty_kjoin_bound(k: int) -> int:
    """Vertices of a K-join that can lie in claws or 4-cycles."""
    return k**3 + 4 * k**2 + 5 * k + 1


def kjoin_bound(k: int) -> int:
    return k**3 + 4 * k**2 + 7 * k + 3


def one_branch_bound(k: int) -> int:
    return k**3 + 4 * k**2 + 9 * k + 4


def two_branch_bound(k: int) -> int:
    return (k + 3) * dirty_kjoin_bound(k)


def kernel_bound(k: int) -> int:
    """
    Number of vertices of a reduced positive instance.

    With no budget a positive instance is proper interval, and rule 1 empties it.
    """

    if k < 0:
        raise ValueError(f"the budget must be nonnegative, got {k}")
    if k == 0:
        return 0
    return 2 * one_branch_bound(k) + (2 * k - 1) * two_branch_bound(k)


# Rules


def rule_cc(inst: Instance) -> bool:
    changed = False
    for component in connected_components(inst.graph):
        if connected_umbrella_ordering(inst.graph, component) is not None:
            inst.remove(RULE_CC, {"kind": "component", "vertices": component}, component)
            changed = True
    return changed


def rule_twins(inst: Instance) -> bool:
    changed = False
    for twins in true_twin_classes(inst.graph):
        if len(twins) > inst.k + 1:
            witness = {"kind": "twins", "vertices": twins}
            inst.remove(RULE_TWINS, witness, twins[inst.k + 1 :])
            changed = True
    return changed


def rule_sunflower(inst: Instance) -> bool:
    """Claw sunflowers are looked for before 4-cycle ones."""

    sunflower = find_claw_sunflower(inst.graph, inst.k) or find_c4_sunflower(inst.graph, inst.k)
    if sunflower is None:
        return False
    if inst.k == 0:
        inst.reject(Status.REJECTED_BUDGET, RULE_SUNFLOWER, sunflower.to_json())
    else:
        inst.force(RULE_SUNFLOWER, sunflower.to_json(), sunflower.pair)
    return True


def _all_kjoins(g: Graph):
    return pool_map(lambda e: max_kjoin(g, *e), g.edges(), settings.jobs)


def rule_kjoin(inst: Instance) -> bool:
    g, k = inst.graph, inst.k
    dirty = obstruction_census(g).pic_dirty
    for kjoin in _all_kjoins(g):
        clean = clean_subset(g, kjoin, dirty)
        if len(clean) >= 2 * k + 3:
            middle = clean.order[k + 1 : len(clean) - (k + 1)]
            inst.remove(RULE_KJOIN, clean.to_json(), middle)
            return True
    return False


def rule_1branch(inst: Instance) -> bool:
    g, k = inst.graph, inst.k
    branches = pool_map(lambda x: max_one_branch_from(g, x), g.vertices(), settings.jobs)
    for branch in branches:
        body = branch.body
        if len(body) >= 2 * k + 2:
            inst.remove(RULE_1BRANCH, branch.to_json(), body[: len(body) - (2 * k + 1)])
            return True
    return False


def reject_long_hole(inst: Instance) -> bool:
    """A hole of length q needs q - 3 edges."""

    if nx.is_chordal(inst.graph.to_networkx()):
        return False
    for hole in holes_through_p3s(inst.graph):
        if len(hole) - 3 > inst.k:
            inst.reject(Status.REJECTED_NO_INSTANCE, RULE_REJECT_HOLE, hole.to_json())
            return True
    return False


def two_branches(g: Graph) -> Iterator[TwoBranch]:
    """The maximum 2-branches found through every vertex and its maximal K-joins, once each."""

    seen = set()
    for x in g.vertices():
        for kjoin in maximal_kjoins_through(g, x):
            branch = max_two_branch(g, x, kjoin)
            if branch is None:
                continue
            key = frozenset(branch.order)
            if key not in seen:
                seen.add(key)
                yield branch


def _same_side_component(g: Graph, branch: TwoBranch) -> bool:
    """Whether both attachment cliques lie in one component once the body is removed."""

    rest = g.without(branch.body)
    for component in connected_components(rest):
        members = set(component)
        if branch.first_attachment[0] in members:
            return branch.second_attachment[-1] in members
    return False


def reject_long_2branch(inst: Instance) -> bool:
    g, k = inst.graph, inst.k
    for branch in two_branches(g):
        blocks = len(kjoin_decomposition(g, branch))
        if blocks >= k + 4 and _same_side_component(g, branch):
            witness = branch.to_json() | {"blocks": blocks}
            inst.reject(Status.REJECTED_NO_INSTANCE, RULE_REJECT_2BRANCH, witness)
            return True
    return False


def rule_2branch(inst: Instance) -> bool:
    """Applied in each connected component separately."""

    g, k = inst.graph, inst.k
    for branch in two_branches(g):
        body = branch.body
        if len(body) < 4 * k + 4:
            continue
        component = next(c for c in connected_components(g) if body[0] in c)
        if len(connected_components(g.subgraph(component).without(body))) < 2:
            continue
        inst.remove(RULE_2BRANCH, branch.to_json(), body[2 * k + 1 : len(body) - (2 * k + 1)])
        return True
    return False


PIC_RULES: tuple[Rule, ...] = (
    rule_cc,
    rule_twins,
    rule_sunflower,
    rule_kjoin,
    rule_1branch,
    reject_long_hole,
    reject_long_2branch,
    rule_2branch,
)


def run_rules(inst: Instance, rules: tuple[Rule, ...]):
    """Apply the rules until none fires, restarting from the first after every change."""

    limit = inst.graph.n + inst.k + 1
    rounds = 0
    while not inst.done:
        for rule in rules:
            if rule(inst):
                logger.debug("%s fired", rule.__name__)
                break
        else:
            return
        rounds += 1
        assert rounds <= limit, "a rule fired without removing a vertex or using budget"


def reduce(
    g: Graph, k: int, audit: bool = False
) -> tuple[Graph, int, list[Edge], ReductionTrace]:
    """
    Kernelize (g, k) for Proper Interval Completion.

    Returns:
        The reduced graph (with forced edges added, vertex ids of g),
        the remaining budget, the forced edges and the trace.
    """

    inst = Instance(g, k, PIC)
    run_rules(inst, PIC_RULES)

    extra = {"bound": kernel_bound(k)}
    if not inst.done:
        if inst.graph.n > kernel_bound(k):
            logger.warning(
                "reduced instance has %d vertices, above the bound %d of a yes-instance",
                inst.graph.n,
                kernel_bound(k),
            )
        if audit:
            extra["audit"] = audit_kernel(inst.graph, k)
    inst.finish(**extra)
    return inst.graph, inst.k, inst.forced, inst.trace


def audit_kernel(g: Graph, k: int) -> dict:
    """Largest K-join and 1-branch of a reduced graph, against their bounds."""

    largest_kjoin = max((len(kj) for kj in _all_kjoins(g)), default=0)
    largest_branch = max(
        (len(max_one_branch_from(g, x)) for x in g.vertices()), default=0
    )
    report = {
        "largest_kjoin": largest_kjoin,
        "kjoin_bound": kjoin_bound(k),
        "largest_one_branch": largest_branch,
        "one_branch_bound": one_branch_bound(k),
    }
    report["within_bounds"] = (
        largest_kjoin <= kjoin_bound(k) and largest_branch <= one_branch_bound(k)
    )
    if largest_kjoin > dirty_kjoin_bound(k):
        logger.warning(
            "a K-join of %d vertices exceeds the per-block bound %d",
            largest_kjoin,
            dirty_kjoin_bound(k),
        )
    if not report["within_bounds"]:
        logger.warning("structural bounds exceeded: %s", report)
    return report
