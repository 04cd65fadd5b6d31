"""
Kernelization of Bi-clique Chain Completion, and of Bipartite Chain Deletion
through the complement.

Two rules: a sunflower rule on independent triples and 4-cycles, and the
shrinking of simple clean K-joins (one side of the outside partition empty,
no vertex in an independent triple or a 4-cycle).
"""

from __future__ import annotations

import logging
from collections.abc import Iterator

from .branches import KJoin, clean_subset, kjoin_from_order, max_kjoin
from .constants import BCC, BCD, RULE_SIMPLE_KJOIN, RULE_SUNFLOWER_BCC
from .graph import Edge, Graph, complement
from .kernel import Rule, run_rules
from .obstructions import find_3k1_sunflower, find_c4_sunflower, obstruction_census
from .settings import settings
from .trace import Instance, ReductionTrace, Status
from .utils import pool_map

__all__ = [
    "simple_kjoin_bound",
    "bcc_kernel_bound",
    "rule_sunflower_bcc",
    "simple_parts",
    "rule_simple_kjoin",
    "BCC_RULES",
    "reduce_bcc",
    "bcd_reduce",
    "audit_bcc_kernel",
]

logger = logging.getLogger(__name__)


def simple_kjoin_bound(k: int) -> int:
    return 3 * k**2 + 6 * k + 2


def bcc_kernel_bound(k: int) -> int:
    if k < 0:
        raise ValueError(f"the budget must be nonnegative, got {k}")
    return 2 * simple_kjoin_bound(k) + 2 * k


def rule_sunflower_bcc(inst: Instance) -> bool:
    g, k = inst.graph, inst.k
    sunflower = find_3k1_sunflower(g, k) or find_c4_sunflower(g, k)
    if sunflower is None:
        return False
    if k == 0:
        inst.reject(Status.REJECTED_BUDGET, RULE_SUNFLOWER_BCC, sunflower.to_json())
    else:
        inst.force(RULE_SUNFLOWER_BCC, sunflower.to_json(), sunflower.pair)
    return True


def simple_parts(g: Graph, kjoin: KJoin, dirty: set[int]) -> Iterator[KJoin]:
    """
    The simple clean K-joins cut out of a K-join.

    From the clean vertices, the prefix before the first one with a right
    neighbor has no right side, and the suffix after the last one with a left
    neighbor has no left side.

    Running this on max_kjoin(g, b1, bm) for every edge reaches every clean
    simple K-join B = b1 ... bm with m >= 2, so the shrinking rule leaves none
    longer than 2k + 2. Say B has no right side. Then no vertex sees bm
    without b1, so the maximum K-join M from b1 to bm has no right side
    either, and every vertex of B is a candidate of M. Two candidates c, b
    with b in B are comparable: otherwise some l1 sees c but not b, and l2
    sees b but not c, on the left. Neither sees bm, so l1 l2 is an edge
    (else l1 l2 bm is independent), and l1 c b l2 is an induced 4-cycle
    through b. A maximum chain therefore holds all of B, and the clean
    prefix of M is a simple K-join containing B. Its outside vertices that
    miss bm are pairwise adjacent, or bm would lie in an independent triple.
    """

    order = clean_subset(g, kjoin, dirty).order
    sees_right = [i for i, v in enumerate(order) if g.neighbors(v) & kjoin.right]
    sees_left = [i for i, v in enumerate(order) if g.neighbors(v) & kjoin.left]

    prefix = order[: sees_right[0]] if sees_right else order
    suffix = order[sees_left[-1] + 1 :] if sees_left else order
    for part in (prefix, suffix):
        simple = kjoin_from_order(g, part)
        if simple is not None and simple.is_simple and _outside_is_clique(g, simple):
            yield simple


def _outside_is_clique(g: Graph, kjoin: KJoin) -> bool:
    """The attached side together with the detached vertices forms a clique."""

    side = kjoin.left or kjoin.right
    return g.is_clique(sorted(side | kjoin.detached))


def rule_simple_kjoin(inst: Instance) -> bool:
    g, k = inst.graph, inst.k
    dirty = obstruction_census(g).bcc_dirty
    kjoins = pool_map(lambda e: max_kjoin(g, *e), g.edges(), settings.jobs)
    for kjoin in kjoins:
        for simple in simple_parts(g, kjoin, dirty):
            if len(simple) >= 2 * k + 3:
                middle = simple.order[k + 1 : len(simple) - (k + 1)]
                inst.remove(RULE_SIMPLE_KJOIN, simple.to_json(), middle)
                return True
    return False


BCC_RULES: tuple[Rule, ...] = (rule_sunflower_bcc, rule_simple_kjoin)


def reduce_bcc(
    g: Graph, k: int, audit: bool = False, problem: str = BCC
) -> tuple[Graph, int, list[Edge], ReductionTrace]:
    """Kernelize (g, k) for Bi-clique Chain Completion."""

    inst = Instance(g, k, problem)
    run_rules(inst, BCC_RULES)

    extra = {"bound": bcc_kernel_bound(k)}
    if not inst.done:
        if inst.graph.n > bcc_kernel_bound(k):
            logger.warning(
                "reduced instance has %d vertices, above the bound %d of a yes-instance",
                inst.graph.n,
                bcc_kernel_bound(k),
            )
        if audit:
            extra["audit"] = audit_bcc_kernel(inst.graph, k)
    inst.finish(**extra)
    return inst.graph, inst.k, inst.forced, inst.trace


def bcd_reduce(
    g: Graph, k: int, audit: bool = False
) -> tuple[Graph, int, list[Edge], ReductionTrace]:
    """
    Kernelize (g, k) for Bipartite Chain Deletion.

    Deleting edges of g to reach a bipartite chain graph is adding edges to
    its complement to reach a bi-clique chain graph.

    Returns:
        The reduced graph (forced deletions applied), the remaining budget,
        the forced deletions and the trace.
    """

    reduced, k_after, forced, trace = reduce_bcc(complement(g), k, audit, problem=BCD)
    return complement(reduced), k_after, forced, trace


def audit_bcc_kernel(g: Graph, k: int) -> dict:
    """Largest simple K-join of a reduced graph, against its bound."""

    largest = 0
    for u, v in g.edges():
        kjoin = max_kjoin(g, u, v)
        for part in simple_parts(g, kjoin, set()):
            largest = max(largest, len(part))
    report = {
        "largest_simple_kjoin": largest,
        "simple_kjoin_bound": simple_kjoin_bound(k),
        "within_bounds": largest <= simple_kjoin_bound(k),
    }
    if not report["within_bounds"]:
        logger.warning("structural bounds exceeded: %s", report)
    return report
