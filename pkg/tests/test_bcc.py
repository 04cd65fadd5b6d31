import itertools

import pytest
from hypothesis import given, settings as hypothesis_settings

from pickernel.bcc import (
    audit_bcc_kernel,
    bcc_kernel_bound,
    bcd_reduce,
    reduce_bcc,
    rule_simple_kjoin,
    simple_kjoin_bound,
    simple_parts,
)
from pickernel.branches import kjoin_from_order, max_kjoin
from pickernel.constants import BCC, BCD, RULE_SIMPLE_KJOIN, RULE_SUNFLOWER_BCC
from pickernel.generators import gnp, named_graph, planted_bcc
from pickernel.graph import Graph, complement
from pickernel.obstructions import obstruction_census
from pickernel.solver import oracle_opt
from pickernel.trace import Instance, Status
from pickernel.utils import pairs
from strategies import graphs


def clique(n: int) -> Graph:
    return Graph.with_vertices(n, pairs(range(n)))


def largest_clean_simple_kjoin(g: Graph) -> int:
    """Tries every ordering of every clique of vertices in no independent triple or 4-cycle."""

    clean = [v for v in g.vertices() if v not in obstruction_census(g).bcc_dirty]
    best = 0
    for size in range(1, len(clean) + 1):
        for subset in itertools.combinations(clean, size):
            if not g.is_clique(subset):
                continue
            for order in itertools.permutations(subset):
                kjoin = kjoin_from_order(g, order)
                if kjoin is not None and kjoin.is_simple:
                    best = size
                    break
    return best


def check_safety(g: Graph, k: int, problem: str = BCC):
    reducer = reduce_bcc if problem == BCC else bcd_reduce
    reduced, k_after, forced, trace = reducer(g, k)
    before = oracle_opt(g, problem, k) is not None
    if trace.status.rejected:
        assert not before, trace.dumps()
        return
    assert k_after == k - len(forced)
    assert before == (oracle_opt(reduced, problem, k_after) is not None), trace.dumps()
    if before:
        assert reduced.n <= bcc_kernel_bound(k) or k == 0
        target = reduced if problem == BCC else complement(reduced)
        assert audit_bcc_kernel(target, k_after)["within_bounds"]
        assert largest_clean_simple_kjoin(target) <= 2 * k_after + 2


def test_bounds():
    assert bcc_kernel_bound(1) == 24
    assert bcc_kernel_bound(2) == 56
    assert simple_kjoin_bound(1) == 11
    with pytest.raises(ValueError):
        bcc_kernel_bound(-1)


def test_independent_triple():
    _, _, _, trace = reduce_bcc(named_graph("3k1"), 0)
    assert trace.status is Status.REJECTED_BUDGET
    assert trace.events[-1].rule == RULE_SUNFLOWER_BCC

    reduced, k, forced, trace = reduce_bcc(named_graph("3k1"), 1)
    assert trace.status is Status.REDUCED
    assert (reduced.n, k, forced) == (3, 1, [])


def test_3k1_sunflower_forces_a_pair():
    # 0 and 1 are non-adjacent and miss 2, 3 and 4.
    g = Graph.with_vertices(5, [(2, 3), (2, 4), (3, 4)])
    _, k, forced, trace = reduce_bcc(g, 2)
    assert forced[0] == (0, 1)
    assert trace.events[0].rule == RULE_SUNFLOWER_BCC
    assert trace.status is Status.REDUCED
    assert k == 1


def test_simple_kjoin_is_trimmed():
    reduced, k, _, trace = reduce_bcc(clique(5), 1)
    assert trace.events[0].rule == RULE_SIMPLE_KJOIN
    assert trace.events[0].removed == [3]
    assert reduced.n == 4
    assert trace.status is Status.REDUCED


def test_rule_simple_kjoin_needs_size():
    assert not rule_simple_kjoin(Instance(clique(4), 1, BCC))


def test_simple_parts():
    # 3 sees the prefix (0, 1) of the clique 0 1 2, 4 sees the suffix (2,).
    g = clique(3)
    g.add_vertex(3)
    g.add_vertex(4)
    g.add_edges([(3, 0), (3, 1), (4, 2), (3, 4)])
    kjoin = max_kjoin(g, 0, 2)
    assert kjoin.order == (0, 1, 2)
    parts = [part.order for part in simple_parts(g, kjoin, set())]
    assert parts == [(0, 1), (2,)]


@hypothesis_settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_simple_parts_reach_every_clean_simple_kjoin(g):
    dirty = obstruction_census(g).bcc_dirty
    found = max(
        (len(part) for u, v in g.edges() for part in simple_parts(g, max_kjoin(g, u, v), dirty)),
        default=0,
    )
    best = largest_clean_simple_kjoin(g)
    assert found <= best
    if best >= 2:
        assert found == best


def test_long_clean_simple_kjoin_is_trimmed():
    # A clique of 7 with a pendant on its first vertex: nothing is dirty.
    g = clique(7)
    g.add_vertex(7)
    g.add_edge(7, 0)
    assert largest_clean_simple_kjoin(g) == 7
    reduced, k, forced, trace = reduce_bcc(g, 1)
    assert trace.status is Status.REDUCED
    assert largest_clean_simple_kjoin(reduced) <= 4
    assert reduced.n == 5


def test_bcd_on_two_edges():
    g = named_graph("2k2")
    reduced, k, forced, trace = bcd_reduce(g, 1)
    assert trace.problem == BCD
    assert trace.status is Status.REDUCED
    assert reduced == g
    assert (k, forced) == (1, [])
    assert oracle_opt(g, BCD, 2) == 1


def test_audit():
    report = audit_bcc_kernel(clique(4), 1)
    assert report == {"largest_simple_kjoin": 4, "simple_kjoin_bound": 11, "within_bounds": True}


@pytest.mark.parametrize("name", ["3k1", "c4", "c5", "claw", "net", "2k2"])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_safety_on_named_graphs(name, k):
    check_safety(named_graph(name), k)
    check_safety(named_graph(name), k, BCD)


@hypothesis_settings(max_examples=30, deadline=None)
@given(graphs(max_n=7))
def test_safety_on_random_graphs(g):
    for k in range(3):
        check_safety(g, k)


@hypothesis_settings(max_examples=30, deadline=None)
@given(graphs(max_n=7))
def test_deletion_is_completion_of_the_complement(g):
    for k in range(3):
        reduced, k_after, forced, trace = bcd_reduce(g, k)
        reduced_c, k_c, forced_c, trace_c = reduce_bcc(complement(g), k)
        assert complement(reduced) == reduced_c
        assert (k_after, forced, trace.status) == (k_c, forced_c, trace_c.status)
        assert oracle_opt(g, BCD, 3) == oracle_opt(complement(g), BCC, 3)


@pytest.mark.parametrize("seed", range(5))
def test_safety_on_planted_instances(seed):
    check_safety(planted_bcc(9, 2, seed), 2)


@pytest.mark.slow
def test_safety_sweep():
    for seed in range(1000):
        n = 7 + seed % 6
        g = gnp(n, 0.2 + 0.6 * (seed % 7) / 6, seed)
        for k in range(4):
            check_safety(g, k)
    for seed in range(200):
        g = gnp(8, 0.5, seed)
        check_safety(g, 2, BCD)
