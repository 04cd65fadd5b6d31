import itertools

import networkx as nx
import pytest
from hypothesis import given

from pickernel.generators import cycle, named_graph, path, proper_interval
from pickernel.graph import Graph, complement
from pickernel.recognition import (
    extremal_edges,
    is_biclique_chain,
    is_proper_interval,
    is_umbrella,
    lex_bfs,
    umbrella_ordering,
    verify_umbrella,
)
from strategies import graphs

PIC_FORBIDDEN = [
    nx.star_graph(3),
    nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
    nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]),
] + [nx.cycle_graph(q) for q in range(4, 8)]

BCC_FORBIDDEN = [nx.empty_graph(3), nx.cycle_graph(4), nx.cycle_graph(5)]


def has_induced(g: Graph, patterns) -> bool:
    nx_g = g.to_networkx()
    for pattern in patterns:
        for subset in itertools.combinations(g.vertices(), pattern.number_of_nodes()):
            if nx.is_isomorphic(nx_g.subgraph(subset), pattern):
                return True
    return False


def atlas():
    for nx_g in nx.graph_atlas_g()[1:]:
        yield Graph.from_networkx(nx_g)


@pytest.mark.parametrize("name", ["p4", "3k1", "2k2"])
def test_proper_interval_named(name):
    assert is_proper_interval(named_graph(name))


@pytest.mark.parametrize("name", ["claw", "c4", "c5", "net", "3-sun", "k23"])
def test_not_proper_interval_named(name):
    assert umbrella_ordering(named_graph(name)) is None


def test_path_ordering():
    assert umbrella_ordering(path(4)) == [0, 1, 2, 3]


def test_twins_are_consecutive_and_sorted():
    # Triangle 0 1 2 plus 3 adjacent to 0 and 1: 0 and 1 are twins.
    g = Graph.with_vertices(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    assert umbrella_ordering(g) == [2, 0, 1, 3]


def test_components_are_laid_out_in_order():
    g = Graph.with_vertices(5, [(3, 4), (0, 1)])
    assert umbrella_ordering(g) == [0, 1, 2, 3, 4]


def test_lex_bfs_visits_everything(net):
    order = lex_bfs(net, net.vertices())
    assert sorted(order) == net.vertices()
    assert order[0] == 0


def test_verify_umbrella():
    g = path(4)
    assert verify_umbrella(g, [0, 1, 2, 3]) == (True, None)
    assert verify_umbrella(g, [0, 2, 1, 3]) == (False, (0, 2, 1))
    with pytest.raises(ValueError):
        verify_umbrella(g, [0, 1, 2])


def test_extremal_edges():
    g = Graph.with_vertices(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert extremal_edges(g, [0, 1, 2, 3]) == {(0, 2), (2, 3)}
    assert extremal_edges(path(4), [0, 1, 2, 3]) == {(0, 1), (1, 2), (2, 3)}
    with pytest.raises(ValueError):
        extremal_edges(path(4), [1, 0, 2, 3])


def test_biclique_chain():
    witness = is_biclique_chain(path(4))
    assert witness.first_clique == (0, 1)
    assert witness.second_clique == (2, 3)

    assert is_biclique_chain(named_graph("2k2")) is not None
    assert is_biclique_chain(Graph.with_vertices(4, list(itertools.combinations(range(4), 2))))
    assert is_biclique_chain(Graph()) is not None


@pytest.mark.parametrize("name", ["3k1", "c4", "c5", "claw"])
def test_not_biclique_chain(name):
    assert is_biclique_chain(named_graph(name)) is None


@pytest.mark.parametrize("seed", range(10))
def test_random_proper_interval_graphs(seed):
    g = proper_interval(15, seed)
    order = umbrella_ordering(g)
    assert order is not None
    assert verify_umbrella(g, order) == (True, None)


@pytest.mark.parametrize("q", range(4, 10))
def test_cycles(q):
    assert umbrella_ordering(cycle(q)) is None


@given(graphs(max_n=6))
def test_recognition_matches_forbidden_subgraphs(g):
    order = umbrella_ordering(g)
    assert (order is not None) == (not has_induced(g, PIC_FORBIDDEN))
    if order is not None:
        assert is_umbrella(g, order)


@given(graphs(max_n=6))
def test_biclique_chain_matches_forbidden_subgraphs(g):
    witness = is_biclique_chain(g)
    assert (witness is not None) == (not has_induced(g, BCC_FORBIDDEN))
    if witness is not None:
        assert g.is_clique(witness.first_clique)
        assert g.is_clique(witness.second_clique)
        assert is_umbrella(g, list(witness.order))


@given(graphs(max_n=7))
def test_biclique_chain_is_complement_of_bipartite_chain(g):
    h = complement(g)
    chain = nx.is_bipartite(h.to_networkx()) and not has_induced(h, [nx.Graph([(0, 1), (2, 3)])])
    assert (is_biclique_chain(g) is not None) == chain


@pytest.mark.slow
def test_recognition_on_all_small_graphs():
    for g in atlas():
        order = umbrella_ordering(g)
        assert (order is not None) == (not has_induced(g, PIC_FORBIDDEN)), g.edges()
        if order is not None:
            assert verify_umbrella(g, order) == (True, None)
