import pytest

from pickernel.constants import GENERATOR_MODELS
from pickernel.generators import (
    NAMED_GRAPHS,
    biclique_chain,
    cycle,
    generate,
    gnp,
    named_graph,
    planted_bcc,
    planted_pic,
    proper_interval,
    star,
)
from pickernel.recognition import is_biclique_chain, is_proper_interval


@pytest.mark.parametrize("model", GENERATOR_MODELS)
def test_generators_are_deterministic(model):
    first = generate(model, 12, seed=4, edits=2)
    second = generate(model, 12, seed=4, edits=2)
    assert first == second
    assert first.vertices() == list(range(12))


def test_seeds_change_the_graph():
    assert any(gnp(12, 0.5, seed) != gnp(12, 0.5, 0) for seed in range(1, 5))


def test_gnp_extremes():
    assert gnp(6, 0).m == 0
    assert gnp(6, 1).m == 15
    with pytest.raises(ValueError):
        gnp(6, 1.5)


def test_cycle_and_star():
    assert (0, 8) in cycle(9).edges()
    assert all(cycle(9).degree(v) == 2 for v in range(9))
    assert star(4) == named_graph("claw")
    with pytest.raises(ValueError):
        cycle(2)


@pytest.mark.parametrize("seed", range(10))
def test_members(seed):
    assert is_proper_interval(proper_interval(15, seed))
    assert is_biclique_chain(biclique_chain(10, seed)) is not None


def test_planted_instances_lose_edges():
    original = proper_interval(30, 7)
    planted = planted_pic(30, 2, 7)
    assert planted.m == original.m - 2
    assert all(original.has_edge(u, v) for u, v in planted.edges())

    original = biclique_chain(12, 3)
    planted = planted_bcc(12, 2, 3)
    assert planted.m == original.m - min(2, original.m)


def test_errors():
    with pytest.raises(ValueError):
        generate("tree", 5)
    with pytest.raises(ValueError):
        planted_pic(5, -1)
    with pytest.raises(ValueError):
        gnp(-1, 0.5)


@pytest.mark.parametrize("name", NAMED_GRAPHS)
def test_named_graphs(name):
    g = named_graph(name)
    assert g.n in (3, 4, 5, 6)
    with pytest.raises(ValueError):
        named_graph(name + "!")
