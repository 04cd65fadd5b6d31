import pytest
from hypothesis import given

from pickernel.generators import cycle, named_graph, path, star
from pickernel.graph import Graph
from pickernel.obstructions import (
    Obstruction,
    ObstructionKind,
    bcc_certificate,
    enumerate_3k1s,
    enumerate_c4s,
    enumerate_c5s,
    enumerate_claws,
    find_3k1_sunflower,
    find_3sun,
    find_c4_sunflower,
    find_claw_sunflower,
    find_hole,
    find_net,
    holes_through_p3s,
    is_valid_obstruction,
    obstruction_census,
    pic_certificate,
)
from pickernel.recognition import is_biclique_chain, umbrella_ordering
from strategies import graphs


def test_claws(claw):
    assert list(enumerate_claws(claw)) == [Obstruction(ObstructionKind.CLAW, (0, 1, 2, 3))]
    assert len(list(enumerate_claws(star(5)))) == 4


def test_c4s(c4, k23):
    assert list(enumerate_c4s(c4)) == [Obstruction(ObstructionKind.C4, (0, 1, 2, 3))]
    assert len(list(enumerate_c4s(k23))) == 3


def test_c5s(c5):
    (found,) = enumerate_c5s(c5)
    assert found.vertices == (0, 1, 2, 3, 4)
    assert not list(enumerate_c5s(cycle(6)))


def test_3k1s():
    assert [t.vertices for t in enumerate_3k1s(named_graph("3k1"))] == [(0, 1, 2)]
    # Four isolated vertices have four independent triples.
    assert len(list(enumerate_3k1s(Graph.with_vertices(4)))) == 4


def test_3k1s_without_the_dense_view():
    g = Graph.with_vertices(70)
    g.add_edges((i, i + 1) for i in range(0, 70, 2))
    triples = list(enumerate_3k1s(g))
    # Pick 3 of the 35 pairs, then one vertex in each.
    assert len(triples) == 6545 * 8
    assert all(is_valid_obstruction(g, t) for t in triples[:50])


@pytest.mark.parametrize("q", range(4, 10))
def test_holes(q):
    hole = find_hole(cycle(q), shortest=True)
    assert hole.kind is ObstructionKind.HOLE
    assert len(hole) == q
    assert is_valid_obstruction(cycle(q), hole)


def test_shortest_hole():
    # A 6-cycle with a chord 0 3 holds two 4-cycles.
    g = cycle(6).plus([(0, 3)])
    assert len(find_hole(g, shortest=True)) == 4
    assert find_hole(path(5)) is None


def test_every_hole_is_found_from_p3s(c5):
    holes = list(holes_through_p3s(c5))
    assert len(holes) == 5
    assert all(len(h) == 5 for h in holes)


def test_net_and_sun(net, sun):
    assert find_net(net) == Obstruction(ObstructionKind.NET, (0, 1, 2, 3, 4, 5))
    assert find_3sun(sun) == Obstruction(ObstructionKind.THREE_SUN, (0, 1, 2, 3, 4, 5))
    assert find_net(sun) is None
    assert find_3sun(net) is None


@pytest.mark.parametrize(
    "name, kind",
    [
        ("claw", ObstructionKind.CLAW),
        ("c4", ObstructionKind.HOLE),
        ("net", ObstructionKind.NET),
        ("3-sun", ObstructionKind.THREE_SUN),
    ],
)
def test_pic_certificate(name, kind):
    g = named_graph(name)
    certificate = pic_certificate(g)
    assert certificate.kind is kind
    assert is_valid_obstruction(g, certificate)


@pytest.mark.parametrize(
    "name, kind",
    [
        ("3k1", ObstructionKind.THREE_K1),
        ("c4", ObstructionKind.C4),
        ("c5", ObstructionKind.C5),
    ],
)
def test_bcc_certificate(name, kind):
    g = named_graph(name)
    assert bcc_certificate(g).kind is kind


def test_invalid_obstructions(claw):
    assert not is_valid_obstruction(claw, Obstruction(ObstructionKind.C4, (0, 1, 2, 3)))
    assert not is_valid_obstruction(claw, Obstruction(ObstructionKind.CLAW, (0, 1, 1, 3)))
    assert not is_valid_obstruction(claw, Obstruction(ObstructionKind.CLAW, (0, 1, 2, 9)))


def test_claw_sunflower():
    # Center 0 with leaves 1, 2 and three more leaves: the pair 1 2 is in 3 claws.
    g = star(6)
    sunflower = find_claw_sunflower(g, 2)
    assert sunflower.pair == (1, 2)
    assert sunflower.multiplicity == 3
    assert find_claw_sunflower(g, 3) is None


def test_c4_sunflower(k23):
    # The diagonal 0 1 is shared by the three 4-cycles of K_{2,3}.
    sunflower = find_c4_sunflower(k23, 2)
    assert sunflower.pair == (0, 1)
    assert sunflower.multiplicity == 3
    assert find_c4_sunflower(k23, 3) is None


def test_3k1_sunflower():
    g = Graph.with_vertices(5, [(2, 3)])
    sunflower = find_3k1_sunflower(g, 2)
    assert sunflower.pair == (0, 1)
    assert sunflower.multiplicity == 3
    assert sunflower.to_json()["kind"] == "sunflower"


def test_census(claw, c4):
    census = obstruction_census(claw)
    assert census.claw_leaf_sets == 1
    assert census.claw_leaves == {1, 2, 3}
    assert census.claw_vertices == {0, 1, 2, 3}
    assert census.pic_dirty == {0, 1, 2, 3}
    assert obstruction_census(c4).c4_vertices == {0, 1, 2, 3}
    assert obstruction_census(c4).three_k1_vertices == set()


@given(graphs(max_n=7))
def test_certificates_match_recognition(g):
    certificate = pic_certificate(g)
    assert (certificate is None) == (umbrella_ordering(g) is not None)
    if certificate is not None:
        assert is_valid_obstruction(g, certificate)

    certificate = bcc_certificate(g)
    assert (certificate is None) == (is_biclique_chain(g) is not None)
    if certificate is not None:
        assert is_valid_obstruction(g, certificate)


@given(graphs(max_n=7))
def test_enumerated_obstructions_are_valid(g):
    for enumerate_ in (enumerate_claws, enumerate_c4s, enumerate_c5s, enumerate_3k1s):
        found = list(enumerate_(g))
        assert len({frozenset(o.vertices) for o in found}) == len(found)
        assert all(is_valid_obstruction(g, o) for o in found)


def test_census_counts_leaf_sets(big_star):
    census = obstruction_census(big_star)
    assert census.claw_leaf_sets == 10
    assert census.claw_leaves == {1, 2, 3, 4, 5}
    assert census.bcc_dirty == {1, 2, 3, 4, 5}
