import pytest
from hypothesis import given, settings as hypothesis_settings

from pickernel.constants import BCC, BCD, PIC
from pickernel.generators import cycle, named_graph, planted_pic
from pickernel.graph import complement
from pickernel.recognition import extremal_edges, umbrella_ordering
from pickernel.solver import (
    Solution,
    branch_solve,
    certificate,
    hole_lower_bound,
    in_class,
    oracle_opt,
    solve_optimum,
    verify_solution,
)
from strategies import graphs


@pytest.mark.parametrize(
    "problem, name, value",
    [
        (PIC, "claw", 1),
        (PIC, "c4", 1),
        (PIC, "c5", 2),
        (PIC, "p4", 0),
        (BCC, "3k1", 1),
        (BCC, "c4", 1),
        (BCC, "c5", 2),
        (BCC, "p4", 0),
        (BCD, "2k2", 1),
    ],
)
def test_golden_values(problem, name, value):
    assert oracle_opt(named_graph(name), problem, 4) == value


@pytest.mark.parametrize("name", ["net", "3-sun"])
def test_search_agrees_with_oracle(name):
    g = named_graph(name)
    value = oracle_opt(g, PIC, 4)
    assert value is not None and value >= 1
    assert solve_optimum(g, PIC, 4).optimum == value


def test_oracle_cap(c5):
    assert oracle_opt(c5, PIC, 1) is None


@pytest.mark.parametrize("q", range(6, 9))
def test_hole_lower_bound(q):
    assert hole_lower_bound(q) == q - 3
    assert oracle_opt(cycle(q), PIC, q - 4) is None


def test_hole_lower_bound_is_never_negative():
    assert hole_lower_bound(2) == 0


@pytest.mark.parametrize("q", range(6, 11))
def test_long_holes_are_pruned(q):
    solution = branch_solve(cycle(q), PIC, q - 4)
    assert not solution.feasible
    assert solution.explored == 1


def test_branch_solve_claw(claw):
    solution = branch_solve(claw, PIC, 1)
    assert solution.feasible
    assert len(solution.completion) == 1
    assert verify_solution(claw, PIC, solution.completion)
    assert not branch_solve(claw, PIC, 0).feasible


def test_branch_solve_c5(c5):
    assert not branch_solve(c5, PIC, 1).feasible
    assert branch_solve(c5, PIC, 2).feasible


def test_branch_solve_deletion():
    g = named_graph("2k2")
    solution = branch_solve(g, BCD, 1)
    assert solution.feasible
    (deleted,) = solution.completion
    assert g.has_edge(*deleted)
    assert verify_solution(g, BCD, solution.completion)


def test_branch_solve_on_a_member():
    assert branch_solve(named_graph("p4"), PIC, 0) == Solution(True, [], None, 1)


def test_branch_solve_errors(claw):
    with pytest.raises(ValueError):
        branch_solve(claw, PIC, -1)
    with pytest.raises(ValueError):
        branch_solve(claw, "ic", 1)


def test_verify_solution(c4, claw):
    assert verify_solution(c4, PIC, [(0, 2)])
    assert not verify_solution(c4, PIC, [])
    with pytest.raises(ValueError):
        verify_solution(c4, PIC, [(0, 1)])
    with pytest.raises(ValueError):
        verify_solution(c4, BCD, [(0, 2)])
    with pytest.raises(ValueError):
        verify_solution(c4, PIC, [(0, 7)])
    assert verify_solution(claw, BCD, [(0, 1), (0, 2)])


def test_in_class_and_certificate(claw):
    assert not in_class(claw, PIC)
    assert certificate(claw, PIC).kind.value == "claw"
    assert certificate(named_graph("p4"), PIC) is None
    assert certificate(named_graph("2k2"), BCD).kind.value == "c4"


def test_planted_instance_is_feasible():
    g = planted_pic(12, 2, seed=7)
    solution = branch_solve(g, PIC, 2)
    assert solution.feasible
    assert verify_solution(g, PIC, solution.completion)


@hypothesis_settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_branch_solve_matches_oracle(g):
    for problem in (PIC, BCC, BCD):
        value = oracle_opt(g, problem, 3)
        solution = solve_optimum(g, problem, 3)
        assert solution.optimum == value
        if solution.feasible:
            assert verify_solution(g, problem, solution.completion)


@hypothesis_settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_extremal_edges_of_optimal_completions(g):
    solution = solve_optimum(g, PIC, 3)
    if not solution.feasible:
        return
    h = g.plus(solution.completion)
    for u, v in extremal_edges(h, umbrella_ordering(h)):
        assert g.has_edge(u, v)


@hypothesis_settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_deletion_is_completion_of_the_complement(g):
    assert oracle_opt(g, BCD, 3) == oracle_opt(complement(g), BCC, 3)


@pytest.mark.slow
def test_oracle_on_cycles():
    for q in range(6, 10):
        assert oracle_opt(cycle(q), PIC, q - 3) == q - 3
