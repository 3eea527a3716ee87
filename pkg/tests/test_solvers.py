import random

import pytest

from defalliance.errors import BudgetExceeded, PreconditionError
from defalliance.graph import Graph, bfs_layering, complete_graph, cycle_graph, fan_graph, star_graph
from defalliance.predicates import is_connected_locally_minimal, is_locally_minimal
from defalliance.solvers import (
    exact_extension,
    exact_max_connected_lmda,
    exact_max_lmda,
    extend_guess,
    fpt_connected_lmda,
    has_clique,
)

from .conftest import octahedron, random_connected

C5, C6 = cycle_graph(5), cycle_graph(6)


@pytest.mark.parametrize(
    "g, expected",
    [(C5, 2), (C6, 4), (complete_graph(2), 1), (star_graph(5), 1)],
)
def test_exact_max_lmda(g, expected):
    result = exact_max_lmda(g)
    assert result.optimum == expected
    assert is_locally_minimal(g, result.witness) and len(result.witness) == expected


def test_exact_max_lmda_fan():
    result = exact_max_lmda(fan_graph(9))
    assert result.optimum >= 6


def test_exact_witness_is_smallest_optimum():
    assert exact_max_lmda(C6).witness == {0, 1, 3, 4}


@pytest.mark.parametrize("g, expected", [(C6, 2), (star_graph(5), 3), (complete_graph(2), 1)])
def test_exact_max_connected(g, expected):
    result = exact_max_connected_lmda(g)
    assert result.optimum == expected
    assert is_connected_locally_minimal(g, result.witness)


@pytest.mark.parametrize("n", [6, 9, 12])
def test_cycles_compose_separated_pairs(n):
    # pairs of adjacent vertices with one gap between them
    assert exact_max_lmda(cycle_graph(n)).optimum == 2 * n // 3


def test_size_limit():
    with pytest.raises(PreconditionError, match="limit"):
        exact_max_lmda(cycle_graph(10), size_limit=8)


def test_extension_examples():
    assert exact_extension(C6, {0}).witness == {0, 1}
    assert exact_extension(C6, {0, 3}).witness == {0, 1, 3, 4}
    assert not exact_extension(star_graph(8), {0}).decision
    assert exact_extension(star_graph(8), {1}).witness == {1}


def test_extension_of_empty_set_finds_something():
    result = exact_extension(C5, set())
    assert result.decision and is_locally_minimal(C5, result.witness)


@pytest.mark.parametrize("g, k, expected", [(C6, 2, True), (fan_graph(9), 2, True), (C5, 3, False), (C6, 3, False)])
def test_fpt_examples(g, k, expected):
    result = fpt_connected_lmda(g, k)
    assert result.decision is expected
    if expected:
        assert len(result.witness) >= k and is_connected_locally_minimal(g, result.witness)


def test_fpt_budget():
    with pytest.raises(BudgetExceeded, match="layer sizes"):
        fpt_connected_lmda(star_graph(40), 2, budget=10)


def test_fpt_requires_connected_graph():
    with pytest.raises(PreconditionError):
        fpt_connected_lmda(Graph(4, [(0, 1), (2, 3)]), 1)
    with pytest.raises(PreconditionError):
        fpt_connected_lmda(C6, 0)


def test_extend_guess_on_long_cycle():
    g = cycle_graph(20)
    bfs = bfs_layering(g, 0)
    assert extend_guess(g, frozenset({0, 1}), 0, 2, bfs) == {0, 1}
    assert extend_guess(g, frozenset({0}), 0, 2, bfs) is None


def test_fpt_uses_far_layers():
    # the window around any root of C_20 with k = 2 misses most of the cycle
    result = fpt_connected_lmda(cycle_graph(20), 2)
    assert result.decision and len(result.witness) >= 2


def test_fpt_agrees_with_oracle():
    rng = random.Random(2024)
    for _ in range(60):
        g = random_connected(rng, (2, 9))
        k = rng.choice([1, 2, 3, 4])
        optimum = exact_max_connected_lmda(g).optimum
        assert fpt_connected_lmda(g, k).decision == (optimum >= k)


def test_solvers_are_deterministic():
    g = fan_graph(9)
    assert exact_max_lmda(g) == exact_max_lmda(g)
    assert fpt_connected_lmda(g, 3) == fpt_connected_lmda(g, 3)


def test_to_dict_timing_flag():
    result = exact_max_lmda(C5)
    assert "elapsed" in result.to_dict()
    assert result.to_dict(timing=False) == {
        "decision": "yes",
        "optimum": 2,
        "witness": [0, 1],
        "candidates_examined": result.candidates_examined,
    }


def test_has_clique():
    assert has_clique(octahedron(), 3) and not has_clique(octahedron(), 4)
    assert has_clique(C5, 2) and not has_clique(C5, 3)
    assert has_clique(Graph(1), 1) and has_clique(Graph(0), 0)
