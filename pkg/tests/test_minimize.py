import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defalliance.errors import NotAnAllianceError, PreconditionError
from defalliance.graph import Graph, cycle_graph, fan_graph, star_graph
from defalliance.minimize import algorithm1, algorithm2, ordered, peel_to_alliance, pivot_run, removable
from defalliance.predicates import crucial_set, is_defensive_alliance, is_locally_minimal, slack

from .conftest import FAN_D1, graphs_with_subset, one_based

C5, C6 = cycle_graph(5), cycle_graph(6)


def test_removable_examples():
    assert removable(C5, range(5), 0)
    assert not removable(C6, {0, 1, 3, 4}, 0)
    assert not removable(star_graph(3), {1}, 1)


def test_removable_errors():
    with pytest.raises(PreconditionError):
        removable(C6, {0, 1}, 3)
    with pytest.raises(NotAnAllianceError):
        removable(C6, {0, 2}, 0)


def test_algorithm1_examples(fan):
    assert algorithm1(C5, range(5))[0] == {3, 4}
    assert algorithm1(C6, {0, 1, 3, 4})[0] == {0, 1, 3, 4}
    result, trace = algorithm1(fan, FAN_D1)
    assert result == FAN_D1 and trace.steps == []


def test_algorithm1_c5_trace_text():
    _, trace = algorithm1(C5, range(5))
    assert trace.to_text() == "removed 0 reason 1 4\nremoved 1 reason 2\nremoved 2 reason 3\n"


def test_single_sweep_is_not_enough():
    # path 3-1-0-2: 0 is kept for its marginal neighbour 1, then 1 itself goes
    g = Graph(4, [(0, 1), (0, 2), (1, 3)])
    result, trace = algorithm1(g, {0, 1, 2})
    assert [s.removed for s in trace.steps] == [1, 0]
    assert [s.sweep for s in trace.steps] == [1, 2]
    assert result == {2}
    assert is_locally_minimal(g, result)


def test_algorithm2_fan(fan):
    result, trace = algorithm2(fan, range(9), 0)
    assert result == one_based(8, 9)
    removed = [s.removed for s in trace.steps]
    # rim 2..5 stripped, then the hub, then 6 and 7 (1-based labels)
    assert removed == sorted(one_based(2, 3, 4, 5)) + [0] + sorted(one_based(6, 7))
    assert trace.replay() == result


def test_algorithm2_c6_and_singleton():
    result, _ = algorithm2(C6, range(6), 0)
    assert len(result) >= 2 and is_locally_minimal(C6, result)
    assert algorithm2(star_graph(2), {1}, 1)[0] == {1}


def test_algorithm2_pivot_must_be_member():
    with pytest.raises(PreconditionError):
        algorithm2(C6, {0, 1}, 3)


def test_pivot_run_intermediates(fan):
    run = pivot_run(fan, range(9), 0)
    assert run.after_pass == {0} | one_based(6, 7, 8, 9)
    assert run.pivot_removed
    assert is_defensive_alliance(fan, run.without_pivot)


def test_order_policies():
    assert ordered({3, 1, 2}) == [1, 2, 3]
    assert ordered({3, 1, 2}, "desc") == [3, 2, 1]
    assert ordered(range(10), "seed:4") == ordered(range(10), "seed:4")
    assert sorted(ordered(range(10), "seed:4")) == list(range(10))
    assert ordered({1, 2, 3}, [2, 3, 1]) == [2, 3, 1]
    with pytest.raises(PreconditionError):
        ordered({1}, "sideways")


def test_order_changes_output():
    assert algorithm1(C5, range(5), "asc")[0] != algorithm1(C5, range(5), "desc")[0]


def test_peel_examples():
    assert peel_to_alliance(C6, {0, 1, 2, 4}) == {0, 1, 2}
    assert peel_to_alliance(C6, {0, 2, 4}) == frozenset()
    assert peel_to_alliance(C6, range(6)) == frozenset(range(6))


def _random_alliance(rng, g):
    x = frozenset(v for v in g.vertices if rng.random() < 0.7)
    return peel_to_alliance(g, x) or frozenset(g.vertices)


@settings(max_examples=150)
@given(graphs_with_subset(min_n=1, max_n=9), st.sampled_from(["asc", "desc", "seed:1", "seed:2"]))
def test_minimizer_contracts(case, order):
    g, x = case
    d = peel_to_alliance(g, x) or frozenset(g.vertices)
    crucial = crucial_set(g, d)
    for result, trace in [algorithm1(g, d, order), algorithm2(g, d, min(d), order)]:
        assert is_locally_minimal(g, result)
        assert result <= d
        assert trace.replay() == result == trace.final
        assert not any(len(result) > 1 and all(slack(g, result, w) >= 2 for w in g.adjacency[u] if w in result)
                       for u in result)
        current = set(d)
        for step in trace.steps:
            assert all(step.slack_snapshot[w] >= 2 for w in step.reason)
            assert set(step.reason) == {w for w in g.adjacency[step.removed] if w in current}
            current.remove(step.removed)
    assert crucial <= algorithm1(g, d, order)[0]
    if g.min_degree() >= 2:
        assert len(algorithm1(g, d, order)[0]) >= 2


def test_adjacent_marginal_pairs_survive():
    rng = random.Random(5)
    for _ in range(100):
        g = fan_graph(rng.randint(4, 12))
        d = _random_alliance(rng, g)
        marginal = {v for v in d if 0 <= slack(g, d, v) <= 1 and any(u in d for u in g.adjacency[v])}
        paired = {v for v in marginal if marginal & set(g.adjacency[v])}
        result, trace = algorithm1(g, d, f"seed:{rng.randrange(1000)}")
        assert paired <= result
        # slack never rises, so a marginal vertex never justifies a removal
        for step in trace.steps:
            assert not marginal & set(step.reason)


@given(graphs_with_subset(max_n=9), st.integers(0, 10_000))
def test_peel_confluence(case, seed):
    g, x = case
    reference = peel_to_alliance(g, x)
    assert peel_to_alliance(g, x, f"seed:{seed}") == reference
    assert peel_to_alliance(g, x, "desc") == reference
    assert reference <= x
    assert not reference or is_defensive_alliance(g, reference)
    # maximality: every alliance inside x lies inside the peel
    members = sorted(x)
    for mask in range(1, 1 << len(members)):
        sub = frozenset(v for i, v in enumerate(members) if mask >> i & 1)
        if is_defensive_alliance(g, sub):
            assert sub <= reference
