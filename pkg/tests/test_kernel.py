import random

import pytest

from defalliance.errors import PreconditionError
from defalliance.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    diameter,
    grid_graph,
    star_graph,
)
from defalliance.kernel import (
    Inconclusive,
    Reduced,
    VerifiedYes,
    compose_disjoint,
    default_threshold,
    degree_rule,
    diameter_rule,
    diameter_threshold,
    kernelize,
)
from defalliance.predicates import is_locally_minimal

from .conftest import petersen

C6, C10 = cycle_graph(6), cycle_graph(10)


def _valid(g, outcome, k):
    return isinstance(outcome, VerifiedYes) and len(outcome.witness) >= k and is_locally_minimal(g, outcome.witness)


def test_compose_disjoint():
    assert compose_disjoint(C10, [{0, 1}, {4, 5}]) == {0, 1, 4, 5}
    with pytest.raises(PreconditionError, match="violate"):
        compose_disjoint(C10, [{0, 1}, {2, 3}])
    with pytest.raises(PreconditionError, match="not a locally minimal"):
        compose_disjoint(C10, [{0, 1, 2}])
    with pytest.raises(PreconditionError):
        compose_disjoint(C10, [])


def test_compose_random_separated_pairs():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(12, 40)
        g = cycle_graph(n)
        starts = sorted(rng.sample(range(0, n - 1, 4), k=min(3, (n - 1) // 4)))
        parts = [{s, s + 1} for s in starts]
        assert is_locally_minimal(g, compose_disjoint(g, parts))


def test_diameter_rule_long_cycle():
    g = cycle_graph(60)
    outcome = diameter_rule(g, 3)
    assert _valid(g, outcome, 3)
    assert outcome.rule == "diameter"


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_diameter_rule_fires_on_cycles(k):
    g = cycle_graph(2 * diameter_threshold(k) + 2)
    assert _valid(g, diameter_rule(g, k), k)


def test_diameter_rule_below_threshold():
    for g in (C6, petersen()):
        outcome = diameter_rule(g, 2)
        assert isinstance(outcome, Inconclusive) and "diameter" in outcome.report


def test_diameter_rule_scoped():
    g = cycle_graph(60)
    assert _valid(g, diameter_rule(g, 3, scope=range(60)), 3)
    with pytest.raises(PreconditionError, match="scope"):
        diameter_rule(g, 3, scope={0, 2})


def test_threshold_arithmetic():
    for k in range(1, 5):
        t = diameter_threshold(k)
        assert t == 2 * (k * k + 2 * k)
        for n in range(3, 201):
            fires = not isinstance(diameter_rule(cycle_graph(n), k), Inconclusive)
            assert fires == (n // 2 >= t)


def test_default_thresholds():
    assert default_threshold("triangle_free", 2) == 16
    assert default_threshold("general", 1) == 4**4
    assert default_threshold("planar", 1) == 4**4
    with pytest.raises(PreconditionError):
        default_threshold("bogus", 1)


def test_triangle_free_rule_on_complete_bipartite():
    g = complete_bipartite_graph(16, 16)
    outcome = degree_rule(g, 2, "triangle_free")
    assert _valid(g, outcome, 2) and outcome.rule == "triangle_free"


def test_triangle_free_rule_on_cycle():
    outcome = degree_rule(C6, 2, "triangle_free")
    assert isinstance(outcome, Inconclusive)
    assert outcome.details == {"max_degree": 2, "threshold_used": 16}


def test_general_rule_with_explicit_threshold():
    g = complete_bipartite_graph(3, 12)
    assert _valid(g, degree_rule(g, 2, "general", {"general": 5}), 2)


def test_degree_rule_preconditions():
    with pytest.raises(PreconditionError, match="triangle"):
        degree_rule(complete_graph(4), 1, "triangle_free")
    with pytest.raises(PreconditionError, match="minimum degree"):
        degree_rule(star_graph(4), 1)
    with pytest.raises(PreconditionError, match="minimum degree"):
        kernelize(Graph(3, [(0, 1), (1, 2)]), 1)
    with pytest.raises(PreconditionError):
        kernelize(C6, 0)


def test_kernelize_petersen_certificate():
    outcome = kernelize(petersen(), 2)
    assert isinstance(outcome, Reduced)
    cert = outcome.certificate
    assert (cert.diameter, cert.max_degree) == (2, 3)
    assert cert.diameter_threshold == 16 and cert.threshold_used == 8**6
    assert "2k^2+4k" in cert.size_bound


@pytest.mark.parametrize("g", [C6, cycle_graph(20), petersen(), grid_graph(4, 4), complete_graph(5)])
def test_reduced_certificates_are_honest(g):
    k = 2
    outcome = kernelize(g, k)
    assert isinstance(outcome, Reduced)
    cert = outcome.certificate
    assert cert.diameter == diameter(g) < cert.diameter_threshold
    assert cert.max_degree == g.max_degree() < cert.threshold_used


def test_kernelize_outcomes_serialize():
    assert kernelize(cycle_graph(60), 3).to_dict()["outcome"] == "verified_yes"
    assert kernelize(petersen(), 2).to_dict()["outcome"] == "reduced"
    tf = kernelize(complete_bipartite_graph(16, 16), 2, "triangle_free")
    assert tf.to_dict()["rule"] == "triangle_free"
