import random

import pytest
from hypothesis import strategies as st

from defalliance.graph import Graph, fan_graph, gnp_graph, is_connected_set


def one_based(*labels):
    """Vertex set written with 1-based labels (fan hub = 1)."""
    return frozenset(label - 1 for label in labels)


FAN_D1 = one_based(2, 3, 5, 6, 8, 9)
FAN_D2 = one_based(1, 2, 4, 6, 8)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def octahedron():
    # K_{2,2,2}: everything except the matching {0,3}, {1,4}, {2,5}
    return Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3])


@pytest.fixture
def fan():
    return fan_graph(9)


def random_connected(rng: random.Random, n_range=(2, 10), max_degree=4, p_range=(0.2, 0.6)) -> Graph:
    while True:
        n = rng.randint(*n_range)
        g = gnp_graph(n, rng.uniform(*p_range), rng.randrange(2**31))
        if is_connected_set(g, g.vertices) and g.max_degree() <= max_degree:
            return g


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graphs_with_subset(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    d = draw(st.frozensets(st.integers(0, g.n - 1)))
    return g, d


# -- acceptance summary ------------------------------------------------------

_acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"[{status}] criterion {marker.args[0]}: {marker.args[1]}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
