"""Kernelization rules for locally minimal defensive alliances of size >= k.

Each rule either builds an explicit witness (checked with
:func:`is_locally_minimal` before it is returned), gives up with a report, or,
in :func:`kernelize`, certifies that the instance is already small: bounded
diameter and bounded maximum degree together bound the vertex count.

Only graphs of minimum degree at least two are accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .errors import PreconditionError
from .graph import Graph, bfs_layering, component_of, eccentricities, is_connected_set
from .minimize import algorithm1, pivot_run
from .predicates import is_defensive_alliance, is_locally_minimal

GRAPH_CLASSES = ("general", "triangle_free", "planar")


@dataclass(frozen=True)
class VerifiedYes:
    witness: frozenset[int]
    rule: str

    def to_dict(self) -> dict:
        return {"outcome": "verified_yes", "rule": self.rule, "witness": sorted(self.witness)}


@dataclass(frozen=True)
class Certificate:
    diameter: int
    diameter_threshold: int
    max_degree: int
    threshold_used: int
    size_bound: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class Reduced:
    certificate: Certificate

    def to_dict(self) -> dict:
        return {"outcome": "reduced", "certificate": self.certificate.to_dict()}


@dataclass(frozen=True)
class Inconclusive:
    rule: str
    report: str
    details: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {"outcome": "inconclusive", "rule": self.rule, "report": self.report, "details": self.details}


KernelOutcome = Union[VerifiedYes, Reduced, Inconclusive]


@dataclass
class DegreeRuleState:
    """Pivot rounds of the high-degree witness search."""

    pivots: list[int] = field(default_factory=list)
    partitions: list[tuple[frozenset[int], frozenset[int]]] = field(default_factory=list)
    alliances: list[frozenset[int]] = field(default_factory=list)

    def to_dict(self, g: Graph) -> dict:
        return {
            "pivots": [{"vertex": u, "degree": g.degree(u)} for u in self.pivots],
            "rounds": [
                {"alliance_size": len(a), "p1": len(p1), "p2": len(p2)}
                for a, (p1, p2) in zip(self.alliances, self.partitions)
            ],
        }


def diameter_threshold(k: int) -> int:
    return 2 * (k * k + 2 * k)


def default_threshold(graph_class: str, k: int) -> int:
    """Degree at which the high-degree rule is attempted.

    Only the triangle-free value comes with a proof; the general and planar
    defaults are stand-ins for unspecified fast-growing functions. A witness is
    always re-checked, so these numbers affect when the rule runs, not soundness.
    """
    if graph_class == "triangle_free":
        return 4 * k * k
    if graph_class == "general":
        return (4 * k) ** (2 * k + 2)
    if graph_class == "planar":
        return (4 * k * k) ** (2 * k + 2)
    raise PreconditionError(f"unknown graph class {graph_class!r}; choose from {GRAPH_CLASSES}")


def size_bound(graph_class: str, k: int, threshold: int) -> str:
    """Symbolic vertex bound implied by diameter < 2(k^2+2k) and max degree < threshold.

    A BFS tree of depth below 2(k^2+2k) with fan-out below the threshold has
    fewer than Delta^(2k^2+4k) vertices.
    """
    exponent = 2 * k * k + 4 * k
    symbolic = {
        "general": "f(k)^(2k^2+4k)",
        "triangle_free": "(4k^2)^(2k^2+4k) = k^O(k^2)",
        "planar": "k^O(k^4)",
    }[graph_class]
    return f"n <= Delta^(2k^2+4k) <= {threshold}^{exponent}; {symbolic}"


def _check_min_degree(g: Graph) -> None:
    if g.n == 0 or g.min_degree() < 2:
        raise PreconditionError("kernel rules require minimum degree at least 2")


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionError("k must be a positive integer")


def _accept(g: Graph, candidate: frozenset[int], k: int) -> bool:
    return len(candidate) >= k and is_locally_minimal(g, candidate)


def compose_disjoint(g: Graph, parts: Iterable[Iterable[int]]) -> frozenset[int]:
    """Union of locally minimal alliances whose closed neighbourhoods avoid each other."""
    parts = [g.vertex_set(p) for p in parts]
    if not parts:
        raise PreconditionError("need at least one part")
    for i, p in enumerate(parts):
        if not is_locally_minimal(g, p):
            raise PreconditionError(f"part {i} is not a locally minimal defensive alliance")
    closed = [g.closed_neighborhood(p) for p in parts]
    for i in range(len(parts)):
        for j in range(len(parts)):
            if i != j and closed[i] & parts[j]:
                raise PreconditionError(f"parts {i} and {j} violate N[S_i] & S_j = {{}}")
    union = frozenset().union(*parts)
    assert is_locally_minimal(g, union)
    return union


def _pivot_part(g: Graph, base: frozenset[int], w: int) -> tuple[frozenset[int], frozenset[int]]:
    """Run the pivoted greedy at ``w``; return (its output, a locally minimal part near ``w``)."""
    run = pivot_run(g, base, w)
    source = run.result if w in run.result else run.after_pass
    part, _ = algorithm1(g, component_of(g, source, w))
    return run.result, part


def diameter_rule(g: Graph, k: int, scope: Iterable[int] | None = None) -> KernelOutcome:
    """Large diameter forces ``ceil(k/2)`` far-apart locally minimal alliances.

    Pivots are taken every ``2k+3`` BFS levels from an endpoint of a longest
    shortest path; the pieces they produce are kept only when their closed
    neighbourhoods are pairwise disjoint from the other pieces.
    """
    _check_k(k)
    _check_min_degree(g)
    if scope is None:
        base = frozenset(g.vertices)
    else:
        base = g.vertex_set(scope)
        if not (is_defensive_alliance(g, base) and is_connected_set(g, base)):
            raise PreconditionError("scope must be a connected defensive alliance")
    ecc = eccentricities(g, None if scope is None else base)
    diam = max(ecc.values())
    needed = diameter_threshold(k)
    if diam < needed:
        return Inconclusive("diameter", f"diameter {diam} < 2(k^2+2k) = {needed}", {"diameter": diam})

    start = min(v for v, e in ecc.items() if e == diam)
    bfs = bfs_layering(g, start, None if scope is None else base)
    spacing = 2 * k + 3
    wanted = math.ceil(k / 2)
    parts: list[frozenset[int]] = []
    skipped: list[int] = []
    for lvl in range(0, bfs.height + 1, spacing):
        w = min(bfs.layers[lvl])
        whole, part = _pivot_part(g, base, w)
        for candidate in (whole, part):
            if _accept(g, candidate, k):
                return VerifiedYes(candidate, "diameter")
        if not is_locally_minimal(g, part):
            skipped.append(w)
            continue
        closed = g.closed_neighborhood(part)
        if any(closed & p for p in parts):
            skipped.append(w)
            continue
        parts.append(part)
        if len(parts) == wanted:
            union = compose_disjoint(g, parts)
            if _accept(g, union, k):
                return VerifiedYes(union, "diameter")
            break
    return Inconclusive(
        "diameter",
        f"collected {len(parts)} of {wanted} separated alliances",
        {"diameter": diam, "parts": [sorted(p) for p in parts], "skipped_pivots": skipped},
    )


def _max_degree_vertex(g: Graph, among: Iterable[int]) -> int:
    return min(among, key=lambda v: (-g.degree(v), v))


def _general_search(g: Graph, k: int, rule: str) -> KernelOutcome:
    state = DegreeRuleState()
    base = frozenset(g.vertices)
    u = _max_degree_vertex(g, base)
    for _ in range(2 * k + 1):
        run = pivot_run(g, base, u)
        state.pivots.append(u)
        if _accept(g, run.result, k):
            return VerifiedYes(run.result, rule)
        if not run.pivot_removed:
            break
        rest = run.without_pivot
        shrunk, _ = algorithm1(g, rest)
        if _accept(g, shrunk, k):
            return VerifiedYes(shrunk, rule)
        pivots = state.pivots
        p1 = frozenset(x for x in rest if all(g.has_edge(x, p) for p in pivots))
        state.partitions.append((p1, rest - p1))
        state.alliances.append(rest)
        if not p1:
            break
        u = _max_degree_vertex(g, p1)
        base = rest
    return Inconclusive(rule, f"no witness after {len(state.pivots)} pivot rounds", state.to_dict(g))


def _triangle_free_search(g: Graph, k: int) -> KernelOutcome:
    u = _max_degree_vertex(g, g.vertices)
    bfs = bfs_layering(g, u)
    run = pivot_run(g, frozenset(g.vertices), u)
    if _accept(g, run.result, k):
        return VerifiedYes(run.result, "triangle_free")
    details: dict = {"pivot": u, "pivot_degree": g.degree(u)}
    if run.pivot_removed:
        rest = run.without_pivot
        shrunk, _ = algorithm1(g, rest)
        if _accept(g, shrunk, k):
            return VerifiedYes(shrunk, "triangle_free")
        layer1 = rest & bfs.layers[1] if bfs.height >= 1 else frozenset()
        layer2 = rest & bfs.layers[2] if bfs.height >= 2 else frozenset()
        details.update({"l1_in_alliance": len(layer1), "l2_in_alliance": len(layer2)})
        if layer2:
            w = _max_degree_vertex(g, layer2)
            details.update({"l2_max_degree_vertex": w, "l2_max_degree": g.degree(w)})
    return Inconclusive("triangle_free", "no witness from the pivot at the maximum-degree vertex", details)


def degree_rule(
    g: Graph, k: int, graph_class: str = "general", thresholds: Mapping[str, int] | None = None
) -> KernelOutcome:
    _check_k(k)
    _check_min_degree(g)
    if graph_class not in GRAPH_CLASSES:
        raise PreconditionError(f"unknown graph class {graph_class!r}; choose from {GRAPH_CLASSES}")
    if graph_class == "triangle_free" and not g.is_triangle_free():
        raise PreconditionError("graph class 'triangle_free' asserted but the graph has a triangle")
    threshold = (thresholds or {}).get(graph_class) or default_threshold(graph_class, k)
    delta = g.max_degree()
    if delta < threshold:
        return Inconclusive(
            graph_class,
            f"max degree {delta} < threshold {threshold}",
            {"max_degree": delta, "threshold_used": threshold},
        )
    if graph_class == "triangle_free":
        return _triangle_free_search(g, k)
    return _general_search(g, k, graph_class)


def kernelize(
    g: Graph, k: int, graph_class: str = "general", thresholds: Mapping[str, int] | None = None
) -> KernelOutcome:
    """Diameter rule, then degree rule; otherwise a size certificate."""
    _check_k(k)
    _check_min_degree(g)
    if graph_class not in GRAPH_CLASSES:
        raise PreconditionError(f"unknown graph class {graph_class!r}; choose from {GRAPH_CLASSES}")
    by_diameter = diameter_rule(g, k)
    if isinstance(by_diameter, VerifiedYes):
        return by_diameter
    by_degree = degree_rule(g, k, graph_class, thresholds)
    if isinstance(by_degree, VerifiedYes):
        return by_degree
    threshold = (thresholds or {}).get(graph_class) or default_threshold(graph_class, k)
    diam = max(eccentricities(g).values())
    delta = g.max_degree()
    if diam >= diameter_threshold(k):
        return by_diameter
    if delta >= threshold:
        return by_degree
    return Reduced(
        Certificate(
            diameter=diam,
            diameter_threshold=diameter_threshold(k),
            max_degree=delta,
            threshold_used=threshold,
            size_bound=size_bound(graph_class, k, threshold),
        )
    )
