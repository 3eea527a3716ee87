"""Clique on regular graphs -> locally minimal defensive alliance extension.

Given an ``r``-regular graph on ``n`` vertices and a clique size ``k``, add
``r - 2k + 1`` hub vertices adjacent to every source vertex, give each hub
``n - 2k - 1`` private pendant vertices, and force all pendants into the
alliance. The source graph has a ``k``-clique iff the forced set extends to a
locally minimal defensive alliance.

Output layout: source vertices ``0..n-1``, then the hubs, then each hub's
pendant block in hub order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphFormatError, PreconditionError
from .graph import Graph, serialize_graph
from .solvers import DEFAULT_SIZE_LIMIT, SolveResult, exact_extension, has_clique


@dataclass(frozen=True)
class ExtensionInstance:
    graph: Graph
    forced: frozenset[int]
    source_n: int
    source_r: int
    k: int
    hubs: tuple[int, ...]
    pendants: tuple[tuple[int, ...], ...]  # pendants[i] hang off hubs[i]

    def serialize(self) -> str:
        lines = [
            f"# clique-to-extension: source n={self.source_n} r={self.source_r} k={self.k}",
            serialize_graph(self.graph).rstrip("\n"),
            f"# hubs: {' '.join(map(str, self.hubs))}",
            f"# forced: {' '.join(map(str, sorted(self.forced)))}",
        ]
        return "\n".join(lines) + "\n"


def regularity(g: Graph) -> int | None:
    degrees = {g.degree(v) for v in g.vertices}
    return degrees.pop() if len(degrees) == 1 else None


def clique_to_extension(g: Graph, k: int) -> ExtensionInstance:
    r = regularity(g)
    n = g.n
    if r is None:
        raise PreconditionError("source graph is not regular")
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if r < 2 * k:
        raise PreconditionError(f"need r >= 2k for a non-empty hub set; r={r}, k={k}")
    if n < 2 * k + 2:
        raise PreconditionError(f"need n >= 2k+2 for non-empty pendant sets; n={n}, k={k}")

    hub_count = r - 2 * k + 1
    pendant_count = n - 2 * k - 1
    hubs = tuple(range(n, n + hub_count))
    edges = list(g.edges())
    pendants = []
    nxt = n + hub_count
    for a in hubs:
        edges.extend((v, a) for v in range(n))
        block = tuple(range(nxt, nxt + pendant_count))
        edges.extend((a, p) for p in block)
        pendants.append(block)
        nxt += pendant_count
    out = Graph(nxt, edges)
    forced = frozenset(p for block in pendants for p in block)
    return ExtensionInstance(out, forced, n, r, k, hubs, tuple(pendants))


def parse_forced(text: str) -> frozenset[int] | None:
    """Vertex ids listed in ``# forced:`` comment lines, or None if there are none."""
    found = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#") and line[1:].strip().startswith("forced:"):
            body = line[1:].strip()[len("forced:") :]
            try:
                ids = {int(tok) for tok in body.split()}
            except ValueError:
                raise GraphFormatError("bad vertex id in forced block", lineno) from None
            found = (found or frozenset()) | ids
    return found


@dataclass(frozen=True)
class RoundTrip:
    has_clique: bool
    extension: SolveResult
    instance: ExtensionInstance

    @property
    def agrees(self) -> bool:
        return self.has_clique == self.extension.decision


def round_trip(g: Graph, k: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> RoundTrip:
    instance = clique_to_extension(g, k)
    if instance.graph.n > size_limit:
        raise PreconditionError(
            f"reduced instance has {instance.graph.n} vertices; exhaustive search limit is {size_limit}"
        )
    result = exact_extension(instance.graph, instance.forced, size_limit)
    return RoundTrip(has_clique(g, k), result, instance)


def verify_reduction(g: Graph, k: int, size_limit: int = DEFAULT_SIZE_LIMIT) -> bool:
    """Check that clique existence matches the extension answer on the built instance."""
    return round_trip(g, k, size_limit).agrees
