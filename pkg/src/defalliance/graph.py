"""Simple undirected graphs on vertices ``0..n-1``.

Vertex sets throughout the package are plain ``frozenset[int]``; use
:meth:`Graph.vertex_set` to validate an arbitrary iterable against a graph.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphFormatError, PreconditionError


class Graph:
    """Immutable simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adjacency", "m", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PreconditionError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise PreconditionError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.m = sum(len(a) for a in self.adjacency) // 2
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def closed_neighborhood(self, d: Iterable[int]) -> frozenset[int]:
        out = set(d)
        for v in list(out):
            out.update(self.adjacency[v])
        return frozenset(out)

    def vertex_set(self, members: Iterable[int]) -> frozenset[int]:
        s = frozenset(members)
        for v in s:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise PreconditionError(f"vertex {v!r} not in graph with n={self.n}")
        return s

    def is_triangle_free(self) -> bool:
        for u, v in self.edges():
            if self._nbr_sets[u] & self._nbr_sets[v]:
                return False
        return True


@dataclass(frozen=True)
class BfsLayering:
    root: int
    level: tuple[int | None, ...]
    layers: tuple[frozenset[int], ...]
    parent: tuple[int | None, ...]

    @property
    def height(self) -> int:
        return len(self.layers) - 1

    def reached(self) -> frozenset[int]:
        return frozenset().union(*self.layers)

    def up_to(self, depth: int) -> frozenset[int]:
        """Union of layers ``L_0..L_depth``."""
        return frozenset().union(*self.layers[: depth + 1])


def bfs_layering(g: Graph, root: int, within: Iterable[int] | None = None) -> BfsLayering:
    """Breadth-first layering from ``root``, neighbours scanned in ascending order.

    With ``within`` the search is restricted to the induced subgraph on that set.
    """
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} out of range for n={g.n}")
    allowed = None if within is None else frozenset(within)
    if allowed is not None and root not in allowed:
        raise PreconditionError(f"root {root} not in the restricting set")
    level: list[int | None] = [None] * g.n
    parent: list[int | None] = [None] * g.n
    level[root] = 0
    layers: list[list[int]] = [[root]]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if level[w] is not None or (allowed is not None and w not in allowed):
                continue
            level[w] = level[u] + 1
            parent[w] = u
            if level[w] == len(layers):
                layers.append([])
            layers[level[w]].append(w)
            queue.append(w)
    return BfsLayering(
        root=root,
        level=tuple(level),
        layers=tuple(frozenset(layer) for layer in layers),
        parent=tuple(parent),
    )


def eccentricities(g: Graph, within: Iterable[int] | None = None) -> dict[int, int]:
    """Eccentricity of every vertex of a connected (induced) graph."""
    verts = sorted(within) if within is not None else list(g.vertices)
    if not verts:
        raise PreconditionError("diameter of an empty graph is undefined")
    allowed = frozenset(verts)
    ecc = {}
    for v in verts:
        bfs = bfs_layering(g, v, None if within is None else allowed)
        if sum(len(layer) for layer in bfs.layers) != len(verts):
            raise PreconditionError("graph is disconnected; diameter is undefined")
        ecc[v] = bfs.height
    return ecc


def diameter(g: Graph, within: Iterable[int] | None = None) -> int:
    return max(eccentricities(g, within).values())


def induced_components(g: Graph, d: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of ``G[d]`` ordered by smallest member."""
    remaining = set(d)
    allowed = frozenset(remaining)
    comps = []
    for v in sorted(allowed):
        if v not in remaining:
            continue
        comp = bfs_layering(g, v, allowed).reached()
        remaining -= comp
        comps.append(comp)
    return comps


def components(g: Graph) -> list[frozenset[int]]:
    return induced_components(g, g.vertices)


def is_connected_set(g: Graph, d: Iterable[int]) -> bool:
    """True iff ``G[d]`` is connected and non-empty."""
    d = frozenset(d)
    if not d:
        return False
    return bfs_layering(g, min(d), d).reached() == d


def component_of(g: Graph, d: Iterable[int], v: int) -> frozenset[int]:
    """The component of ``G[d]`` containing ``v`` (empty if ``v`` is not in ``d``)."""
    d = frozenset(d)
    if v not in d:
        return frozenset()
    return bfs_layering(g, v, d).reached()


# -- text I/O -------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-list format.

    Lines starting with ``#`` and blank lines are ignored.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise GraphFormatError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise GraphFormatError("negative header value", lineno)
            header = (n, m)
            continue
        n = header[0]
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range in edge ({u}, {v}); n={n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- generators -----------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    if leaves < 1:
        raise PreconditionError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def fan_graph(n: int) -> Graph:
    """Hub 0 joined to every vertex of the path ``1-2-...-(n-1)``."""
    if n < 3:
        raise PreconditionError("fan needs n >= 3")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, edges)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise PreconditionError("both sides must be non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise PreconditionError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def grid_graph(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise PreconditionError("grid dimensions must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise PreconditionError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_regular_graph(n: int, r: int, seed: int, max_tries: int = 1000) -> Graph:
    """Random ``r``-regular graph: pair free stubs one edge at a time, restarting on a dead end."""
    if n * r % 2:
        raise PreconditionError("n * r must be even")
    if not 0 <= r < n:
        raise PreconditionError("need 0 <= r < n")
    rng = random.Random(seed)
    for _ in range(max_tries):
        free = {v: r for v in range(n)}
        edges: set[tuple[int, int]] = set()
        while free:
            open_ = sorted(free)
            options = [(u, v) for i, u in enumerate(open_) for v in open_[i + 1 :] if (u, v) not in edges]
            if not options:
                break
            weights = [free[u] * free[v] for u, v in options]
            u, v = rng.choices(options, weights)[0]
            edges.add((u, v))
            for x in (u, v):
                free[x] -= 1
                if not free[x]:
                    del free[x]
        if not free:
            return Graph(n, sorted(edges))
    raise PreconditionError(f"no simple {r}-regular graph on {n} vertices found in {max_tries} tries")


FAMILIES = {
    "cycle": cycle_graph,
    "path": path_graph,
    "star": star_graph,
    "fan": fan_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite_graph,
    "grid": grid_graph,
    "gnp": gnp_graph,
    "random_regular": random_regular_graph,
}
RANDOM_FAMILIES = frozenset({"gnp", "random_regular"})


def generate(family: str, params: Sequence[float], seed: int | None = None) -> Graph:
    """Build a graph from a named family; random families require ``seed``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise PreconditionError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    args = list(params)
    if family == "gnp":
        if len(args) != 2:
            raise PreconditionError("gnp takes (n, p)")
        args = [int(args[0]), float(args[1])]
    else:
        if any(float(a) != int(a) for a in args):
            raise PreconditionError(f"{family} takes integer parameters")
        args = [int(a) for a in args]
    if family in RANDOM_FAMILIES:
        if seed is None:
            raise PreconditionError(f"{family} requires an explicit seed")
        args.append(seed)
    try:
        return builder(*args)
    except TypeError:
        raise PreconditionError(f"wrong number of parameters for {family}") from None
