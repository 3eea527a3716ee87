"""Exact search for locally minimal defensive alliances.

The ``exact_*`` functions enumerate vertex subsets as bitmasks and serve as
oracles on small graphs. :func:`fpt_connected_lmda` is the guess-and-extend
procedure for connected alliances on graphs of bounded degree: it guesses how
a solution meets the first ``k+3`` BFS levels around a root, fills in the rest
of the graph, peels the result back to an alliance and minimizes it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BudgetExceeded, PreconditionError
from .graph import BfsLayering, Graph, bfs_layering, component_of, is_connected_set
from .minimize import algorithm1, peel_to_alliance
from .predicates import (
    crucial_set,
    is_connected_locally_minimal,
    is_marginal,
    slack,
)

DEFAULT_SIZE_LIMIT = 22
DEFAULT_BUDGET = 30


@dataclass
class SolveResult:
    decision: bool
    witness: frozenset[int] | None = None
    optimum: int | None = None
    candidates_examined: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "decision": "yes" if self.decision else "no",
            "optimum": self.optimum,
            "witness": None if self.witness is None else sorted(self.witness),
            "candidates_examined": self.candidates_examined,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


class _Masks:
    """Bitmask views of a graph for fast subset checks."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
        self.deg = [g.degree(v) for v in range(g.n)]

    @staticmethod
    def members(mask: int) -> Iterator[int]:
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def slack(self, mask: int, v: int) -> int:
        return 2 * (self.adj[v] & mask).bit_count() + 1 - self.deg[v]

    def is_alliance(self, mask: int) -> bool:
        return mask != 0 and all(self.slack(mask, v) >= 0 for v in self.members(mask))

    def is_connected(self, mask: int) -> bool:
        if not mask:
            return False
        seen = mask & -mask
        frontier = seen
        while frontier:
            grown = 0
            for v in self.members(frontier):
                grown |= self.adj[v]
            frontier = grown & mask & ~seen
            seen |= frontier
        return seen == mask

    def is_locally_minimal(self, mask: int) -> bool:
        if not self.is_alliance(mask):
            return False
        if mask & (mask - 1) == 0:
            return True
        marginal = 0
        for v in self.members(mask):
            s = self.slack(mask, v)
            if s <= 1 and self.adj[v] & mask:
                marginal |= 1 << v
        return all(self.adj[v] & marginal for v in self.members(mask))

    def is_connected_locally_minimal(self, mask: int) -> bool:
        if not (self.is_alliance(mask) and self.is_connected(mask)):
            return False
        for v in self.members(mask):
            rest = mask & ~(1 << v)
            if self.is_alliance(rest) and self.is_connected(rest):
                return False
        return True


def _to_set(mask: int) -> frozenset[int]:
    return frozenset(_Masks.members(mask))


def _check_limit(g: Graph, size_limit: int) -> None:
    if g.n > size_limit:
        raise PreconditionError(f"graph has {g.n} vertices; exhaustive search limit is {size_limit}")


def _exact_max(g: Graph, size_limit: int, connected: bool) -> SolveResult:
    _check_limit(g, size_limit)
    start = time.perf_counter()
    masks = _Masks(g)
    test = masks.is_connected_locally_minimal if connected else masks.is_locally_minimal
    examined = 0
    for size in range(g.n, 0, -1):
        # combinations() is lexicographic, so the first hit is the smallest optimum
        for combo in combinations(range(g.n), size):
            examined += 1
            mask = sum(1 << v for v in combo)
            if test(mask):
                return SolveResult(True, frozenset(combo), size, examined, time.perf_counter() - start)
    return SolveResult(False, None, 0, examined, time.perf_counter() - start)


def exact_max_lmda(g: Graph, size_limit: int = DEFAULT_SIZE_LIMIT) -> SolveResult:
    """Maximum locally minimal defensive alliance by exhaustive search."""
    return _exact_max(g, size_limit, connected=False)


def exact_max_connected_lmda(g: Graph, size_limit: int = DEFAULT_SIZE_LIMIT) -> SolveResult:
    """Maximum connected locally minimal defensive alliance by exhaustive search."""
    return _exact_max(g, size_limit, connected=True)


def exact_extension(g: Graph, s: Iterable[int], size_limit: int = DEFAULT_SIZE_LIMIT) -> SolveResult:
    """Is there a locally minimal defensive alliance containing ``s``?

    Supersets are tried by increasing size; the witness is the lexicographically
    smallest among the smallest ones.
    """
    _check_limit(g, size_limit)
    s = g.vertex_set(s)
    start = time.perf_counter()
    masks = _Masks(g)
    forced = sum(1 << v for v in s)
    free = [v for v in g.vertices if v not in s]
    examined = 0
    for extra in range(0, len(free) + 1):
        for combo in combinations(free, extra):
            examined += 1
            mask = forced | sum(1 << v for v in combo)
            if masks.is_locally_minimal(mask):
                return SolveResult(True, _to_set(mask), None, examined, time.perf_counter() - start)
    return SolveResult(False, None, None, examined, time.perf_counter() - start)


# -- bounded-degree procedure ------------------------------------------------


def _guesses(g: Graph, window: list[int], root: int, interior: frozenset[int]) -> Iterator[frozenset[int]]:
    """Subsets of ``window`` containing ``root``, pruned on protection.

    A chosen vertex whose neighbours all lie in ``window`` (the ``interior``)
    has the same slack in every extension, so once its neighbourhood is fully
    decided it must already be protected.
    """
    position = {v: i for i, v in enumerate(window)}
    # index after which every neighbour of v has been decided
    settled_at: dict[int, list[int]] = {}
    for v in interior:
        last = max([position[v]] + [position[u] for u in g.adjacency[v]])
        settled_at.setdefault(last, []).append(v)

    chosen: set[int] = set()

    def protected(v: int) -> bool:
        inside = sum(1 for u in g.adjacency[v] if u in chosen)
        return 2 * inside + 1 >= g.degree(v)

    def walk(i: int) -> Iterator[frozenset[int]]:
        if i == len(window):
            yield frozenset(chosen)
            return
        v = window[i]
        options = (True,) if v == root else (True, False)
        for take in options:
            if take:
                chosen.add(v)
            if all(w not in chosen or protected(w) for w in settled_at.get(i, ())):
                yield from walk(i + 1)
            if take:
                chosen.discard(v)

    yield from walk(0)


def _crucial_within(g: Graph, d: frozenset[int], targets: Iterable[int]) -> bool:
    """Every target is protected in ``d`` and crucial there."""
    marginal = frozenset(v for v in d if is_marginal(g, d, v))
    anchored = frozenset(u for u in marginal if any(w in marginal for w in g.adjacency[u]))
    return all(slack(g, d, x) >= 0 and any(u in anchored for u in g.adjacency[x]) for x in targets)


def extend_guess(g: Graph, guess: frozenset[int], root: int, k: int, bfs: BfsLayering) -> frozenset[int] | None:
    """Grow a guessed window intersection into a connected locally minimal alliance.

    ``guess`` is the candidate intersection of a solution with levels
    ``0..k+2`` of ``bfs`` (rooted at ``root``). Returns a verified witness of
    size >= k, or None when the guess is invalid or cannot be completed.
    """
    near = bfs.up_to(k + 2)
    low = bfs.up_to(k - 1)
    local = component_of(g, guess, root)
    if len(local) < k or not _crucial_within(g, local, guess & low):
        return None
    far = frozenset(g.vertices) - near
    grown = component_of(g, peel_to_alliance(g, guess | far), root)
    if not grown or grown & near != guess:
        return None
    if not grown & low <= crucial_set(g, grown):
        return None
    shrunk, _ = algorithm1(g, grown)
    witness = component_of(g, shrunk, root)
    if len(witness) >= k and is_connected_locally_minimal(g, witness):
        return witness
    return None


def fpt_connected_lmda(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Decide whether ``g`` has a connected locally minimal alliance of size >= k.

    Raises :class:`BudgetExceeded` when the first ``k+3`` BFS levels around
    some root hold more than ``budget`` vertices.
    """
    if k < 1:
        raise PreconditionError("k must be a positive integer")
    if g.n == 0 or not is_connected_set(g, g.vertices):
        raise PreconditionError("fpt_connected_lmda requires a connected graph")
    start = time.perf_counter()
    examined = 0

    for root in g.vertices:
        bfs = bfs_layering(g, root)
        depth = min(k + 2, bfs.height)
        window = [v for layer in bfs.layers[: depth + 1] for v in sorted(layer)]
        if len(window) > budget:
            sizes = [len(layer) for layer in bfs.layers[: depth + 1]]
            raise BudgetExceeded(
                f"root {root}: first {k + 3} BFS levels hold {len(window)} vertices "
                f"(layer sizes {sizes}) > budget {budget}"
            )
        near = frozenset(window)
        far = frozenset(g.vertices) - near
        interior = bfs.up_to(depth - 1) if far else near

        for guess in _guesses(g, window, root, interior):
            examined += 1
            local = component_of(g, guess, root)

            # a solution lying entirely in the window is checked directly
            if local == guess and len(guess) >= k and is_connected_locally_minimal(g, guess):
                return SolveResult(True, guess, None, examined, time.perf_counter() - start)
            if not far:
                continue
            witness = extend_guess(g, guess, root, k, bfs)
            if witness is not None:
                return SolveResult(True, witness, None, examined, time.perf_counter() - start)

    return SolveResult(False, None, None, examined, time.perf_counter() - start)


def has_clique(g: Graph, k: int) -> bool:
    """Exhaustive k-clique test, extending cliques in increasing vertex order."""
    if k <= 0:
        return True

    def extend(clique: list[int], candidates: list[int]) -> bool:
        if len(clique) == k:
            return True
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i < k:
                return False
            nxt = [u for u in candidates[i + 1 :] if g.has_edge(u, v)]
            if extend(clique + [v], nxt):
                return True
        return False

    return extend([], list(g.vertices))
