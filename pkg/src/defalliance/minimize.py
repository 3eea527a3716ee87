"""Greedy reduction of a defensive alliance to a locally minimal one.

``algorithm1`` sweeps over the members, dropping any vertex all of whose
in-set neighbours are overprotected, and repeats the sweep until nothing more
can go: a single sweep is not enough, because a marginal vertex that justified
keeping an earlier neighbour may itself be dropped later in the sweep.
``algorithm2`` makes one sweep while holding a pivot vertex back, tries the
pivot, then finishes with ``algorithm1``. ``peel_to_alliance`` shrinks an
arbitrary set to the largest defensive alliance it contains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotAnAllianceError, PreconditionError
from .graph import Graph
from .predicates import is_defensive_alliance, slack


@dataclass(frozen=True)
class Step:
    removed: int
    reason: tuple[int, ...]  # in-set neighbours, all overprotected at removal time
    slack_snapshot: dict[int, int] = field(compare=False)
    sweep: int = 0


@dataclass
class MinimizeTrace:
    initial: frozenset[int]
    steps: list[Step] = field(default_factory=list)
    final: frozenset[int] = frozenset()
    sweeps: int = 0

    def replay(self) -> frozenset[int]:
        current = set(self.initial)
        for step in self.steps:
            current.remove(step.removed)
        return frozenset(current)

    def to_text(self) -> str:
        lines = []
        for step in self.steps:
            reason = " ".join(str(u) for u in step.reason) or "-"
            lines.append(f"removed {step.removed} reason {reason}")
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dict(self) -> dict:
        return {
            "initial": sorted(self.initial),
            "steps": [
                {
                    "removed": s.removed,
                    "reason": list(s.reason),
                    "slack": {str(u): s.slack_snapshot[u] for u in s.reason},
                }
                for s in self.steps
            ],
            "final": sorted(self.final),
            "sweeps": self.sweeps,
        }


def ordered(members: Iterable[int], order: str | Sequence[int] = "asc") -> list[int]:
    """Apply an iteration-order policy: ``asc``, ``desc``, ``seed:N`` or an explicit sequence."""
    base = sorted(members)
    if not isinstance(order, str):
        rank = {v: i for i, v in enumerate(order)}
        missing = [v for v in base if v not in rank]
        if missing:
            raise PreconditionError(f"explicit order omits members {missing}")
        return sorted(base, key=rank.__getitem__)
    if order == "asc":
        return base
    if order == "desc":
        return base[::-1]
    if order.startswith("seed:"):
        try:
            seed = int(order[5:])
        except ValueError:
            raise PreconditionError(f"bad order policy {order!r}") from None
        random.Random(seed).shuffle(base)
        return base
    raise PreconditionError(f"unknown order policy {order!r}")


class _Shrinker:
    """Mutable working set with incremental in-set degrees."""

    def __init__(self, g: Graph, d: frozenset[int], trace: MinimizeTrace):
        self.g = g
        self.current = set(d)
        self.inside = {v: sum(1 for u in g.adjacency[v] if u in self.current) for v in d}
        self.trace = trace

    def slack(self, v: int) -> int:
        return 2 * self.inside[v] + 1 - self.g.degree(v)

    def in_nbrs(self, u: int) -> list[int]:
        return [w for w in self.g.adjacency[u] if w in self.current]

    def try_remove(self, u: int) -> bool:
        if len(self.current) <= 1:
            return False
        nbrs = self.in_nbrs(u)
        slacks = {w: self.slack(w) for w in nbrs}
        # in-set neighbours always have u inside, so overprotected means slack >= 2
        if any(s < 2 for s in slacks.values()):
            return False
        self.current.remove(u)
        for w in nbrs:
            self.inside[w] -= 1
        self.trace.steps.append(Step(u, tuple(nbrs), slacks, self.trace.sweeps))
        return True

    def sweep(self, members: Iterable[int]) -> int:
        self.trace.sweeps += 1
        removed = 0
        for u in members:
            if u in self.current and self.try_remove(u):
                removed += 1
        return removed

    def exhaust(self, members: Sequence[int]) -> None:
        """Sweep in the given order until a sweep removes nothing."""
        while self.sweep(members):
            pass


def _require_alliance(g: Graph, d: Iterable[int]) -> frozenset[int]:
    d = g.vertex_set(d)
    if not is_defensive_alliance(g, d):
        raise NotAnAllianceError("input set is not a defensive alliance")
    return d


def removable(g: Graph, d: Iterable[int], u: int) -> bool:
    """True iff ``d - {u}`` is still a defensive alliance."""
    d = _require_alliance(g, d)
    if u not in d:
        raise PreconditionError(f"vertex {u} is not a member of the set")
    if len(d) <= 1:
        return False
    return all(slack(g, d, w) >= 2 for w in g.adjacency[u] if w in d)


def algorithm1(
    g: Graph, d: Iterable[int], order: str | Sequence[int] = "asc"
) -> tuple[frozenset[int], MinimizeTrace]:
    d = _require_alliance(g, d)
    trace = MinimizeTrace(initial=d)
    shrinker = _Shrinker(g, d, trace)
    shrinker.exhaust(ordered(d, order))
    trace.final = frozenset(shrinker.current)
    return trace.final, trace


@dataclass(frozen=True)
class PivotRun:
    """Intermediate sets of one ``algorithm2`` run."""

    pivot: int
    after_pass: frozenset[int]  # before the pivot is considered
    pivot_removed: bool
    result: frozenset[int]
    trace: MinimizeTrace

    @property
    def without_pivot(self) -> frozenset[int]:
        return self.after_pass - {self.pivot}


def pivot_run(g: Graph, d: Iterable[int], v: int, order: str | Sequence[int] = "asc") -> PivotRun:
    """``algorithm2`` exposing its intermediate sets."""
    d = _require_alliance(g, d)
    if v not in d:
        raise PreconditionError(f"pivot {v} is not a member of the set")
    trace = MinimizeTrace(initial=d)
    shrinker = _Shrinker(g, d, trace)
    sequence = ordered(d, order)
    shrinker.sweep([u for u in sequence if u != v])
    after_pass = frozenset(shrinker.current)
    pivot_removed = shrinker.try_remove(v)
    shrinker.exhaust(sequence)
    trace.final = frozenset(shrinker.current)
    return PivotRun(v, after_pass, pivot_removed, trace.final, trace)


def algorithm2(
    g: Graph, d: Iterable[int], v: int, order: str | Sequence[int] = "asc"
) -> tuple[frozenset[int], MinimizeTrace]:
    run = pivot_run(g, d, v, order)
    return run.result, run.trace


def peel_to_alliance(g: Graph, x: Iterable[int], order: str | Sequence[int] | None = None) -> frozenset[int]:
    """Largest defensive alliance inside ``x`` (empty if there is none).

    Unprotected members are deleted until none remain; the fixpoint does not
    depend on deletion order, which ``order`` lets tests vary.
    """
    x = g.vertex_set(x)
    current = set(x)
    inside = {v: sum(1 for u in g.adjacency[v] if u in current) for v in x}

    def unprotected(v: int) -> bool:
        return 2 * inside[v] + 1 < g.degree(v)

    if order is None:
        stack = sorted((v for v in x if unprotected(v)), reverse=True)
        while stack:
            v = stack.pop()
            if v not in current:
                continue
            current.remove(v)
            for w in g.adjacency[v]:
                if w in current:
                    inside[w] -= 1
                    if unprotected(w):
                        stack.append(w)
        return frozenset(current)

    # order-driven variant: each sweep removes the first unprotected member in policy order
    rank = ordered(x, order)
    while True:
        victim = next((v for v in rank if v in current and unprotected(v)), None)
        if victim is None:
            return frozenset(current)
        current.remove(victim)
        for w in g.adjacency[victim]:
            if w in current:
                inside[w] -= 1
