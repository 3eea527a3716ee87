"""Defensive-alliance predicates and per-member protection analysis.

For a member ``v`` of a set ``D``: defenders are ``v`` itself plus its
neighbours in ``D``; attackers are its neighbours outside ``D``. The slack
``defenders - attackers`` equals ``2 * d_D(v) + 1 - d(v)``, so moving a single
in-set neighbour out of ``D`` lowers it by exactly two.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import NotAnAllianceError, PreconditionError
from .graph import Graph, is_connected_set

DEFAULT_GLOBAL_LIMIT = 20


class ProtectionStatus(str, Enum):
    UNPROTECTED = "unprotected"
    MARGINAL = "marginally_protected"
    OVERPROTECTED = "overprotected"


@dataclass(frozen=True)
class MemberProtection:
    defenders: int
    attackers: int
    inside: int  # d_D(v)

    @property
    def slack(self) -> int:
        return self.defenders - self.attackers

    @property
    def status(self) -> ProtectionStatus:
        return classify(self.slack, self.inside)

    @property
    def degenerate(self) -> bool:
        """Protected member with no in-set neighbour (overprotected vacuously)."""
        return self.inside == 0 and self.slack >= 0


@dataclass(frozen=True)
class ProtectionReport:
    members: frozenset[int]
    records: dict[int, MemberProtection]

    def status(self, v: int) -> ProtectionStatus:
        return self.records[v].status

    def slack(self, v: int) -> int:
        return self.records[v].slack

    @property
    def degenerate(self) -> list[int]:
        return sorted(v for v, r in self.records.items() if r.degenerate)

    def to_dict(self) -> dict:
        return {
            str(v): {
                "defenders": r.defenders,
                "attackers": r.attackers,
                "slack": r.slack,
                "status": r.status.value,
                "degenerate": r.degenerate,
            }
            for v, r in sorted(self.records.items())
        }


def classify(slack: int, inside: int) -> ProtectionStatus:
    if slack < 0:
        return ProtectionStatus.UNPROTECTED
    if slack >= 2 or inside == 0:
        return ProtectionStatus.OVERPROTECTED
    return ProtectionStatus.MARGINAL


def inside_degree(g: Graph, d: frozenset[int], v: int) -> int:
    return sum(1 for u in g.adjacency[v] if u in d)


def slack(g: Graph, d: frozenset[int], v: int) -> int:
    return 2 * inside_degree(g, d, v) + 1 - g.degree(v)


def is_marginal(g: Graph, d: frozenset[int], v: int) -> bool:
    inside = inside_degree(g, d, v)
    return classify(2 * inside + 1 - g.degree(v), inside) is ProtectionStatus.MARGINAL


def protection_report(g: Graph, d: Iterable[int]) -> ProtectionReport:
    d = g.vertex_set(d)
    if not d:
        raise PreconditionError("protection report needs a non-empty set")
    records = {}
    for v in sorted(d):
        inside = inside_degree(g, d, v)
        records[v] = MemberProtection(inside + 1, g.degree(v) - inside, inside)
    return ProtectionReport(d, records)


def is_defensive_alliance(g: Graph, d: Iterable[int]) -> bool:
    d = g.vertex_set(d)
    return bool(d) and all(slack(g, d, v) >= 0 for v in d)


def is_strong_defensive_alliance(g: Graph, d: Iterable[int]) -> bool:
    d = g.vertex_set(d)
    return bool(d) and all(2 * inside_degree(g, d, v) >= g.degree(v) for v in d)


def is_locally_minimal(g: Graph, d: Iterable[int]) -> bool:
    """Alliance such that no single-vertex removal leaves an alliance."""
    d = g.vertex_set(d)
    if not is_defensive_alliance(g, d):
        return False
    if len(d) == 1:
        return True
    marginal = {v for v in d if is_marginal(g, d, v)}
    return all(any(u in marginal for u in g.adjacency[v] if u in d) for v in d)


def is_locally_minimal_literal(g: Graph, d: Iterable[int]) -> bool:
    """Remove-each-member-and-recheck form of :func:`is_locally_minimal`."""
    d = g.vertex_set(d)
    return is_defensive_alliance(g, d) and not any(is_defensive_alliance(g, d - {v}) for v in d)


def is_connected_locally_minimal(g: Graph, d: Iterable[int]) -> bool:
    d = g.vertex_set(d)
    if not (is_defensive_alliance(g, d) and is_connected_set(g, d)):
        return False
    for v in d:
        rest = d - {v}
        if is_defensive_alliance(g, rest) and is_connected_set(g, rest):
            return False
    return True


def is_globally_minimal(g: Graph, d: Iterable[int], limit: int = DEFAULT_GLOBAL_LIMIT) -> bool:
    """Alliance none of whose proper non-empty subsets is an alliance.

    Every component of an alliance is itself an alliance, so only connected
    proper subsets are examined, smallest first.
    """
    d = g.vertex_set(d)
    if len(d) > limit:
        raise PreconditionError(f"set of size {len(d)} exceeds enumeration limit {limit}")
    if not is_defensive_alliance(g, d):
        return False
    members = sorted(d)
    for size in range(1, len(members)):
        for sub in combinations(members, size):
            sub = frozenset(sub)
            if is_connected_set(g, sub) and is_defensive_alliance(g, sub):
                return False
    return True


def crucial_set(g: Graph, d: Iterable[int]) -> frozenset[int]:
    """Members with a marginal in-set neighbour that itself has a marginal in-set neighbour."""
    d = g.vertex_set(d)
    if not is_defensive_alliance(g, d):
        raise NotAnAllianceError("crucial vertices are defined only for a defensive alliance")
    marginal = frozenset(v for v in d if is_marginal(g, d, v))
    # marginal vertices that themselves see a marginal neighbour
    anchored = frozenset(u for u in marginal if any(w in marginal for w in g.adjacency[u]))
    return frozenset(v for v in d if any(u in anchored for u in g.adjacency[v]))
