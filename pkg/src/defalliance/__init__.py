"""Defensive alliances: predicates, greedy minimizers, kernel rules, exact and FPT solvers."""

from .errors import BudgetExceeded, GraphFormatError, NotAnAllianceError, PreconditionError
from .graph import (
    BfsLayering,
    Graph,
    bfs_layering,
    components,
    diameter,
    generate,
    induced_components,
    parse_graph,
    serialize_graph,
)
from .kernel import (
    Certificate,
    DegreeRuleState,
    Inconclusive,
    Reduced,
    VerifiedYes,
    compose_disjoint,
    degree_rule,
    diameter_rule,
    kernelize,
)
from .minimize import MinimizeTrace, algorithm1, algorithm2, peel_to_alliance, removable
from .predicates import (
    ProtectionReport,
    ProtectionStatus,
    crucial_set,
    is_connected_locally_minimal,
    is_defensive_alliance,
    is_globally_minimal,
    is_locally_minimal,
    is_strong_defensive_alliance,
    protection_report,
)
from .reduction import ExtensionInstance, clique_to_extension, verify_reduction
from .solvers import (
    SolveResult,
    exact_extension,
    exact_max_connected_lmda,
    exact_max_lmda,
    fpt_connected_lmda,
)

__version__ = "0.1.0"

__all__ = [
    "algorithm1",
    "algorithm2",
    "bfs_layering",
    "BfsLayering",
    "BudgetExceeded",
    "Certificate",
    "clique_to_extension",
    "components",
    "compose_disjoint",
    "crucial_set",
    "degree_rule",
    "DegreeRuleState",
    "diameter",
    "diameter_rule",
    "exact_extension",
    "exact_max_connected_lmda",
    "exact_max_lmda",
    "ExtensionInstance",
    "fpt_connected_lmda",
    "generate",
    "Graph",
    "GraphFormatError",
    "Inconclusive",
    "induced_components",
    "is_connected_locally_minimal",
    "is_defensive_alliance",
    "is_globally_minimal",
    "is_locally_minimal",
    "is_strong_defensive_alliance",
    "kernelize",
    "MinimizeTrace",
    "NotAnAllianceError",
    "parse_graph",
    "peel_to_alliance",
    "PreconditionError",
    "protection_report",
    "ProtectionReport",
    "ProtectionStatus",
    "Reduced",
    "removable",
    "serialize_graph",
    "SolveResult",
    "VerifiedYes",
    "verify_reduction",
]
