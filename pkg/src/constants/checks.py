"""
Enumerations shared across HarmoniTree.

Search scopes and modes, factor kinds and campaign check identifiers.
"""

from enum import Enum


class SearchScope(Enum):
    """Which additive edge labels a labeling search counts."""
    FULL = "full"          # all n edges including the root loop
    NONLOOP = "nonloop"    # the n-1 tree edges


class SearchMode(Enum):
    """Exact branch-and-bound or randomized lower bound."""
    EXACT = "exact"
    HEURISTIC = "heuristic"


class FactorKind(Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class FactorKeying(Enum):
    """How edge factors are compared when relabeling variables."""
    ORDERED = "ordered"      # {(f(i), i), (f(j), j)}
    MONOMIAL = "monomial"    # {{f(i), i}, {f(j), j}}


class CheckId:
    """Campaign check identifiers (the values accepted by --checks)."""
    SUMMARY = 'summary'
    THEOREM = 'theorem'
    CERT = 'cert'
    STABILIZER = 'stabilizer'
    DIVISIBILITY = 'divisibility'
    PROPS = 'props'
    TELESCOPE = 'telescope'


ALL_CHECKS = (
    CheckId.THEOREM,
    CheckId.CERT,
    CheckId.STABILIZER,
    CheckId.DIVISIBILITY,
    CheckId.PROPS,
    CheckId.TELESCOPE,
)
