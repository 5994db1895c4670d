"""
Result data structures for labeling searches and theorem checks.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..constants.checks import SearchMode, SearchScope
from .funcmap import TreeFunc
from .lattice import LatticePoint
from .perm import Perm


@dataclass(frozen=True)
class SumProfile:
    """Additive edge labels of a rooted functional tree under its current labeling."""
    n: int
    sums: Tuple[int, ...]            # sorted multiset of i + f(i) mod n over all i
    nonloop_sums: Tuple[int, ...]    # same with the root removed
    distinct_count: int
    nonloop_distinct_count: int
    missing: Optional[int] = None    # the absent residue when the n-1 tree sums are distinct


@dataclass(frozen=True)
class LabelSearchResult:
    """
    Outcome of a labeling search.

    ``achieved`` is the distinct-label count of conjugate(t, best_sigma) under
    ``scope``; heuristic results set ``is_bound`` since they only bound the maximum.
    """
    best_sigma: Perm
    achieved: int
    scope: SearchScope
    missing: Optional[int] = None
    mode: SearchMode = SearchMode.EXACT
    is_bound: bool = False


@dataclass(frozen=True)
class TauReport:
    labels: Tuple[int, ...]          # sorted multiset tau(f(i), i)
    zen: bool
    witness: Optional[Perm] = None


@dataclass(frozen=True)
class TheoremResult:
    """
    Both routes to a harmonious rerooting of one tree.

    direct_*: first k (root first) whose rerooted tree has a harmonious labeling.
    completion_*: near-harmonious labeling completed by moving the loop to x with 2x = l.
    """
    tree: TreeFunc
    nonloop_max: int
    direct_k: Optional[int] = None
    direct_sigma: Optional[Perm] = None
    completion_k: Optional[int] = None
    completion_sigma: Optional[Perm] = None
    completion_harmonious: bool = False

    @property
    def direct_ok(self) -> bool:
        return self.direct_k is not None

    @property
    def completion_ok(self) -> bool:
        return self.completion_k is not None and self.completion_harmonious

    @property
    def strategy_agreement(self) -> bool:
        return self.direct_ok and self.completion_ok

    @property
    def k(self) -> Optional[int]:
        return self.direct_k if self.direct_ok else self.completion_k

    @property
    def sigma(self) -> Optional[Perm]:
        return self.direct_sigma if self.direct_ok else self.completion_sigma


@dataclass(frozen=True)
class CompositionReport:
    """Premise and conclusion of the composition lemma for one tree f and its square."""
    n: int
    aut_order: int
    squared_aut_order: int
    nonloop_max: int
    squared_nonloop_max: int

    @property
    def strict_growth(self) -> bool:
        # Aut(G_f) is a subgroup of Aut(G_{f^2}); a larger order means proper containment
        return self.squared_aut_order > self.aut_order

    @property
    def premise(self) -> bool:
        return self.strict_growth and self.squared_nonloop_max == self.n - 1

    @property
    def conclusion(self) -> bool:
        return self.nonloop_max >= self.squared_nonloop_max

    @property
    def implication_holds(self) -> bool:
        return (not self.premise) or self.conclusion


@dataclass(frozen=True)
class CertificateResult:
    """Determinantal certificate of one tree next to the search it is equivalent to."""
    tree: TreeFunc
    certified: bool
    witness: Optional[LatticePoint]
    nonloop_max: int

    @property
    def agrees(self) -> bool:
        return self.certified == (self.nonloop_max == self.tree.n - 1)
