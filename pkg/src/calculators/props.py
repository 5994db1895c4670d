"""
Structural property checks for HarmoniTree.

Translation invariance of distinct-sum counts, swap-sink invariants, the harmonious
expansion round trip, the composition lemma and the automorphism-growth witness,
bundled per tree for campaigns.
"""

from dataclasses import dataclass
from typing import List, Optional

from ..constants.checks import SearchScope
from ..formulas.labels import (distinct_sum_count, expansion_decompose, expansion_reconstruct,
                               left_translate, right_translate, right_translate_exclusion,
                               sum_multiset)
from ..formulas.zmod import swap_sink, undirected_edges
from ..models.funcmap import TreeFunc
from .exact import ExactLabelSearch
from .theorem import aut_growth_witness, composition_lemma_check


@dataclass(frozen=True)
class PropsReport:
    tree: TreeFunc
    translations_ok: bool
    swap_sink_ok: bool
    expansion_ok: Optional[bool]   # None when t itself has no harmonious labeling
    composition_ok: bool
    aut_growth_k: Optional[int]

    @property
    def aut_growth_ok(self) -> bool:
        return self.tree.n < 3 or self.aut_growth_k is not None

    @property
    def ok(self) -> bool:
        return (self.translations_ok and self.swap_sink_ok and self.expansion_ok is not False
                and self.composition_ok and self.aut_growth_ok)

    def problems(self) -> List[str]:
        names = []
        if not self.translations_ok:
            names.append('translations')
        if not self.swap_sink_ok:
            names.append('swap_sink')
        if self.expansion_ok is False:
            names.append('expansion')
        if not self.composition_ok:
            names.append('composition')
        if not self.aut_growth_ok:
            names.append('aut_growth')
        return names


def translation_invariance(t: TreeFunc) -> bool:
    """
    Right and left translation by every c keep the full and non-loop distinct-sum counts.

    Right translation moves the excluded root r to r - c; left translation keeps it.
    """
    n = t.n
    excluded = frozenset((t.root,))
    full = distinct_sum_count(t)
    nonloop = distinct_sum_count(t, excluded)
    for c in range(n):
        right = right_translate(t, c)
        left = left_translate(t, c)
        if distinct_sum_count(right) != full or distinct_sum_count(left) != full:
            return False
        if distinct_sum_count(right, right_translate_exclusion(excluded, c, n)) != nonloop:
            return False
        if distinct_sum_count(left, excluded) != nonloop:
            return False
    return True


def swap_sink_invariance(t: TreeFunc, search: ExactLabelSearch = None) -> bool:
    """
    For every k, swap_sink(t, k) keeps the undirected tree, the non-loop sum multiset
    under a fixed labeling and the NONLOOP maximum, and swapping back restores t.
    """
    search = search or ExactLabelSearch()
    identity = list(range(t.n))
    edges = undirected_edges(t)
    sums = sum_multiset(t, identity)
    best = search.search(t, SearchScope.NONLOOP).achieved
    for k in range(t.n):
        rerooted = swap_sink(t, k)
        if undirected_edges(rerooted) != edges or sum_multiset(rerooted, identity) != sums:
            return False
        if swap_sink(rerooted, t.root) != t:
            return False
        if search.search(rerooted, SearchScope.NONLOOP).achieved != best:
            return False
    return True


def expansion_round_trip(t: TreeFunc, search: ExactLabelSearch = None) -> Optional[bool]:
    """Decompose the optimal FULL labeling and rebuild t; None if t has no harmonious labeling."""
    search = search or ExactLabelSearch()
    result = search.search(t, SearchScope.FULL)
    if result.achieved != t.n:
        return None
    gamma = expansion_decompose(t, result.best_sigma)
    return expansion_reconstruct(gamma, result.best_sigma) == t.underlying


def props_check(t: TreeFunc, search: ExactLabelSearch = None) -> PropsReport:
    search = search or ExactLabelSearch()
    return PropsReport(
        tree=t,
        translations_ok=translation_invariance(t),
        swap_sink_ok=swap_sink_invariance(t, search),
        expansion_ok=expansion_round_trip(t, search),
        composition_ok=composition_lemma_check(t, search).implication_holds,
        aut_growth_k=aut_growth_witness(t),
    )
