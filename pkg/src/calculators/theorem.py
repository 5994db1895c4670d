"""
Harmonious rerooting for HarmoniTree.

Contains the completion of a near-harmonious labeling by moving the loop, the HaL
set and its size, the two-strategy theorem check, the composition lemma and the
automorphism-growth witness.
"""

import logging
from typing import Iterator, Optional, Tuple

from ..constants.checks import SearchScope
from ..constants.limits import EXHAUSTIVE_CAP
from ..formulas.certificate import determinantal_certificate
from ..formulas.labels import is_harmonious
from ..formulas.perms import automorphism_group, coset_transversal
from ..formulas.zmod import conjugate, square, swap_sink, undirected_degree
from ..models.errors import LimitExceededError, PreconditionError, UnsupportedModulusError
from ..models.funcmap import TreeFunc
from ..models.perm import Perm
from ..models.results import (CertificateResult, CompositionReport, LabelSearchResult,
                              TheoremResult)
from .exact import ExactLabelSearch


def complete_near_harmonious(t: TreeFunc, witness: LabelSearchResult) -> Tuple[int, TreeFunc]:
    """
    Upgrade a near-harmonious labeling to a harmonious one by moving the loop.

    With l the residue missing from the n-1 tree sums, the loop goes to the vertex
    labeled x = l / 2 mod n; its sum 2x = l fills the gap and tree-edge sums do not
    depend on orientation.

    Args:
        t: Tree-function
        witness: NONLOOP search result with achieved = n-1

    Returns:
        (k, t2): k the vertex of t that becomes the root, t2 the relabeled rerooted
        tree conjugate(swap_sink(t, k), witness.best_sigma)

    Raises:
        UnsupportedModulusError: if n is even
        PreconditionError: if the witness is not near-harmonious
    """
    n = t.n
    if n % 2 == 0:
        raise UnsupportedModulusError(f"2 has no inverse modulo even n={n}")
    if witness.scope is not SearchScope.NONLOOP or witness.achieved != n - 1 or witness.missing is None:
        raise PreconditionError(
            f"Witness for {t.code} is not near-harmonious "
            f"(scope {witness.scope.value}, achieved {witness.achieved} of {n - 1})")

    sigma = witness.best_sigma
    x = (witness.missing * (n + 1) // 2) % n
    k = sigma.inverse[x]
    t2 = swap_sink(conjugate(t, sigma), x)
    return k, t2


def hal_enumerate(t: TreeFunc) -> Iterator[Tuple[Perm, TreeFunc]]:
    """
    Harmoniously labeled graphs isomorphic to t, one per coset of S_n / Aut(G_f).

    Raises:
        LimitExceededError: if n exceeds EXHAUSTIVE_CAP
    """
    if t.n > EXHAUSTIVE_CAP:
        raise LimitExceededError("HaL enumeration", t.n, EXHAUSTIVE_CAP)
    for sigma in coset_transversal(t):
        g = conjugate(t, sigma)
        if is_harmonious(g):
            yield sigma, g


def count_harmonious_labelings(t: TreeFunc) -> int:
    """Size of the HaL set; always a multiple of n."""
    return sum(1 for _ in hal_enumerate(t))


def theorem_check(t: TreeFunc, search: ExactLabelSearch = None) -> TheoremResult:
    """
    Find a rerooting of t with a harmonious labeling, by two independent routes.

    Direct: try k = root, then the other vertices in increasing order, with a FULL
    search on swap_sink(t, k). Completion: a NONLOOP search on t followed by
    complete_near_harmonious.

    Raises:
        UnsupportedModulusError: if n is even
        LimitExceededError: if n exceeds EXHAUSTIVE_CAP
    """
    n = t.n
    if n % 2 == 0:
        raise UnsupportedModulusError(f"Theorem check needs odd n, got {n}")
    if n > EXHAUSTIVE_CAP:
        raise LimitExceededError("Theorem check", n, EXHAUSTIVE_CAP)
    search = search or ExactLabelSearch()

    nonloop = search.search(t, SearchScope.NONLOOP)
    completion_k = completion_sigma = None
    completion_harmonious = False
    if nonloop.achieved == n - 1:
        completion_k, t2 = complete_near_harmonious(t, nonloop)
        completion_sigma = nonloop.best_sigma
        completion_harmonious = is_harmonious(t2)

    direct_k = direct_sigma = None
    for k in (t.root,) + tuple(v for v in range(n) if v != t.root):
        result = search.search(swap_sink(t, k), SearchScope.FULL)
        if result.achieved == n:
            direct_k, direct_sigma = k, result.best_sigma
            break

    report = TheoremResult(
        tree=t,
        nonloop_max=nonloop.achieved,
        direct_k=direct_k,
        direct_sigma=direct_sigma,
        completion_k=completion_k,
        completion_sigma=completion_sigma,
        completion_harmonious=completion_harmonious,
    )
    if not report.strategy_agreement:
        logging.warning(f"Strategies disagree on {t.code}: direct={report.direct_ok} "
                        f"completion={report.completion_ok}")
    return report


def certificate_check(t: TreeFunc, search: ExactLabelSearch = None) -> CertificateResult:
    """Determinantal certificate of t together with its NONLOOP maximum."""
    search = search or ExactLabelSearch()
    certified, witness = determinantal_certificate(t)
    nonloop = search.search(t, SearchScope.NONLOOP)
    return CertificateResult(tree=t, certified=certified, witness=witness,
                             nonloop_max=nonloop.achieved)


def composition_lemma_check(t: TreeFunc, search: ExactLabelSearch = None) -> CompositionReport:
    """
    Premise and conclusion of the composition lemma for f = t.

    Premise: Aut(G_f) is a proper subgroup of Aut(G_(f^2)) and f^2 has NONLOOP
    maximum n-1. Conclusion: the NONLOOP maximum of f is at least that of f^2.
    """
    search = search or ExactLabelSearch()
    t2 = square(t)
    return CompositionReport(
        n=t.n,
        aut_order=automorphism_group(t, with_elements=False).order,
        squared_aut_order=automorphism_group(t2, with_elements=False).order,
        nonloop_max=search.search(t, SearchScope.NONLOOP).achieved,
        squared_nonloop_max=search.search(t2, SearchScope.NONLOOP).achieved,
    )


def _distance_two_from_leaf(t: TreeFunc) -> Tuple[int, ...]:
    n = t.n
    degree = undirected_degree(t)
    neighbours = [set() for _ in range(n)]
    for i in t.non_root():
        neighbours[i].add(t.table[i])
        neighbours[t.table[i]].add(i)
    found = set()
    for leaf in (v for v in range(n) if degree[v] == 1):
        for middle in neighbours[leaf]:
            found.update(w for w in neighbours[middle] if w != leaf)
    return tuple(sorted(found))


def aut_growth_witness(t: TreeFunc) -> Optional[int]:
    """
    First vertex k at edge distance 2 from a leaf with Aut(S) a proper subgroup of Aut(S^2),
    S = swap_sink(t, k).

    Returns None when no such vertex exists, which only happens for n <= 2.
    """
    for k in _distance_two_from_leaf(t):
        rerooted = swap_sink(t, k)
        before = automorphism_group(rerooted, with_elements=False).order
        after = automorphism_group(square(rerooted), with_elements=False).order
        if before < after:
            return k
    return None
