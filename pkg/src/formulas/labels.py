"""
Additive edge labels for HarmoniTree.

Contains the induced edge-sum profile of a functional tree, the harmonious
predicate, translations of maps, the harmonious expansion of a labeling and
general tau-induced labels.
"""

from collections import Counter
from typing import AbstractSet, Callable, Sequence, Union

from ..constants.limits import EXHAUSTIVE_CAP
from ..models.errors import LimitExceededError, NotHarmoniousError, PermutationError
from ..models.funcmap import FuncMap, TreeFunc
from ..models.perm import Perm
from ..models.results import SumProfile, TauReport
from .perms import coset_transversal
from .zmod import conjugate


def edge_sums(t: TreeFunc) -> SumProfile:
    """
    Induced additive labels f(i) + i mod n.

    The root loop contributes 2 * root to the full sums only.

    Returns:
        SumProfile with sorted sum multisets, distinct counts and the missing
        residue when the n-1 tree sums are pairwise distinct
    """
    n = t.n
    table = t.table
    sums = [(table[i] + i) % n for i in range(n)]
    nonloop = [sums[i] for i in range(n) if i != t.root]
    nonloop_distinct = len(set(nonloop))

    missing = None
    if nonloop_distinct == n - 1:
        (missing,) = set(range(n)) - set(nonloop)

    return SumProfile(
        n=n,
        sums=tuple(sorted(sums)),
        nonloop_sums=tuple(sorted(nonloop)),
        distinct_count=len(set(sums)),
        nonloop_distinct_count=nonloop_distinct,
        missing=missing,
    )


def distinct_sum_count(g: Union[FuncMap, TreeFunc], excluded: AbstractSet[int] = frozenset()) -> int:
    """
    Number of distinct labels g(i) + i over i in Z_n minus the excluded set.

    Works for any map, including translates that are no longer tree-functions.
    """
    n = len(g.table)
    return len({(v + i) % n for i, v in enumerate(g.table) if i not in excluded})


def is_harmonious(t: TreeFunc) -> bool:
    """True iff the n full edge sums are pairwise distinct."""
    return distinct_sum_count(t) == t.n


def labeled_sums(t: TreeFunc, labels: Sequence[int]) -> list:
    """Edge sums labels[i] + labels[f(i)] mod n under a vertex labeling, in vertex order."""
    n = t.n
    return [(labels[i] + labels[t.table[i]]) % n for i in range(n)]


def right_translate(g: Union[FuncMap, TreeFunc], c: int) -> FuncMap:
    """i -> g(i + c mod n)."""
    n = len(g.table)
    table = g.table
    return FuncMap(n, tuple(table[(i + c) % n] for i in range(n)))


def left_translate(g: Union[FuncMap, TreeFunc], c: int) -> FuncMap:
    """i -> g(i) + c mod n."""
    n = len(g.table)
    return FuncMap(n, tuple((v + c) % n for v in g.table))


def right_translate_exclusion(excluded: AbstractSet[int], c: int, n: int) -> frozenset:
    """
    Excluded set that right translation by c carries T to.

    The label of i under g(. + c) is the label of i + c under g shifted by -c, so the
    vertex set T moves to T - c.
    """
    return frozenset((x - c) % n for x in excluded)


def expansion_decompose(t: TreeFunc, sigma: Perm) -> Perm:
    """
    Harmonious expansion of a labeling.

    Args:
        t: Tree-function f
        sigma: Labeling whose conjugate g = sigma f sigma^-1 is harmonious

    Returns:
        The permutation gamma(i) = g(i) + i

    Raises:
        NotHarmoniousError: if the conjugate is not harmonious
    """
    g = conjugate(t, sigma)
    n = t.n
    values = tuple((g.table[i] + i) % n for i in range(n))
    try:
        return Perm(n, values)
    except PermutationError as e:
        raise NotHarmoniousError(
            f"Labeling {sigma.code} of {t.code} is not harmonious: {e}") from e


def expansion_reconstruct(gamma: Perm, sigma: Perm) -> FuncMap:
    """Rebuild f(i) = sigma^-1(gamma(sigma(i)) - sigma(i))."""
    n = gamma.n
    s, s_inv, gt = sigma.table, sigma.inverse, gamma.table
    return FuncMap(n, tuple(s_inv[(gt[s[i]] - s[i]) % n] for i in range(n)))


def tau_labels(t: TreeFunc, tau: Union[Sequence[Sequence[int]], Callable[[int, int], int]],
               search: bool = True) -> TauReport:
    """
    General tau-induced labels tau(f(i), i).

    Args:
        t: Tree-function
        tau: n x n table (tau[a][b]) or a callable tau(a, b) with values in Z_n
        search: Whether to look for a relabeling making the labels all of Z_n

    Returns:
        TauReport with the sorted label multiset, the zen flag and its witness

    Raises:
        LimitExceededError: if the zen search is requested above EXHAUSTIVE_CAP
    """
    n = t.n
    if callable(tau):
        lookup = tau
    else:
        lookup = lambda a, b: tau[a][b]

    labels = tuple(sorted(lookup(t.table[i], i) % n for i in range(n)))
    if not search:
        return TauReport(labels=labels, zen=False)
    if n > EXHAUSTIVE_CAP:
        raise LimitExceededError("Tau zen search", n, EXHAUSTIVE_CAP)

    everything = set(range(n))
    for sigma in coset_transversal(t):
        g = conjugate(t, sigma)
        if {lookup(g.table[i], i) % n for i in range(n)} == everything:
            return TauReport(labels=labels, zen=True, witness=sigma)
    return TauReport(labels=labels, zen=False)


def count_harmonious_permutations(n: int) -> int:
    """
    Number of permutations gamma of Z_n whose sums gamma(i) + i also cover Z_n.

    Zero for even n; always divisible by n.

    Raises:
        LimitExceededError: if n exceeds EXHAUSTIVE_CAP
    """
    if n > EXHAUSTIVE_CAP:
        raise LimitExceededError("Harmonious permutation count", n, EXHAUSTIVE_CAP)
    used_values = [False] * n
    used_sums = [False] * n

    def extend(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for v in range(n):
            s = (v + i) % n
            if used_values[v] or used_sums[s]:
                continue
            used_values[v] = used_sums[s] = True
            total += extend(i + 1)
            used_values[v] = used_sums[s] = False
        return total

    return extend(0)


def sum_multiset(t: TreeFunc, labels: Sequence[int], include_loop: bool = False) -> Counter:
    """Multiset of edge sums under a labeling, optionally with the loop."""
    sums = labeled_sums(t, labels)
    return Counter(s for i, s in enumerate(sums) if include_loop or i != t.root)
