"""
Permutations and automorphism groups for HarmoniTree.

Contains lexicographic enumeration of S_n, the automorphism group of a functional
tree built from isomorphic sibling subtrees, and coset transversals of S_n / Aut.
"""

import itertools
import math
from collections import defaultdict, deque
from typing import Dict, Iterator, List, Tuple

from ..constants.limits import AUT_ELEMENT_LIMIT, PERMUTATION_CAP
from ..models.errors import LimitExceededError
from ..models.funcmap import TreeFunc
from ..models.perm import AutGroup, Perm
from .treegen import subtree_codes


def all_perms(n: int) -> Iterator[Perm]:
    """
    Lexicographic stream of all n! permutations of Z_n.

    Raises:
        LimitExceededError: if n exceeds PERMUTATION_CAP
    """
    if n < 1:
        raise ValueError(f"Permutation size must be positive, got {n}")
    if n > PERMUTATION_CAP:
        raise LimitExceededError("Permutation enumeration", n, PERMUTATION_CAP)
    for table in itertools.permutations(range(n)):
        yield Perm(n, table)


def _ordered_children(children, codes, v) -> List[int]:
    return sorted(children[v], key=lambda c: (codes[c], c))


def _subtree_isomorphism(children, codes, u: int, w: int, mapping: Dict[int, int]):
    # Pairs children of equal code in (code, index) order; codes of u and w are equal
    stack = [(u, w)]
    while stack:
        a, b = stack.pop()
        mapping[a] = b
        stack.extend(zip(_ordered_children(children, codes, a),
                         _ordered_children(children, codes, b)))


def _swap_generator(t: TreeFunc, children, codes, u: int, w: int) -> Perm:
    forward: Dict[int, int] = {}
    _subtree_isomorphism(children, codes, u, w, forward)
    table = list(range(t.n))
    for a, b in forward.items():
        table[a] = b
        table[b] = a
    return Perm(t.n, tuple(table))


def _close(generators: Tuple[Perm, ...], n: int) -> Tuple[Perm, ...]:
    identity = Perm.identity(n)
    seen = {identity.table: identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            nxt = g.compose(current)
            if nxt.table not in seen:
                seen[nxt.table] = nxt
                queue.append(nxt)
    return tuple(seen[key] for key in sorted(seen))


def automorphism_group(t: TreeFunc, with_elements: bool = True) -> AutGroup:
    """
    Automorphism group {sigma : sigma o f = f o sigma} of a functional tree.

    Generators swap adjacent isomorphic sibling subtrees; the order is the product of
    m! over every set of m pairwise isomorphic siblings. The element list is filled
    in (sorted by table) when the order is at most AUT_ELEMENT_LIMIT.

    Args:
        t: Tree-function
        with_elements: Set False when only the order and generators are needed

    Returns:
        AutGroup with generators, order and, when small, all elements
    """
    children = t.children()
    codes = subtree_codes(t)

    generators = []
    order = 1
    for v in range(t.n):
        groups = defaultdict(list)
        for c in children[v]:
            groups[codes[c]].append(c)
        for members in groups.values():
            members.sort()
            order *= math.factorial(len(members))
            for a, b in zip(members, members[1:]):
                generators.append(_swap_generator(t, children, codes, a, b))

    generators = tuple(generators)
    elements = None
    if with_elements and order <= AUT_ELEMENT_LIMIT:
        elements = _close(generators, t.n)
    return AutGroup(tree=t, generators=generators, order=order, elements=elements)


def coset_transversal(t: TreeFunc) -> Iterator[Perm]:
    """
    Lexicographically least member of every left coset sigma Aut(G_f) in S_n.

    sigma and tau share a left coset iff sigma f sigma^-1 = tau f tau^-1, so the
    conjugated table identifies the coset; S_n is scanned in lexicographic order.

    Raises:
        LimitExceededError: if n exceeds PERMUTATION_CAP
    """
    seen = set()
    f = t.table
    for sigma in all_perms(t.n):
        s, s_inv = sigma.table, sigma.inverse
        key = tuple(s[f[s_inv[i]]] for i in range(t.n))
        if key not in seen:
            seen.add(key)
            yield sigma
