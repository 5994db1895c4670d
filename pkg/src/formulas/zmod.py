"""
Functional maps over Z/nZ for HarmoniTree.

Contains construction, iteration, the rooted-tree predicate, swap-sink rerooting
and conjugation of maps Z_n -> Z_n.
"""

from collections import Counter
from typing import List, Optional, Sequence, Tuple, Union

from ..models.errors import FuncMapError
from ..models.funcmap import EdgeList, FuncMap, TreeFunc
from ..models.perm import Perm


def make_func(n: int, table: Sequence[int]) -> FuncMap:
    """
    Build a validated map on Z_n.

    Args:
        n: Modulus (positive)
        table: Sequence of length n with entries in [0, n)

    Returns:
        FuncMap with table[i] = f(i)

    Raises:
        FuncMapError: if the length is wrong or an entry is out of range (names the index)
    """
    return FuncMap(n, tuple(table))


def _as_funcmap(f: Union[FuncMap, TreeFunc]) -> FuncMap:
    return f.underlying if isinstance(f, TreeFunc) else f


def iterate(f: Union[FuncMap, TreeFunc], k: int) -> FuncMap:
    """
    Compute the k-fold iterate f^(k), with f^(0) the identity.

    Plain repeated composition up to k = n; binary exponentiation beyond.
    """
    if k < 0:
        raise ValueError(f"Iterate count must be nonnegative, got {k}")
    fm = _as_funcmap(f)
    n = fm.n
    table = fm.table

    if k <= n:
        result = list(range(n))
        for _ in range(k):
            result = [table[v] for v in result]
        return FuncMap(n, tuple(result))

    result = list(range(n))
    base = list(table)
    while k:
        if k & 1:
            result = [base[v] for v in result]
        base = [base[v] for v in base]
        k >>= 1
    return FuncMap(n, tuple(result))


def is_tree_func(f: Union[FuncMap, TreeFunc]) -> Tuple[bool, Optional[TreeFunc]]:
    """
    Test the collapse condition |f^(n-1)(Z_n)| = 1.

    Returns:
        (True, TreeFunc rooted at the single image vertex) or (False, None)
    """
    if isinstance(f, TreeFunc):
        return True, f
    image = iterate(f, f.n - 1).image()
    if len(image) != 1:
        return False, None
    (root,) = image
    return True, TreeFunc(f, root)


def swap_sink(t: TreeFunc, k: int) -> TreeFunc:
    """
    Reroot a functional tree at vertex k.

    The path k = p_0, p_1 = f(p_0), ..., p_m = root is reversed: p_0 becomes the new
    loop and p_j maps to p_(j-1). All other vertices keep their parent.

    Raises:
        FuncMapError: if k is not a vertex
    """
    n = t.n
    if not 0 <= k < n:
        raise FuncMapError(f"Vertex {k} out of range [0, {n})", k)
    if k == t.root:
        return t

    table = list(t.table)
    path = [k]
    while path[-1] != t.root:
        path.append(t.table[path[-1]])

    table[k] = k
    for j in range(1, len(path)):
        table[path[j]] = path[j - 1]
    return TreeFunc(FuncMap(n, tuple(table)), k)


def conjugate(f: Union[FuncMap, TreeFunc], sigma: Perm) -> Union[FuncMap, TreeFunc]:
    """
    Relabel a map by a permutation: i -> sigma(f(sigma^-1(i))).

    A TreeFunc stays a TreeFunc, rooted at sigma(root).
    """
    fm = _as_funcmap(f)
    if sigma.n != fm.n:
        raise FuncMapError(f"Permutation on {sigma.n} points cannot relabel a map on Z_{fm.n}")
    s, s_inv, table = sigma.table, sigma.inverse, fm.table
    result = FuncMap(fm.n, tuple(s[table[s_inv[i]]] for i in range(fm.n)))
    if isinstance(f, TreeFunc):
        return TreeFunc(result, s[f.root])
    return result


def edge_list(f: Union[FuncMap, TreeFunc]) -> EdgeList:
    """The ordered pairs (i, f(i)) of the functional digraph."""
    fm = _as_funcmap(f)
    return EdgeList(tuple((i, v) for i, v in enumerate(fm.table)))


def square(t: TreeFunc) -> TreeFunc:
    """f o f; a tree-function again, with the same root."""
    table = t.table
    return TreeFunc(FuncMap(t.n, tuple(table[v] for v in table)), t.root)


def squaring_chain(t: TreeFunc) -> List[TreeFunc]:
    """
    Repeated squares t, t^2, t^4, ... up to the first constant map.

    The chain has at most ceil(log2(n-1)) + 1 entries for n >= 2.
    """
    chain = [t]
    while len(set(chain[-1].table)) > 1:
        chain.append(square(chain[-1]))
    return chain


def undirected_edges(t: TreeFunc) -> Counter:
    """Multiset of unordered tree edges {i, f(i)}, the root loop excluded."""
    return Counter(frozenset((i, t.table[i])) for i in t.non_root())


def undirected_degree(t: TreeFunc) -> Tuple[int, ...]:
    """Degree of each vertex in the underlying undirected tree."""
    degree = [0] * t.n
    for i in t.non_root():
        degree[i] += 1
        degree[t.table[i]] += 1
    return tuple(degree)
