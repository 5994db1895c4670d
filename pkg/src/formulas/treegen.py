"""
Rooted tree enumeration for HarmoniTree.

Canonical level sequences identify rooted trees up to isomorphism. Enumeration
walks the canonical sequences by successor steps instead of filtering all n^n maps.
"""

import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from ..constants.limits import ENUMERATION_CAP
from ..models.errors import FuncMapError, LimitExceededError
from ..models.funcmap import FuncMap, TreeFunc


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """
    Level sequence of a rooted tree in canonical preorder.

    Children are visited in decreasing order of their own canonical sequences, so
    the code is the lexicographically largest preorder level sequence of the tree.
    Depths are 0-based with the root at depth 0.
    """
    n: int
    code: Tuple[int, ...]

    @property
    def text(self) -> str:
        return f"{self.n}:" + ",".join(str(level) for level in self.code)

    def __str__(self) -> str:
        return self.text


def subtree_codes(t: TreeFunc) -> List[Tuple[int, ...]]:
    """
    Canonical level sequence of the subtree hanging from every vertex.

    Two vertices get equal sequences iff their subtrees are isomorphic as rooted trees.
    """
    depths = t.depths()
    children = t.children()
    codes: List[Tuple[int, ...]] = [()] * t.n
    for v in sorted(range(t.n), key=lambda u: -depths[u]):
        kid_codes = sorted((codes[c] for c in children[v]), reverse=True)
        seq = [0]
        for kc in kid_codes:
            seq.extend(level + 1 for level in kc)
        codes[v] = tuple(seq)
    return codes


def canonical_code(t: TreeFunc) -> CanonicalCode:
    """
    Isomorphism-invariant code of a rooted tree.

    Args:
        t: Tree-function

    Returns:
        CanonicalCode; equal codes iff the trees are conjugate by a permutation
    """
    return CanonicalCode(t.n, subtree_codes(t)[t.root])


def decode_level_sequence(levels: Sequence[int]) -> TreeFunc:
    """
    Build the tree-function of a preorder level sequence.

    Vertex i is the i-th vertex in preorder, the root is vertex 0, and a vertex's
    parent is the latest earlier vertex one level up.

    Raises:
        FuncMapError: if the sequence is not a valid preorder level sequence
    """
    levels = tuple(levels)
    if not levels or levels[0] != 0:
        raise FuncMapError("Level sequence must start with the root at level 0", 0)

    table = [0] * len(levels)
    last_at_level: Dict[int, int] = {0: 0}
    for i in range(1, len(levels)):
        level = levels[i]
        if level < 1 or level > levels[i - 1] + 1:
            raise FuncMapError(f"Level {level} at position {i} breaks preorder", i)
        table[i] = last_at_level[level - 1]
        last_at_level[level] = i
    return TreeFunc(FuncMap(len(levels), tuple(table)), 0)


def _level_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    # Successor walk over canonical sequences (1-based levels), from the path down to the star
    levels = list(range(1, n + 1))
    while True:
        yield tuple(levels)
        p = n - 1
        while p >= 0 and levels[p] <= 2:
            p -= 1
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def enumerate_trees(n: int) -> Iterator[TreeFunc]:
    """
    One rooted tree per isomorphism class on n vertices, ordered by canonical code.

    Emitted trees are rooted at vertex 0 with vertices numbered in canonical preorder.

    Raises:
        LimitExceededError: if n exceeds ENUMERATION_CAP
    """
    if n < 1:
        raise ValueError(f"Vertex count must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise LimitExceededError("Tree enumeration", n, ENUMERATION_CAP)

    sequences = list(_level_sequences(n))
    sequences.reverse()
    for seq in sequences:
        yield decode_level_sequence(tuple(level - 1 for level in seq))


def random_tree(n: int, rng: random.Random) -> TreeFunc:
    """
    Random labelled tree-function by recursive attachment over a shuffled vertex order.

    Args:
        n: Vertex count
        rng: Seeded random source

    Returns:
        TreeFunc rooted at the first vertex of the shuffled order
    """
    order = list(range(n))
    rng.shuffle(order)
    table = [0] * n
    table[order[0]] = order[0]
    for j in range(1, n):
        table[order[j]] = order[rng.randrange(j)]
    return TreeFunc(FuncMap(n, tuple(table)), order[0])
