"""
Permutation data models for HarmoniTree.

Perm is a bijection of Z_n with its inverse cached. AutGroup holds the automorphism
group of a functional tree: generators, order, and the full element list when small.
"""

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

from .errors import PermutationError
from .funcmap import FuncMap, TreeFunc


@dataclass(frozen=True)
class Perm:
    """Bijection of Z_n; table[i] = sigma(i), inverse[sigma(i)] = i."""
    n: int
    table: Tuple[int, ...]
    inverse: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, 'table', table)
        if self.n < 1 or len(table) != self.n:
            raise PermutationError(f"Permutation table has length {len(table)}, expected n={self.n}")
        inverse = [-1] * self.n
        for i, v in enumerate(table):
            if not isinstance(v, int) or not 0 <= v < self.n:
                raise PermutationError(f"Entry {v!r} at index {i} out of range [0, {self.n})", i)
            if inverse[v] != -1:
                raise PermutationError(f"Value {v} repeated at index {i}; not a bijection", i)
            inverse[v] = i
        object.__setattr__(self, 'inverse', tuple(inverse))

    @classmethod
    def identity(cls, n: int) -> 'Perm':
        return cls(n, tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> 'Perm':
        table = list(range(n))
        table[a], table[b] = b, a
        return cls(n, tuple(table))

    @classmethod
    def from_funcmap(cls, f: FuncMap) -> 'Perm':
        return cls(f.n, f.table)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def compose(self, other: 'Perm') -> 'Perm':
        """Return self o other."""
        if other.n != self.n:
            raise PermutationError(f"Cannot compose permutations of {self.n} and {other.n} points")
        return Perm(self.n, tuple(self.table[j] for j in other.table))

    def inverted(self) -> 'Perm':
        return Perm(self.n, self.inverse)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.table))

    def as_funcmap(self) -> FuncMap:
        return FuncMap(self.n, self.table)

    @property
    def code(self) -> str:
        return f"{self.n}:" + ",".join(str(v) for v in self.table)

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class AutGroup:
    """
    Automorphism group of a functional tree.

    ``elements`` is None when the order exceeds the element limit; membership is
    still exact through the commuting test.
    """
    tree: TreeFunc
    generators: Tuple[Perm, ...]
    order: int
    elements: Optional[Tuple[Perm, ...]] = None

    def contains(self, sigma: Perm) -> bool:
        """Membership; the commuting test sigma o f = f o sigma when only generators are stored."""
        if self.elements is not None:
            return sigma.table in self.element_tables()
        f = self.tree.table
        return all(sigma.table[f[i]] == f[sigma.table[i]] for i in range(self.tree.n))

    def element_tables(self) -> frozenset:
        if self.elements is None:
            raise ValueError(f"Group of order {self.order} stores generators only")
        return frozenset(p.table for p in self.elements)

    def __iter__(self) -> Iterator[Perm]:
        if self.elements is None:
            raise ValueError(f"Group of order {self.order} stores generators only")
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order


def perm_from_sequence(values: Sequence[int]) -> Perm:
    """Validate a sequence as a permutation of Z_len."""
    return Perm(len(values), tuple(values))
