"""
Functional map data models for HarmoniTree.

A FuncMap is a total function Z_n -> Z_n stored as a table. A TreeFunc is a FuncMap
whose (n-1)-fold iterate is constant: a rooted tree with a loop at its root.
"""

from dataclasses import dataclass, field
from typing import Iterator, Sequence, Tuple

from .errors import FuncMapError


@dataclass(frozen=True)
class FuncMap:
    """Total function on Z_n; table[i] = f(i)."""
    n: int
    table: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise FuncMapError(f"Modulus must be a positive integer, got {self.n!r}")
        table = tuple(self.table)
        object.__setattr__(self, 'table', table)
        if len(table) != self.n:
            raise FuncMapError(f"Table has length {len(table)}, expected {self.n}")
        for index, value in enumerate(table):
            if not isinstance(value, int) or not 0 <= value < self.n:
                raise FuncMapError(
                    f"Entry {value!r} at index {index} out of range [0, {self.n})", index)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.table)

    def __len__(self) -> int:
        return self.n

    def compose(self, other: 'FuncMap') -> 'FuncMap':
        """Return self o other, i.e. i -> self(other(i))."""
        if other.n != self.n:
            raise FuncMapError(f"Cannot compose maps on Z_{self.n} and Z_{other.n}")
        return FuncMap(self.n, tuple(self.table[j] for j in other.table))

    def image(self) -> frozenset:
        return frozenset(self.table)

    def fixed_points(self) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.table) if i == v)

    @classmethod
    def identity(cls, n: int) -> 'FuncMap':
        return cls(n, tuple(range(n)))

    @property
    def code(self) -> str:
        """Tree-code text form "n:t0,...,t(n-1)"."""
        return f"{self.n}:" + ",".join(str(v) for v in self.table)

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class TreeFunc:
    """
    Rooted tree with a loop at its root, as a map whose iterates collapse to the root.

    Construct through ``is_tree_func`` or ``TreeFunc.from_table``; the constructor
    re-checks the collapse condition.
    """
    underlying: FuncMap
    root: int

    def __post_init__(self):
        n = self.underlying.n
        if not 0 <= self.root < n:
            raise FuncMapError(f"Root {self.root} out of range [0, {n})", self.root)
        if self.underlying(self.root) != self.root:
            raise FuncMapError(f"Root {self.root} is not a fixed point", self.root)
        # Walking at most n-1 steps from every vertex must reach the root
        table = self.underlying.table
        for start in range(n):
            v = start
            for _ in range(n - 1):
                if v == self.root:
                    break
                v = table[v]
            if v != self.root:
                raise FuncMapError(
                    f"Vertex {start} does not reach root {self.root} within {n - 1} steps", start)

    @classmethod
    def from_table(cls, table: Sequence[int]) -> 'TreeFunc':
        """Build a TreeFunc from a table, locating the root automatically."""
        fm = FuncMap(len(table), tuple(table))
        roots = fm.fixed_points()
        if len(roots) != 1:
            raise FuncMapError(f"Expected exactly one fixed point, found {len(roots)}")
        return cls(fm, roots[0])

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def table(self) -> Tuple[int, ...]:
        return self.underlying.table

    @property
    def code(self) -> str:
        return self.underlying.code

    def __call__(self, i: int) -> int:
        return self.underlying.table[i]

    def non_root(self) -> Tuple[int, ...]:
        """Vertices other than the root, i.e. Z_n minus the image of the (n-1)-fold iterate."""
        return tuple(i for i in range(self.n) if i != self.root)

    def children(self) -> Tuple[Tuple[int, ...], ...]:
        kids = [[] for _ in range(self.n)]
        for i, parent in enumerate(self.table):
            if i != self.root:
                kids[parent].append(i)
        return tuple(tuple(k) for k in kids)

    def depths(self) -> Tuple[int, ...]:
        """Edge distance from each vertex to the root."""
        result = [-1] * self.n
        result[self.root] = 0
        for start in range(self.n):
            path = []
            v = start
            while result[v] < 0:
                path.append(v)
                v = self.table[v]
            d = result[v]
            for u in reversed(path):
                d += 1
                result[u] = d
        return tuple(result)

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class EdgeList:
    """The n ordered pairs (i, f(i)) of a functional digraph, in vertex order."""
    edges: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, 'edges', edges)
        for position, (tail, _head) in enumerate(edges):
            if tail != position:
                raise FuncMapError(f"Edge {position} starts at {tail}, expected {position}", position)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)
