"""
Split multilinear factors for HarmoniTree.

A factor is a difference of two monomials in the variables x_0..x_(n-1): vertex
factors (x_j - x_i) and edge factors (x_f(j) x_j - x_f(i) x_i). Multisets of
factors carry integer exponents and support LCM/GCD by per-factor max/min.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from ..constants.checks import FactorKeying, FactorKind
from ..models.funcmap import TreeFunc
from ..models.perm import Perm
from .cyclotomic import Cyclotomic, omega_power


@dataclass(frozen=True, order=True)
class Factor:
    """
    Canonical difference-of-monomials factor.

    For VERTEX the key is the sorted pair (i, j). For EDGE the key is the sorted pair
    of its two monomials, each monomial a pair of variable indices: ordered pairs
    (f(i), i) under ORDERED keying, sorted pairs under MONOMIAL keying.
    """
    kind: str
    key: Tuple
    keying: str = FactorKeying.ORDERED.value

    @classmethod
    def vertex(cls, i: int, j: int) -> 'Factor':
        return cls(FactorKind.VERTEX.value, tuple(sorted((i, j))))

    @classmethod
    def edge(cls, f: TreeFunc, i: int, j: int,
             keying: FactorKeying = FactorKeying.ORDERED) -> 'Factor':
        return cls._edge_from_monomials((f(i), i), (f(j), j), keying.value)

    @classmethod
    def _edge_from_monomials(cls, first, second, keying: str) -> 'Factor':
        if keying == FactorKeying.MONOMIAL.value:
            first, second = tuple(sorted(first)), tuple(sorted(second))
        return cls(FactorKind.EDGE.value, tuple(sorted((first, second))), keying)

    def _monomials(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        if self.kind == FactorKind.VERTEX.value:
            i, j = self.key
            return (i,), (j,)
        return self.key

    def exponent_gap(self, a: Sequence[int], n: int) -> int:
        """(second exponent - first exponent) mod n; zero iff the factor vanishes at omega^a."""
        first, second = self._monomials()
        return (sum(a[v] for v in second) - sum(a[v] for v in first)) % n

    def vanishes(self, a: Sequence[int], n: int) -> bool:
        return self.exponent_gap(a, n) == 0

    def evaluate(self, a: Sequence[int], n: int) -> Cyclotomic:
        """Exact value omega^(second) - omega^(first) at x_v = omega^(a_v)."""
        first, second = self._monomials()
        return omega_power(n, sum(a[v] for v in second)) - omega_power(n, sum(a[v] for v in first))

    def relabel(self, sigma: Perm) -> 'Factor':
        s = sigma.table
        if self.kind == FactorKind.VERTEX.value:
            i, j = self.key
            return Factor.vertex(s[i], s[j])
        first, second = (tuple(s[v] for v in mono) for mono in self.key)
        return Factor._edge_from_monomials(first, second, self.keying)

    def variables(self) -> Tuple[int, ...]:
        first, second = self._monomials()
        return tuple(sorted(set(first) | set(second)))


@dataclass(frozen=True)
class FactorMultiset:
    """Map from Factor to a positive integer exponent."""
    entries: Mapping[Factor, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {f: e for f, e in dict(self.entries).items() if e > 0}
        object.__setattr__(self, 'entries', cleaned)

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Factor]:
        return iter(sorted(self.entries))

    def exponent(self, factor: Factor) -> int:
        return self.entries.get(factor, 0)

    def items(self):
        return sorted(self.entries.items())

    def __mul__(self, other: 'FactorMultiset') -> 'FactorMultiset':
        merged: Dict[Factor, int] = dict(self.entries)
        for f, e in other.entries.items():
            merged[f] = merged.get(f, 0) + e
        return FactorMultiset(merged)

    def relabel(self, sigma: Perm) -> 'FactorMultiset':
        relabeled: Dict[Factor, int] = {}
        for f, e in self.entries.items():
            g = f.relabel(sigma)
            relabeled[g] = relabeled.get(g, 0) + e
        return FactorMultiset(relabeled)

    def vanishes(self, a: Sequence[int], n: int) -> bool:
        return any(f.vanishes(a, n) for f in self.entries)

    def evaluate(self, a: Sequence[int], n: int) -> Cyclotomic:
        """Exact product of factor^exponent at x_v = omega^(a_v)."""
        value = Cyclotomic.one(n)
        for f, e in self.items():
            value = value * f.evaluate(a, n) ** e
        return value


def lcm_split(F: FactorMultiset, G: FactorMultiset) -> FactorMultiset:
    """Per-factor maximum of exponents."""
    keys = set(F.entries) | set(G.entries)
    return FactorMultiset({k: max(F.exponent(k), G.exponent(k)) for k in keys})


def gcd_split(F: FactorMultiset, G: FactorMultiset) -> FactorMultiset:
    """Per-factor minimum of exponents; factors missing from either side drop out."""
    keys = set(F.entries) & set(G.entries)
    return FactorMultiset({k: min(F.exponent(k), G.exponent(k)) for k in keys})


def vandermonde_factors(n: int, exponent: int = 1) -> FactorMultiset:
    """(x_j - x_i) for every pair i < j."""
    return FactorMultiset({Factor.vertex(i, j): exponent for i, j in combinations(range(n), 2)})


def edge_factors(f: TreeFunc, exponent: int = 1,
                 keying: FactorKeying = FactorKeying.ORDERED) -> FactorMultiset:
    """(x_f(j) x_j - x_f(i) x_i) for every pair of non-root vertices i < j."""
    entries = {}
    for i, j in combinations(f.non_root(), 2):
        factor = Factor.edge(f, i, j, keying)
        entries[factor] = entries.get(factor, 0) + exponent
    return FactorMultiset(entries)


def p_factors(f: TreeFunc, keying: FactorKeying = FactorKeying.ORDERED) -> FactorMultiset:
    """
    Factor multiset of P_f.

    The products over ordered pairs i != j pair every factor with its negative, so
    each unordered pair appears squared and P_f = (-1)^((n-1)^2) times this product.
    """
    return vandermonde_factors(f.n, 2) * edge_factors(f, 2, keying)


def certificate_factors(f: TreeFunc) -> FactorMultiset:
    """LCM of the vertex Vandermonde multiset and the edge multiset of f."""
    return lcm_split(vandermonde_factors(f.n), edge_factors(f))


def p_sign(n: int) -> int:
    return -1 if ((n - 1) ** 2) % 2 else 1
