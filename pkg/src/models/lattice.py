"""
Lattice points over the n-th roots of unity.

A LatticePoint stores exponents a with the meaning x_i = omega^(a_i).
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import FuncMapError


@dataclass(frozen=True)
class LatticePoint:
    n: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        object.__setattr__(self, 'exponents', exps)
        if self.n < 1:
            raise FuncMapError(f"Conductor must be positive, got {self.n}")
        if len(exps) != self.n:
            raise FuncMapError(f"Lattice point has {len(exps)} exponents, expected {self.n}")
        for i, a in enumerate(exps):
            if not isinstance(a, int) or not 0 <= a < self.n:
                raise FuncMapError(f"Exponent {a!r} at index {i} out of range [0, {self.n})", i)

    def __getitem__(self, i: int) -> int:
        return self.exponents[i]

    def __len__(self) -> int:
        return len(self.exponents)

    def is_permutation(self) -> bool:
        return len(self.exponents) == self.n and len(set(self.exponents)) == self.n

    @property
    def code(self) -> str:
        return f"{self.n}:" + ",".join(str(a) for a in self.exponents)

    def __str__(self) -> str:
        return self.code
