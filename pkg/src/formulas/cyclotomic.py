"""
Exact cyclotomic arithmetic for HarmoniTree.

Elements of Z[omega], omega a primitive n-th root of unity, are stored as integer
coefficient vectors modulo the n-th cyclotomic polynomial. Zero-testing is exact.
"""

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple, Union


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _exact_monic_division(numerator: Sequence[int], divisor: Sequence[int]) -> List[int]:
    # Coefficient lists are lowest degree first; divisor is monic
    remainder = list(numerator)
    deg_d = len(divisor) - 1
    quotient = [0] * (len(remainder) - deg_d)
    for shift in range(len(quotient) - 1, -1, -1):
        lead = remainder[shift + deg_d]
        quotient[shift] = lead
        if lead:
            for k, c in enumerate(divisor):
                remainder[shift + k] -= lead * c
    if any(remainder[:deg_d]):
        raise ArithmeticError("Division by cyclotomic factor left a remainder")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Tuple[int, ...]:
    """
    The n-th cyclotomic polynomial Phi_n.

    Computed by dividing x^n - 1 exactly by Phi_d for every proper divisor d of n.

    Args:
        n: Conductor (positive)

    Returns:
        Integer coefficients, lowest degree first (Phi_3 -> (1, 1, 1))
    """
    if n < 1:
        raise ValueError(f"Conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_monic_division(poly, cyclotomic_poly(d))
    return tuple(poly)


def _reduce(poly: Sequence[int], modulus: Sequence[int]) -> Tuple[int, ...]:
    deg = len(modulus) - 1
    coeffs = list(poly) + [0] * max(0, deg - len(poly))
    for top in range(len(coeffs) - 1, deg - 1, -1):
        lead = coeffs[top]
        if lead:
            base = top - deg
            for k, c in enumerate(modulus):
                coeffs[base + k] -= lead * c
    return tuple(coeffs[:deg])


@dataclass(frozen=True)
class Cyclotomic:
    """Element of Z[x] / (Phi_n), read as a polynomial in omega = exp(2 pi i / n)."""
    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        modulus = cyclotomic_poly(self.n)
        coeffs = tuple(self.coeffs)
        if len(coeffs) != len(modulus) - 1:
            coeffs = _reduce(coeffs, modulus)
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def zero(cls, n: int) -> 'Cyclotomic':
        return cls(n, (0,) * (len(cyclotomic_poly(n)) - 1))

    @classmethod
    def from_int(cls, n: int, value: int) -> 'Cyclotomic':
        degree = len(cyclotomic_poly(n)) - 1
        return cls(n, (value,) + (0,) * (degree - 1))

    @classmethod
    def one(cls, n: int) -> 'Cyclotomic':
        return cls.from_int(n, 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other: Union['Cyclotomic', int]) -> 'Cyclotomic':
        if isinstance(other, int):
            return Cyclotomic.from_int(self.n, other)
        if other.n != self.n:
            raise ValueError(f"Cannot combine conductors {self.n} and {other.n}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclotomic(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.n, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return Cyclotomic(self.n, _reduce(product, cyclotomic_poly(self.n)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not supported")
        result = Cyclotomic.one(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, k: int) -> 'Cyclotomic':
        """Divide every coefficient by the integer k; the division must be exact."""
        if k == 0:
            raise ZeroDivisionError("Division of a cyclotomic value by zero")
        if any(a % k for a in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return Cyclotomic(self.n, tuple(a // k for a in self.coeffs))

    def to_complex(self) -> complex:
        """Numerical value, for display only."""
        omega = cmath.exp(2j * cmath.pi / self.n)
        return sum(a * omega ** i for i, a in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = [f"{a}*w^{i}" if i else str(a) for i, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) if terms else "0"


def omega_power(n: int, exponent: int) -> Cyclotomic:
    """omega^e as an exact element, e reduced mod n."""
    e = exponent % n
    poly = [0] * e + [1]
    return Cyclotomic(n, _reduce(poly, cyclotomic_poly(n)))
