"""
Polynomial certificates for HarmoniTree.

Contains exact evaluation of P_f on the lattice of n-th roots of unity, the
nonvanishing test of a factor product modulo {x_k^n - 1}, the stabilizer of P_f,
power sums with Newton-Girard recovery, the composition-lemma telescoping identity
and desk-scale orbit sums.
"""

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..constants.checks import FactorKeying, FactorKind
from ..constants.limits import (EXHAUSTIVE_CAP, LATTICE_DIRECT_CAP, LATTICE_SEARCH_CAP,
                                ORBIT_SUM_CAP, TELESCOPE_CAP)
from ..models.errors import LimitExceededError
from ..models.funcmap import TreeFunc
from ..models.lattice import LatticePoint
from ..models.perm import AutGroup
from .cyclotomic import Cyclotomic, omega_power
from .factors import FactorMultiset, certificate_factors, p_factors
from .perms import all_perms, automorphism_group, coset_transversal
from .zmod import conjugate, square


def _omega_table(n: int) -> List[Cyclotomic]:
    return [omega_power(n, e) for e in range(n)]


def vanishing_factor(f: TreeFunc, a: LatticePoint) -> Optional[Tuple[str, int, int]]:
    """
    First factor of P_f that vanishes at a, found by exponent congruence.

    Returns:
        ('vertex', i, j) when a_i = a_j, ('edge', i, j) when the edge sums of the
        non-root vertices i and j agree mod n, or None
    """
    n = f.n
    seen = {}
    for i, e in enumerate(a.exponents):
        if e in seen:
            return ('vertex', seen[e], i)
        seen[e] = i
    sums = {}
    for i in f.non_root():
        s = (a[f(i)] + a[i]) % n
        if s in sums:
            return ('edge', sums[s], i)
        sums[s] = i
    return None


def eval_P(f: TreeFunc, a: LatticePoint, fast_path: bool = True) -> Cyclotomic:
    """
    Exact value of P_f at x_i = omega^(a_i).

    P_f is the product over ordered pairs i != j of (x_j - x_i), times the product over
    ordered pairs of non-root vertices of (x_f(j) x_j - x_f(i) x_i).

    Args:
        f: Tree-function
        a: Lattice point with the same n
        fast_path: Return zero straight away when a factor vanishes by congruence

    Returns:
        Cyclotomic value
    """
    n = f.n
    if a.n != n:
        raise ValueError(f"Lattice point on Z_{a.n} cannot evaluate P_f on Z_{n}")
    if fast_path and vanishing_factor(f, a) is not None:
        return Cyclotomic.zero(n)

    omega = _omega_table(n)
    value = Cyclotomic.one(n)
    for i, j in itertools.permutations(range(n), 2):
        value = value * (omega[a[j]] - omega[a[i]])
        if value.is_zero():
            return value
    non_root = f.non_root()
    for i, j in itertools.permutations(non_root, 2):
        value = value * (omega[(a[f(j)] + a[j]) % n] - omega[(a[f(i)] + a[i]) % n])
        if value.is_zero():
            return value
    return value


def canonical_rep_nonzero(M: FactorMultiset, n: int,
                          pruned: bool = True) -> Tuple[bool, Optional[LatticePoint]]:
    """
    Whether the canonical representative of a factor product modulo {x_k^n - 1} is nonzero.

    The representative agrees with the product on every lattice point, so it is nonzero
    iff some point keeps every factor nonvanishing. Points are scanned in lexicographic
    order; the first one found is the witness.

    Args:
        M: Factor multiset over the variables x_0..x_(n-1)
        n: Number of variables and order of the roots of unity
        pruned: Allow the pruned depth-first search above LATTICE_DIRECT_CAP

    Returns:
        (nonzero, witness)

    Raises:
        LimitExceededError: if n is above the applicable cap
    """
    if len(M) == 0:
        return True, LatticePoint(n, (0,) * n)

    factors = list(M)
    if n <= LATTICE_DIRECT_CAP:
        for point in itertools.product(range(n), repeat=n):
            if not any(fac.vanishes(point, n) for fac in factors):
                return True, LatticePoint(n, point)
        return False, None

    if not pruned:
        raise LimitExceededError("Direct lattice scan", n, LATTICE_DIRECT_CAP)
    if n > LATTICE_SEARCH_CAP:
        raise LimitExceededError("Pruned lattice search", n, LATTICE_SEARCH_CAP)

    # Vertex factors are checked before edge factors at each depth
    by_last = [[] for _ in range(n)]
    for fac in sorted(factors, key=lambda fac: fac.kind != FactorKind.VERTEX.value):
        by_last[max(fac.variables())].append(fac)

    point = [0] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        for value in range(n):
            point[k] = value
            if any(fac.vanishes(point, n) for fac in by_last[k]):
                continue
            if extend(k + 1):
                return True
        point[k] = 0
        return False

    if extend(0):
        return True, LatticePoint(n, tuple(point))
    return False, None


def determinantal_certificate(f: TreeFunc, pruned: bool = True) -> Tuple[bool, Optional[LatticePoint]]:
    """
    Nonvanishing of LCM(vertex Vandermonde, edge product) modulo {x_k^n - 1}.

    A witness is an injective vertex labeling whose non-loop edge sums are injective.

    Returns:
        (certified, witness)
    """
    return canonical_rep_nonzero(certificate_factors(f), f.n, pruned=pruned)


def stabilizer_of_P(f: TreeFunc, keying: FactorKeying = FactorKeying.ORDERED) -> AutGroup:
    """
    Variable permutations that fix the factor multiset of P_f.

    Args:
        f: Tree-function
        keying: ORDERED compares edge factors by their ordered pairs (f(i), i);
            MONOMIAL compares the monomials only

    Returns:
        AutGroup of every fixing permutation, in lexicographic order

    Raises:
        LimitExceededError: if n exceeds EXHAUSTIVE_CAP
    """
    if f.n > EXHAUSTIVE_CAP:
        raise LimitExceededError("Stabilizer scan", f.n, EXHAUSTIVE_CAP)
    target = p_factors(f, keying)
    elements = tuple(sigma for sigma in all_perms(f.n) if target.relabel(sigma) == target)
    return AutGroup(tree=f, generators=elements, order=len(elements), elements=elements)


@dataclass(frozen=True)
class PowerSumReport:
    """Power sums p_0..p_n of omega^a and the elementary symmetric values they determine."""
    n: int
    power_sums: Tuple[Cyclotomic, ...]
    elementary: Tuple[Cyclotomic, ...]
    vanishing: bool          # p_k = 0 for 1 <= k <= n-1
    top_is_n: bool           # p_n = n
    is_permutation: bool
    converse_asserted: bool  # n prime: the moduli force a permutation

    @property
    def moduli_hold(self) -> bool:
        return self.vanishing and self.top_is_n


def newton_girard(power_sums: Sequence[Cyclotomic], n: int) -> Tuple[Cyclotomic, ...]:
    """
    Elementary symmetric values e_0..e_m from power sums p_1..p_m.

    k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i; every division by k is exact.

    Args:
        power_sums: p_1..p_m (p_0 is not used)
        n: Conductor of the values

    Returns:
        (e_0, ..., e_m) with e_0 = 1
    """
    elementary = [Cyclotomic.one(n)]
    for k in range(1, len(power_sums) + 1):
        total = Cyclotomic.zero(n)
        for i in range(1, k + 1):
            term = elementary[k - i] * power_sums[i - 1]
            total = total + term if i % 2 == 1 else total - term
        elementary.append(total.exact_div(k))
    return tuple(elementary)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def power_sum_check(a: LatticePoint) -> PowerSumReport:
    """
    Power sums p_k = sum_i omega^(k a_i) for k = 0..n.

    For a permutation of Z_n, p_k vanishes for 1 <= k <= n-1 and p_n = n; then the
    elementary values are e_1..e_(n-1) = 0 and e_n = (-1)^(n+1). p_0 = n always.
    """
    n = a.n
    power_sums = tuple(
        sum((omega_power(n, k * e) for e in a.exponents), Cyclotomic.zero(n))
        for k in range(n + 1)
    )
    vanishing = all(p.is_zero() for p in power_sums[1:n])
    top_is_n = power_sums[n] == Cyclotomic.from_int(n, n)
    return PowerSumReport(
        n=n,
        power_sums=power_sums,
        elementary=newton_girard(power_sums[1:], n),
        vanishing=vanishing,
        top_is_n=top_is_n,
        is_permutation=a.is_permutation(),
        converse_asserted=_is_prime(n),
    )


def _telescoping_tail(f: TreeFunc, a: LatticePoint) -> Cyclotomic:
    # Sum over k in {0,1}^m, all-ones excluded, of prod A^k B^(1-k); prefix products, zero prefixes pruned
    n = f.n
    omega = _omega_table(n)
    f1 = f.table
    f2 = square(f).table
    x = [omega[e] for e in a.exponents]

    pairs = list(itertools.permutations(f.non_root(), 2))
    A = [x[f2[j]] * x[j] - x[f2[i]] * x[i] for i, j in pairs]
    B = [(x[f1[j]] - x[f2[j]]) * x[j] - (x[f1[i]] - x[f2[i]]) * x[i] for i, j in pairs]
    m = len(pairs)
    total = [Cyclotomic.zero(n)]

    def expand(index: int, prefix: Cyclotomic, all_ones: bool):
        if prefix.is_zero():
            return
        if index == m:
            if not all_ones:
                total[0] = total[0] + prefix
            return
        expand(index + 1, prefix * A[index], all_ones)
        expand(index + 1, prefix * B[index], False)

    expand(0, Cyclotomic.one(n), True)
    return total[0]


def telescoping_sides(f: TreeFunc, a: LatticePoint) -> Tuple[Cyclotomic, Cyclotomic]:
    """
    Both sides of P_f = P_(f^2) + V * sum_k prod A^k B^(1-k).

    V is the vertex product over ordered pairs; A_ij = x_f2(j) x_j - x_f2(i) x_i and
    B_ij = (x_f(j) - x_f2(j)) x_j - (x_f(i) - x_f2(i)) x_i over ordered non-root pairs.

    Raises:
        LimitExceededError: if n exceeds TELESCOPE_CAP
    """
    n = f.n
    if n > TELESCOPE_CAP:
        raise LimitExceededError("Telescoping expansion", n, TELESCOPE_CAP)
    lhs = eval_P(f, a, fast_path=False)

    omega = _omega_table(n)
    vandermonde = Cyclotomic.one(n)
    for i, j in itertools.permutations(range(n), 2):
        vandermonde = vandermonde * (omega[a[j]] - omega[a[i]])

    rhs = eval_P(square(f), a, fast_path=False)
    if not vandermonde.is_zero():
        rhs = rhs + vandermonde * _telescoping_tail(f, a)
    return lhs, rhs


def telescoping_check(f: TreeFunc, a: LatticePoint) -> bool:
    """Exact equality of the two telescoping sides at a."""
    lhs, rhs = telescoping_sides(f, a)
    return lhs == rhs


def orbit_sum_eval(f: TreeFunc, a: LatticePoint, shift: int = 0) -> Cyclotomic:
    """
    Sum of P over the conjugates sigma f sigma^-1 for sigma in a transversal of S_n / Aut(G_(f^2)).

    shift = s replaces every representative sigma by sigma o alpha_s, alpha_s the s-th
    automorphism of f^2 (mod its order), which gives a different transversal.

    Raises:
        LimitExceededError: if n exceeds ORBIT_SUM_CAP
    """
    n = f.n
    if n > ORBIT_SUM_CAP:
        raise LimitExceededError("Orbit sum", n, ORBIT_SUM_CAP)
    f2 = square(f)
    automorphisms = automorphism_group(f2).elements
    alpha = automorphisms[shift % len(automorphisms)]

    total = Cyclotomic.zero(n)
    for sigma in coset_transversal(f2):
        total = total + eval_P(conjugate(f, sigma.compose(alpha)), a)
    return total
