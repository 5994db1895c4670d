"""
Test suite for polynomial certificates.

Tests the certificate machinery including:
- Exact evaluation of P_f and its congruence fast path
- The determinantal certificate against the exact labeling search
- Stabilizers of P_f against automorphism groups
- Power sums and Newton-Girard recovery
- The composition-lemma telescoping identity
- Orbit sums over coset transversals
"""

import itertools
import os
import random
import sys
import unittest

# Add the project root to path so we can import the src package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.calculators.exact import ExactLabelSearch
from src.calculators.theorem import certificate_check
from src.constants.checks import FactorKeying, SearchScope
from src.formulas.certificate import (canonical_rep_nonzero, determinantal_certificate, eval_P,
                                      newton_girard, orbit_sum_eval, power_sum_check,
                                      stabilizer_of_P, telescoping_check, telescoping_sides,
                                      vanishing_factor)
from src.formulas.cyclotomic import Cyclotomic
from src.formulas.factors import FactorMultiset, certificate_factors, p_factors, p_sign, vandermonde_factors
from src.formulas.perms import automorphism_group, coset_transversal
from src.formulas.treegen import enumerate_trees, random_tree
from src.formulas.zmod import conjugate, square
from src.models.errors import LimitExceededError
from src.models.funcmap import TreeFunc
from src.models.lattice import LatticePoint

SLOW = os.environ.get('HARMONITREE_SLOW') == '1'

STAR3 = TreeFunc.from_table([0, 0, 0])
PATH3 = TreeFunc.from_table([0, 0, 1])


def lattice(n):
    for point in itertools.product(range(n), repeat=n):
        yield LatticePoint(n, point)


def seeded_points(n, count, seed):
    rng = random.Random(seed)
    return [LatticePoint(n, tuple(rng.randrange(n) for _ in range(n))) for _ in range(count)]


def permutation_points(n, count, seed):
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        exponents = list(range(n))
        rng.shuffle(exponents)
        points.append(LatticePoint(n, tuple(exponents)))
    return points


class TestEvalP(unittest.TestCase):
    """Test cases for evaluating P_f."""

    def test_equal_exponents_vanish(self):
        for t in enumerate_trees(4):
            a = LatticePoint(4, (2, 2, 0, 1))
            self.assertTrue(eval_P(t, a).is_zero())
            self.assertEqual(vanishing_factor(t, a), ('vertex', 0, 1))

    def test_path_and_star_nonzero(self):
        a = LatticePoint(3, (0, 1, 2))
        self.assertFalse(eval_P(PATH3, a).is_zero())
        self.assertFalse(eval_P(STAR3, a).is_zero())
        self.assertIsNone(vanishing_factor(PATH3, a))

    def test_fast_path_agrees_with_product(self):
        for t in enumerate_trees(3):
            for a in lattice(3):
                self.assertEqual(eval_P(t, a), eval_P(t, a, fast_path=False))
        for t in enumerate_trees(5):
            for a in seeded_points(5, 30, 1):
                self.assertEqual(eval_P(t, a).is_zero(), eval_P(t, a, fast_path=False).is_zero())

    def test_matches_factor_multiset(self):
        for n in (3, 4):
            for t in enumerate_trees(n):
                for a in seeded_points(n, 20, 2):
                    expected = p_factors(t).evaluate(a.exponents, n) * p_sign(n)
                    self.assertEqual(eval_P(t, a, fast_path=False), expected)

    def test_size_mismatch(self):
        with self.assertRaises(ValueError):
            eval_P(PATH3, LatticePoint(4, (0, 1, 2, 3)))


class TestCertificate(unittest.TestCase):
    """Test cases for the determinantal certificate."""

    def test_vandermonde(self):
        ok, witness = canonical_rep_nonzero(vandermonde_factors(3), 3)
        self.assertTrue(ok)
        self.assertEqual(witness.exponents, (0, 1, 2))

    def test_empty_product(self):
        ok, witness = canonical_rep_nonzero(FactorMultiset({}), 1)
        self.assertTrue(ok)
        self.assertEqual(witness.exponents, (0,))

    def test_path3(self):
        ok, witness = canonical_rep_nonzero(certificate_factors(PATH3), 3)
        self.assertTrue(ok)
        self.assertEqual(witness.exponents, (0, 1, 2))
        self.assertTrue(determinantal_certificate(PATH3)[0])

    def test_stars(self):
        for n in range(1, 8):
            self.assertTrue(determinantal_certificate(TreeFunc.from_table([0] * n))[0])

    def test_agrees_with_search(self):
        search = ExactLabelSearch()
        for n in range(1, 6):
            for t in enumerate_trees(n):
                result = certificate_check(t, search)
                self.assertTrue(result.agrees, t.code)
                if result.certified:
                    self.assertFalse(eval_P(t, result.witness).is_zero())

    def test_sampled_n7(self):
        rng = random.Random(2024)
        count = 50 if SLOW else 8
        search = ExactLabelSearch()
        for _ in range(count):
            t = random_tree(7, rng)
            certified, witness = determinantal_certificate(t)
            nonloop = search.search(t, SearchScope.NONLOOP).achieved
            self.assertEqual(certified, nonloop == 6, t.code)
            if certified:
                self.assertTrue(witness.is_permutation())

    def test_pruned_search_needed_above_direct_cap(self):
        t = TreeFunc.from_table([0] * 6)
        with self.assertRaises(LimitExceededError):
            determinantal_certificate(t, pruned=False)
        with self.assertRaises(LimitExceededError):
            determinantal_certificate(TreeFunc.from_table([0] * 10))


class TestStabilizer(unittest.TestCase):
    """Test cases for stabilizers of P_f."""

    def test_star3(self):
        stabilizer = stabilizer_of_P(STAR3)
        self.assertEqual(stabilizer.element_tables(), frozenset({(0, 1, 2), (0, 2, 1)}))

    def test_path3(self):
        self.assertEqual(stabilizer_of_P(PATH3).element_tables(), frozenset({(0, 1, 2)}))

    def test_matches_automorphisms(self):
        for n in (1, 3, 4, 5):
            for t in enumerate_trees(n):
                self.assertEqual(stabilizer_of_P(t).element_tables(),
                                 automorphism_group(t).element_tables(), t.code)

    def test_two_vertices_is_larger(self):
        # Only the vertex factor remains, so the swap fixes P_f
        t = TreeFunc.from_table([0, 0])
        self.assertEqual(stabilizer_of_P(t).order, 2)
        self.assertEqual(automorphism_group(t).order, 1)

    def test_monomial_keying_is_larger(self):
        stabilizer = stabilizer_of_P(PATH3, FactorKeying.MONOMIAL)
        self.assertEqual(stabilizer.element_tables(), frozenset({(0, 1, 2), (2, 1, 0)}))

    def test_refuses_above_cap(self):
        with self.assertRaises(LimitExceededError):
            stabilizer_of_P(TreeFunc.from_table([0] * 10))


class TestPowerSums(unittest.TestCase):
    """Test cases for power sums and Newton-Girard."""

    def test_permutation_point(self):
        report = power_sum_check(LatticePoint(3, (0, 1, 2)))
        self.assertTrue(report.power_sums[1].is_zero())
        self.assertTrue(report.power_sums[2].is_zero())
        self.assertEqual(report.power_sums[3], Cyclotomic.from_int(3, 3))
        self.assertEqual(report.power_sums[0], Cyclotomic.from_int(3, 3))
        self.assertTrue(report.moduli_hold)
        self.assertTrue(report.is_permutation)
        self.assertTrue(report.converse_asserted)

    def test_constant_point(self):
        report = power_sum_check(LatticePoint(3, (0, 0, 0)))
        self.assertEqual(report.power_sums[1], Cyclotomic.from_int(3, 3))
        self.assertFalse(report.moduli_hold)
        self.assertFalse(report.is_permutation)

    def test_elementary_values(self):
        for n in (3, 5, 7):
            perms = list(itertools.permutations(range(n)))
            if n == 7 and not SLOW:
                perms = random.Random(n).sample(perms, 40)
            for p in perms:
                report = power_sum_check(LatticePoint(n, p))
                self.assertTrue(report.moduli_hold)
                for k in range(1, n):
                    self.assertTrue(report.elementary[k].is_zero())
                self.assertEqual(report.elementary[n], Cyclotomic.from_int(n, (-1) ** (n + 1)))

    def test_composite_converse_not_asserted(self):
        report = power_sum_check(LatticePoint(9, tuple(range(9))))
        self.assertTrue(report.moduli_hold)
        self.assertFalse(report.converse_asserted)

    def test_newton_girard_from_integers(self):
        # Values 1 and 2 as conductor-1 elements: e_1 = 3, e_2 = 2
        p = [Cyclotomic.from_int(1, 3), Cyclotomic.from_int(1, 5)]
        e = newton_girard(p, 1)
        self.assertEqual(e[1], Cyclotomic.from_int(1, 3))
        self.assertEqual(e[2], Cyclotomic.from_int(1, 2))


class TestTelescoping(unittest.TestCase):
    """Test cases for the telescoping identity."""

    def test_n3_everywhere(self):
        for t in enumerate_trees(3):
            for a in lattice(3):
                self.assertTrue(telescoping_check(t, a), f"{t.code} at {a.code}")

    def test_path3_nonzero(self):
        lhs, rhs = telescoping_sides(PATH3, LatticePoint(3, (0, 1, 2)))
        self.assertFalse(lhs.is_zero())
        self.assertEqual(lhs, rhs)

    def test_equal_exponents_give_zero(self):
        lhs, rhs = telescoping_sides(STAR3, LatticePoint(3, (1, 1, 0)))
        self.assertTrue(lhs.is_zero())
        self.assertTrue(rhs.is_zero())

    def test_n5_sampled(self):
        count = 100 if SLOW else 4
        for index, t in enumerate(enumerate_trees(5)):
            for a in seeded_points(5, count, index):
                self.assertTrue(telescoping_check(t, a), f"{t.code} at {a.code}")

    def test_n5_permutation_points(self):
        count = 20 if SLOW else 2
        for index, t in enumerate(enumerate_trees(5)):
            certified, witness = determinantal_certificate(t)
            self.assertTrue(certified)
            lhs, rhs = telescoping_sides(t, witness)
            self.assertFalse(lhs.is_zero(), t.code)
            self.assertEqual(lhs, rhs, t.code)
            for a in permutation_points(5, count, index):
                self.assertTrue(telescoping_check(t, a), f"{t.code} at {a.code}")

    def test_refuses_above_cap(self):
        with self.assertRaises(LimitExceededError):
            telescoping_sides(TreeFunc.from_table([0] * 6), LatticePoint(6, tuple(range(6))))


class TestOrbitSum(unittest.TestCase):
    """Test cases for orbit sums."""

    def test_matches_explicit_sum(self):
        for t in enumerate_trees(4):
            a = LatticePoint(4, (0, 1, 3, 2))
            expected = Cyclotomic.zero(4)
            for sigma in coset_transversal(square(t)):
                expected = expected + eval_P(conjugate(t, sigma), a)
            self.assertEqual(orbit_sum_eval(t, a), expected)

    def test_shift_wraps_around_group_order(self):
        t = TreeFunc.from_table([0, 0, 1, 1])
        a = LatticePoint(4, (3, 1, 0, 2))
        order = automorphism_group(square(t)).order
        self.assertEqual(orbit_sum_eval(t, a, shift=order), orbit_sum_eval(t, a))

    def test_refuses_above_cap(self):
        with self.assertRaises(LimitExceededError):
            orbit_sum_eval(TreeFunc.from_table([0] * 7), LatticePoint(7, tuple(range(7))))


def run_certificate_tests():
    """Run all certificate tests."""
    suite = unittest.TestSuite()

    loader = unittest.TestLoader()
    suite.addTests(loader.loadTestsFromTestCase(TestEvalP))
    suite.addTests(loader.loadTestsFromTestCase(TestCertificate))
    suite.addTests(loader.loadTestsFromTestCase(TestStabilizer))
    suite.addTests(loader.loadTestsFromTestCase(TestPowerSums))
    suite.addTests(loader.loadTestsFromTestCase(TestTelescoping))
    suite.addTests(loader.loadTestsFromTestCase(TestOrbitSum))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == '__main__':
    success = run_certificate_tests()
    sys.exit(0 if success else 1)
