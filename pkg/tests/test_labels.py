"""
Test suite for additive edge labels.

Tests the label formulas including:
- Edge-sum profiles and the harmonious predicate
- Right and left translations and their distinct-sum counts
- Harmonious expansion and reconstruction
- General tau-induced labels
- Harmonious permutation counts
"""

import itertools
import os
import sys
import unittest

# Add the project root to path so we can import the src package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.formulas.labels import (count_harmonious_permutations, distinct_sum_count, edge_sums,
                                 expansion_decompose, expansion_reconstruct, is_harmonious,
                                 labeled_sums, left_translate, right_translate,
                                 right_translate_exclusion, sum_multiset, tau_labels)
from src.formulas.perms import all_perms
from src.formulas.treegen import enumerate_trees
from src.formulas.zmod import conjugate
from src.models.errors import LimitExceededError, NotHarmoniousError
from src.models.funcmap import FuncMap, TreeFunc
from src.models.perm import Perm

STAR3 = TreeFunc.from_table([0, 0, 0])
PATH3 = TreeFunc.from_table([0, 0, 1])


class TestEdgeSums(unittest.TestCase):
    """Test cases for edge-sum profiles."""

    def test_constant_map_is_harmonious(self):
        for n in range(1, 8):
            profile = edge_sums(TreeFunc.from_table([0] * n))
            self.assertEqual(profile.sums, tuple(range(n)))
            self.assertEqual(profile.distinct_count, n)

    def test_path3(self):
        profile = edge_sums(PATH3)
        self.assertEqual(profile.nonloop_sums, (0, 1))
        self.assertEqual(profile.nonloop_distinct_count, 2)
        self.assertEqual(profile.missing, 2)
        self.assertEqual(profile.distinct_count, 2)

    def test_star_rooted_at_one(self):
        profile = edge_sums(TreeFunc.from_table([1, 1, 1]))
        self.assertEqual(profile.sums, (0, 1, 2))
        self.assertEqual(profile.distinct_count, 3)

    def test_missing_absent_on_collision(self):
        profile = edge_sums(TreeFunc.from_table([0, 0, 1, 2]))
        self.assertEqual(profile.nonloop_sums, (1, 1, 3))
        self.assertEqual(profile.nonloop_distinct_count, 2)
        self.assertIsNone(profile.missing)

    def test_is_harmonious(self):
        self.assertTrue(is_harmonious(TreeFunc.from_table([0] * 5)))
        self.assertFalse(is_harmonious(PATH3))
        self.assertTrue(is_harmonious(TreeFunc.from_table([0])))

    def test_labeled_sums_match_conjugate(self):
        for t in enumerate_trees(4):
            for sigma in all_perms(4):
                g = conjugate(t, sigma)
                expected = sorted(edge_sums(g).sums)
                self.assertEqual(sorted(labeled_sums(t, sigma.table)), expected)


class TestTranslations(unittest.TestCase):
    """Test cases for right and left translations."""

    def test_right_translate(self):
        self.assertEqual(right_translate(PATH3, 0).table, PATH3.table)
        self.assertEqual(right_translate(PATH3, 1).table, (0, 1, 0))

    def test_left_translate(self):
        self.assertEqual(left_translate(PATH3, 0).table, PATH3.table)
        self.assertEqual(left_translate(PATH3, 2).table, (2, 2, 0))

    def test_right_translates_compose(self):
        g = FuncMap(5, (3, 0, 4, 4, 1))
        for a in range(5):
            for b in range(5):
                self.assertEqual(right_translate(right_translate(g, a), b), right_translate(g, a + b))

    def test_counts_preserved_with_transported_exclusion(self):
        for n in range(1, 7):
            for t in enumerate_trees(n):
                for excluded in (frozenset(), frozenset({t.root})):
                    before = distinct_sum_count(t, excluded)
                    for c in range(n):
                        moved = right_translate_exclusion(excluded, c, n)
                        self.assertEqual(distinct_sum_count(right_translate(t, c), moved), before)
                        self.assertEqual(distinct_sum_count(left_translate(t, c), excluded), before)

    def test_fixed_exclusion_is_not_preserved(self):
        # Keeping T = {root} in place under right translation changes the count
        g = right_translate(PATH3, 1)
        self.assertEqual(distinct_sum_count(PATH3, {0}), 2)
        self.assertEqual(distinct_sum_count(g, {0}), 1)
        self.assertEqual(distinct_sum_count(g, right_translate_exclusion({0}, 1, 3)), 2)


class TestExpansion(unittest.TestCase):
    """Test cases for the harmonious expansion."""

    def test_star_identity(self):
        gamma = expansion_decompose(STAR3, Perm.identity(3))
        self.assertTrue(gamma.is_identity())

    def test_star_rooted_at_one(self):
        t = TreeFunc.from_table([1, 1, 1])
        gamma = expansion_decompose(t, Perm.identity(3))
        self.assertEqual(gamma.table, (1, 2, 0))

    def test_not_harmonious(self):
        with self.assertRaises(NotHarmoniousError):
            expansion_decompose(PATH3, Perm.identity(3))

    def test_round_trip(self):
        for n in (3, 4, 5):
            for t in enumerate_trees(n):
                for sigma in all_perms(n):
                    if not is_harmonious(conjugate(t, sigma)):
                        continue
                    gamma = expansion_decompose(t, sigma)
                    self.assertEqual(expansion_reconstruct(gamma, sigma), t.underlying)


class TestTauLabels(unittest.TestCase):
    """Test cases for tau-induced labels."""

    def test_additive_reproduces_sums(self):
        for t in enumerate_trees(5):
            report = tau_labels(t, lambda a, b: a + b, search=False)
            self.assertEqual(report.labels, edge_sums(t).sums)

    def test_projection_is_zen(self):
        for t in enumerate_trees(4):
            report = tau_labels(t, lambda a, b: b)
            self.assertEqual(report.labels, (0, 1, 2, 3))
            self.assertTrue(report.zen)
            self.assertTrue(report.witness.is_identity())

    def test_constant_is_not_zen(self):
        report = tau_labels(STAR3, [[0] * 3 for _ in range(3)])
        self.assertEqual(report.labels, (0, 0, 0))
        self.assertFalse(report.zen)
        self.assertIsNone(report.witness)

    def test_additive_table_matches_harmonious(self):
        table = [[(a + b) % 3 for b in range(3)] for a in range(3)]
        self.assertFalse(tau_labels(PATH3, table).zen)
        report = tau_labels(STAR3, table)
        self.assertTrue(report.zen)
        self.assertTrue(is_harmonious(conjugate(STAR3, report.witness)))

    def test_search_refused_above_cap(self):
        with self.assertRaises(LimitExceededError):
            tau_labels(TreeFunc.from_table([0] * 10), lambda a, b: b)


class TestHarmoniousPermutations(unittest.TestCase):
    """Test cases for harmonious permutation counts."""

    def test_known_counts(self):
        self.assertEqual(count_harmonious_permutations(1), 1)
        self.assertEqual(count_harmonious_permutations(3), 3)
        self.assertEqual(count_harmonious_permutations(5), 15)

    def test_even_is_zero(self):
        for n in (2, 4, 6):
            self.assertEqual(count_harmonious_permutations(n), 0)

    def test_brute_force(self):
        for n in range(1, 7):
            expected = sum(1 for gamma in itertools.permutations(range(n))
                           if len({(gamma[i] + i) % n for i in range(n)}) == n)
            self.assertEqual(count_harmonious_permutations(n), expected)
            self.assertEqual(expected % n, 0)

    def test_refused_above_cap(self):
        with self.assertRaises(LimitExceededError):
            count_harmonious_permutations(10)

    def test_sum_multiset_orientation_free(self):
        t = TreeFunc.from_table([0, 0, 1, 1])
        labels = [2, 0, 3, 1]
        counts = sum_multiset(t, labels)
        self.assertEqual(sum(counts.values()), 3)
        self.assertEqual(sum_multiset(t, labels, include_loop=True)[(2 * labels[0]) % 4],
                         counts[(2 * labels[0]) % 4] + 1)


def run_labels_tests():
    """Run all edge label tests."""
    suite = unittest.TestSuite()

    loader = unittest.TestLoader()
    suite.addTests(loader.loadTestsFromTestCase(TestEdgeSums))
    suite.addTests(loader.loadTestsFromTestCase(TestTranslations))
    suite.addTests(loader.loadTestsFromTestCase(TestExpansion))
    suite.addTests(loader.loadTestsFromTestCase(TestTauLabels))
    suite.addTests(loader.loadTestsFromTestCase(TestHarmoniousPermutations))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == '__main__':
    success = run_labels_tests()
    sys.exit(0 if success else 1)
