"""
Test suite for functional maps over Z/nZ.

Tests the core map operations including:
- Construction and validation of maps
- Iteration against plain repeated composition
- The rooted-tree predicate against a networkx oracle
- Swap-sink rerooting and conjugation
- Squaring chains
"""

import itertools
import os
import random
import sys
import unittest

import networkx as nx

# Add the project root to path so we can import the src package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.formulas.zmod import (conjugate, edge_list, is_tree_func, iterate, make_func,
                               square, squaring_chain, swap_sink, undirected_degree,
                               undirected_edges)
from src.models.errors import FuncMapError
from src.models.funcmap import FuncMap, TreeFunc
from src.models.perm import Perm


def tree(table):
    return TreeFunc.from_table(table)


def plain_iterate(table, k):
    result = list(range(len(table)))
    for _ in range(k):
        result = [table[v] for v in result]
    return tuple(result)


def nx_is_rooted_tree(table):
    """Oracle: exactly one fixed point and the non-loop edges form an undirected tree."""
    n = len(table)
    roots = [i for i in range(n) if table[i] == i]
    if len(roots) != 1:
        return False
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((i, table[i]) for i in range(n) if i != roots[0])
    return nx.is_tree(graph)


class TestMakeFunc(unittest.TestCase):
    """Test cases for map construction."""

    def test_constant_map(self):
        f = make_func(3, [0, 0, 0])
        self.assertEqual(f.table, (0, 0, 0))
        self.assertEqual(f.n, 3)

    def test_single_point(self):
        f = make_func(1, [0])
        self.assertEqual(f.table, (0,))

    def test_out_of_range_names_index(self):
        with self.assertRaises(FuncMapError) as ctx:
            make_func(3, [0, 0, 3])
        self.assertEqual(ctx.exception.index, 2)
        self.assertIn("index 2", str(ctx.exception))

    def test_wrong_length(self):
        with self.assertRaises(FuncMapError):
            make_func(3, [0, 0])

    def test_code(self):
        self.assertEqual(make_func(4, [1, 2, 3, 3]).code, "4:1,2,3,3")


class TestIterate(unittest.TestCase):
    """Test cases for k-fold iterates."""

    def test_constant_is_idempotent(self):
        self.assertEqual(iterate(make_func(3, [0, 0, 0]), 5).table, (0, 0, 0))

    def test_chain(self):
        f = make_func(4, [1, 2, 3, 3])
        self.assertEqual(iterate(f, 2).table, (2, 3, 3, 3))
        self.assertEqual(iterate(f, 3).table, (3, 3, 3, 3))

    def test_zero_is_identity(self):
        f = make_func(4, [1, 2, 3, 3])
        self.assertEqual(iterate(f, 0).table, (0, 1, 2, 3))

    def test_negative_refused(self):
        with self.assertRaises(ValueError):
            iterate(make_func(2, [0, 0]), -1)

    def test_binary_exponentiation_matches_plain(self):
        rng = random.Random(7)
        for n in range(1, 9):
            for _ in range(5):
                table = tuple(rng.randrange(n) for _ in range(n))
                f = FuncMap(n, table)
                for k in range(0, 2 * n + 3):
                    self.assertEqual(iterate(f, k).table, plain_iterate(table, k))

    def test_additivity(self):
        rng = random.Random(11)
        for n in range(1, 7):
            f = FuncMap(n, tuple(rng.randrange(n) for _ in range(n)))
            for a in range(2 * n + 1):
                for b in range(2 * n + 1):
                    self.assertEqual(iterate(f, a + b), iterate(f, a).compose(iterate(f, b)))

    def test_conjugation_commutes_with_iteration(self):
        rng = random.Random(5)
        for n in range(2, 7):
            f = FuncMap(n, tuple(rng.randrange(n) for _ in range(n)))
            table = list(range(n))
            rng.shuffle(table)
            sigma = Perm(n, tuple(table))
            for k in range(n + 2):
                self.assertEqual(conjugate(iterate(f, k), sigma), iterate(conjugate(f, sigma), k))


class TestIsTreeFunc(unittest.TestCase):
    """Test cases for the rooted-tree predicate."""

    def test_constant_zero(self):
        ok, t = is_tree_func(make_func(3, [0, 0, 0]))
        self.assertTrue(ok)
        self.assertEqual(t.root, 0)

    def test_two_cycle(self):
        self.assertEqual(is_tree_func(make_func(2, [1, 0])), (False, None))

    def test_identity(self):
        ok, t = is_tree_func(FuncMap.identity(3))
        self.assertFalse(ok)
        self.assertIsNone(t)

    def test_single_point(self):
        ok, t = is_tree_func(make_func(1, [0]))
        self.assertTrue(ok)
        self.assertEqual(t.root, 0)

    def test_agrees_with_networkx_exhaustively(self):
        for n in range(1, 6):
            for table in itertools.product(range(n), repeat=n):
                ok, _ = is_tree_func(FuncMap(n, table))
                self.assertEqual(ok, nx_is_rooted_tree(table), f"n={n} table={table}")

    def test_treefunc_rejects_non_tree(self):
        with self.assertRaises(FuncMapError):
            TreeFunc(FuncMap(3, (0, 2, 1)), 0)


class TestSwapSink(unittest.TestCase):
    """Test cases for rerooting."""

    def test_constant_map_at_one(self):
        for n in range(2, 7):
            t = tree([0] * n)
            rerooted = swap_sink(t, 1)
            expected = [1, 1] + [0] * (n - 2)
            self.assertEqual(list(rerooted.table), expected)
            self.assertEqual(rerooted.root, 1)

    def test_at_root_is_unchanged(self):
        t = tree([0, 0, 1])
        self.assertEqual(swap_sink(t, 0), t)

    def test_path_at_middle(self):
        self.assertEqual(swap_sink(tree([0, 0, 1]), 1).table, (1, 1, 1))

    def test_path_at_far_end(self):
        rerooted = swap_sink(tree([0, 0, 1]), 2)
        self.assertEqual(rerooted.table, (1, 2, 2))
        self.assertEqual(rerooted.root, 2)

    def test_out_of_range(self):
        with self.assertRaises(FuncMapError):
            swap_sink(tree([0, 0, 1]), 3)

    def test_invariants_on_all_small_trees(self):
        for n in range(1, 6):
            for table in itertools.product(range(n), repeat=n):
                ok, t = is_tree_func(FuncMap(n, table))
                if not ok:
                    continue
                for k in range(n):
                    rerooted = swap_sink(t, k)
                    self.assertEqual(undirected_edges(rerooted), undirected_edges(t))
                    self.assertEqual(swap_sink(rerooted, t.root), t)

    def test_commutes_with_conjugation(self):
        t = tree([0, 0, 1, 1, 2])
        sigma = Perm(5, (3, 1, 4, 0, 2))
        for k in range(5):
            self.assertEqual(conjugate(swap_sink(t, k), sigma), swap_sink(conjugate(t, sigma), sigma(k)))


class TestConjugate(unittest.TestCase):
    """Test cases for relabeling by a permutation."""

    def test_constant_goes_to_constant(self):
        t = tree([0, 0, 0])
        g = conjugate(t, Perm(3, (1, 0, 2)))
        self.assertEqual(g.table, (1, 1, 1))
        self.assertEqual(g.root, 1)

    def test_identity(self):
        t = tree([0, 0, 1, 2])
        self.assertEqual(conjugate(t, Perm.identity(4)), t)

    def test_inverse_undoes(self):
        t = tree([0, 0, 1, 2])
        sigma = Perm(4, (2, 0, 3, 1))
        self.assertEqual(conjugate(conjugate(t, sigma), sigma.inverted()), t)

    def test_size_mismatch(self):
        with self.assertRaises(FuncMapError):
            conjugate(tree([0, 0, 0]), Perm.identity(2))


class TestSquaring(unittest.TestCase):
    """Test cases for squares, squaring chains and edge lists."""

    def test_square_keeps_root(self):
        t = tree([0, 0, 1, 2])
        self.assertEqual(square(t).table, (0, 0, 0, 1))
        self.assertEqual(square(t).root, 0)

    def test_chain_ends_constant(self):
        for n in range(2, 10):
            path = tree([0] + list(range(n - 1)))
            chain = squaring_chain(path)
            self.assertEqual(len(set(chain[-1].table)), 1)
            self.assertLessEqual(len(chain), (n - 2).bit_length() + 1)
            self.assertEqual(chain[-1].table, iterate(path, n - 1).table)

    def test_edge_list(self):
        edges = edge_list(make_func(3, [0, 0, 1]))
        self.assertEqual(edges.edges, ((0, 0), (1, 0), (2, 1)))
        self.assertEqual(len(edges), 3)

    def test_degree(self):
        self.assertEqual(undirected_degree(tree([0, 0, 0])), (2, 1, 1))


def run_zmod_tests():
    """Run all map tests."""
    suite = unittest.TestSuite()

    loader = unittest.TestLoader()
    suite.addTests(loader.loadTestsFromTestCase(TestMakeFunc))
    suite.addTests(loader.loadTestsFromTestCase(TestIterate))
    suite.addTests(loader.loadTestsFromTestCase(TestIsTreeFunc))
    suite.addTests(loader.loadTestsFromTestCase(TestSwapSink))
    suite.addTests(loader.loadTestsFromTestCase(TestConjugate))
    suite.addTests(loader.loadTestsFromTestCase(TestSquaring))

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == '__main__':
    success = run_zmod_tests()
    sys.exit(0 if success else 1)
