"""
Formulas package for HarmoniTree.

This package contains the pure functions of the toolkit: maps over Z/nZ,
permutations and automorphism groups, rooted tree enumeration, additive edge
labels, and the exact cyclotomic certificate machinery.
"""

from .zmod import *
from .perms import *
from .treegen import *
from .labels import *
from .cyclotomic import *
from .factors import *
from .certificate import *

__all__ = [
    # Maps over Z/nZ
    'make_func', 'iterate', 'is_tree_func', 'swap_sink', 'conjugate', 'edge_list',
    'square', 'squaring_chain', 'undirected_edges', 'undirected_degree',

    # Permutations
    'all_perms', 'automorphism_group', 'coset_transversal',

    # Tree enumeration
    'CanonicalCode', 'subtree_codes', 'canonical_code', 'decode_level_sequence',
    'enumerate_trees', 'random_tree',

    # Edge labels
    'edge_sums', 'distinct_sum_count', 'is_harmonious', 'labeled_sums', 'sum_multiset',
    'right_translate', 'left_translate', 'right_translate_exclusion',
    'expansion_decompose', 'expansion_reconstruct', 'tau_labels',
    'count_harmonious_permutations',

    # Cyclotomic arithmetic
    'Cyclotomic', 'cyclotomic_poly', 'omega_power',

    # Factors
    'Factor', 'FactorMultiset', 'lcm_split', 'gcd_split', 'vandermonde_factors',
    'edge_factors', 'p_factors', 'certificate_factors', 'p_sign',

    # Certificates
    'vanishing_factor', 'eval_P', 'canonical_rep_nonzero', 'determinantal_certificate',
    'stabilizer_of_P', 'PowerSumReport', 'newton_girard', 'power_sum_check',
    'telescoping_sides', 'telescoping_check', 'orbit_sum_eval',
]
