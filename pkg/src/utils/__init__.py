"""
Utilities package for HarmoniTree.

This package contains the tree-code codec, the campaign result cache and
deterministic seeding.
"""

from .codec import *
from .cache import *
from .seeding import *

__all__ = [
    'TreeCodeError', 'parse_map', 'parse_code', 'parse_perm', 'parse_lattice', 'format_code',
    'read_code_file',
    'ResultCache',
    'derive_seed', 'seeded_rng',
]
