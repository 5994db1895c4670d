"""
Constants package for HarmoniTree.

This package contains all the constants used throughout the toolkit,
organized by category for better maintainability.
"""

from .limits import *
from .checks import *

__all__ = [
    # Search and campaign limits
    'EXACT_SEARCH_CAP', 'ENUMERATION_CAP', 'PERMUTATION_CAP', 'EXHAUSTIVE_CAP',
    'LATTICE_DIRECT_CAP', 'LATTICE_SEARCH_CAP', 'TELESCOPE_CAP', 'ORBIT_SUM_CAP',
    'AUT_ELEMENT_LIMIT', 'HEURISTIC_RESTARTS', 'HEURISTIC_MAX_PASSES',
    'TELESCOPE_POINTS', 'DEFAULT_SEED', 'DEFAULT_JOBS', 'DEFAULT_CACHE_DIR',
    'CHECK_VERSION', 'ENV_CACHE_DIR', 'ENV_JOBS',

    # Enumerations
    'SearchScope', 'SearchMode', 'FactorKind', 'FactorKeying', 'CheckId', 'ALL_CHECKS',
]
