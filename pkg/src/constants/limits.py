"""
Search limits and campaign defaults for HarmoniTree.

Exhaustive procedures refuse inputs above these caps instead of running for hours.
"""

# Exhaustive search caps (vertex count n)
EXACT_SEARCH_CAP = 12        # depth-first labeling search
ENUMERATION_CAP = 12         # rooted tree enumeration
PERMUTATION_CAP = 12         # lexicographic S_n streams
EXHAUSTIVE_CAP = 9           # HaL sets, counts, stabilizers, theorem sweeps
LATTICE_DIRECT_CAP = 5       # full Z_n^n scan
LATTICE_SEARCH_CAP = 9       # pruned lattice search
TELESCOPE_CAP = 5            # 2^m - 1 expansion terms, m = (n-1)(n-2)
ORBIT_SUM_CAP = 6

# Automorphism groups larger than this keep generators only
AUT_ELEMENT_LIMIT = 10**5

# Heuristic search
HEURISTIC_RESTARTS = 64
HEURISTIC_MAX_PASSES = 200

# Campaign defaults
TELESCOPE_POINTS = 100
DEFAULT_SEED = 20240601
DEFAULT_JOBS = 1
DEFAULT_CACHE_DIR = ".harmonitree_cache"

# Bump when any check changes meaning; cached results from other versions are misses
CHECK_VERSION = "1.0.0"

# Environment overrides
ENV_CACHE_DIR = "HARMONITREE_CACHE_DIR"
ENV_JOBS = "HARMONITREE_JOBS"
