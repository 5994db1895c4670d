"""
Calculators package for HarmoniTree.

This package contains the search engines and the checks built on them: labeling
searches, near-harmonious completion, HaL sets and the theorem check.
"""

from .base import LabelSearch, max_harmony_search
from .exact import ExactLabelSearch
from .heuristic import HeuristicLabelSearch
from .theorem import (complete_near_harmonious, hal_enumerate, count_harmonious_labelings,
                      theorem_check, certificate_check, composition_lemma_check,
                      aut_growth_witness)
from .props import (PropsReport, translation_invariance, swap_sink_invariance,
                    expansion_round_trip, props_check)

__all__ = [
    'LabelSearch',
    'max_harmony_search',
    'ExactLabelSearch',
    'HeuristicLabelSearch',
    'complete_near_harmonious',
    'hal_enumerate',
    'count_harmonious_labelings',
    'theorem_check',
    'certificate_check',
    'composition_lemma_check',
    'aut_growth_witness',
    'PropsReport',
    'translation_invariance',
    'swap_sink_invariance',
    'expansion_round_trip',
    'props_check',
]
