"""
Base labeling-search class for HarmoniTree.

Contains the LabelSearch class that provides a unified interface over the exact
and heuristic search engines.
"""

from typing import List

from ..constants.checks import SearchMode, SearchScope
from ..constants.limits import EXACT_SEARCH_CAP
from ..models.errors import LimitExceededError
from ..models.funcmap import TreeFunc
from ..models.results import LabelSearchResult


class LabelSearch:
    """
    Maximum-harmony labeling search using strategy pattern.

    Selects between ExactLabelSearch and HeuristicLabelSearch from the requested mode.
    EXACT above the cap is refused rather than silently downgraded.
    """

    def __init__(self, tree: TreeFunc = None, scope: SearchScope = SearchScope.FULL,
                 mode: SearchMode = SearchMode.EXACT, seed: int = None):
        self.tree = tree
        self.scope = scope
        self.mode = mode
        self.seed = seed
        self.cap = EXACT_SEARCH_CAP

        # Engines are imported when needed to avoid circular imports
        self._exact = None
        self._heuristic = None

    def validate_inputs(self) -> List[str]:
        """Validate search parameters before running."""
        errors = []
        if self.tree is None:
            errors.append("A tree-function is required")
        if not isinstance(self.scope, SearchScope):
            errors.append(f"Unknown search scope {self.scope!r}")
        if not isinstance(self.mode, SearchMode):
            errors.append(f"Unknown search mode {self.mode!r}")
        return errors

    def _get_engines(self):
        if self._exact is None:
            from .exact import ExactLabelSearch
            self._exact = ExactLabelSearch(cap=self.cap)
        if self._heuristic is None:
            from .heuristic import HeuristicLabelSearch
            self._heuristic = HeuristicLabelSearch(seed=self.seed)
        return self._exact, self._heuristic

    def _select_engine(self):
        exact, heuristic = self._get_engines()
        if self.mode is SearchMode.EXACT:
            if self.tree.n > self.cap:
                raise LimitExceededError("Exact labeling search", self.tree.n, self.cap)
            return exact
        return heuristic

    def run(self) -> LabelSearchResult:
        """
        Run the selected engine.

        Raises:
            ValueError: if the inputs do not validate
            LimitExceededError: if EXACT is requested above the cap
        """
        errors = self.validate_inputs()
        if errors:
            raise ValueError("; ".join(errors))
        return self._select_engine().search(self.tree, self.scope)


def max_harmony_search(t: TreeFunc, scope: SearchScope = SearchScope.FULL,
                       mode: SearchMode = SearchMode.EXACT, seed: int = None) -> LabelSearchResult:
    """
    Largest number of distinct edge sums over all labelings of t.

    Args:
        t: Tree-function
        scope: FULL (n sums) or NONLOOP (n-1 tree sums)
        mode: EXACT (true maximum, lexicographically least witness) or HEURISTIC (bound)
        seed: Extra seed material for HEURISTIC

    Returns:
        LabelSearchResult
    """
    return LabelSearch(t, scope, mode, seed).run()
