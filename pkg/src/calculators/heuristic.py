"""
Heuristic labeling search for HarmoniTree.

Random restarts with swap-neighborhood hill climbing. The result is a lower bound on
the optimum, flagged as such.
"""

import logging
import random
from typing import List, Optional

from ..constants.checks import SearchMode, SearchScope
from ..constants.limits import HEURISTIC_MAX_PASSES, HEURISTIC_RESTARTS
from ..formulas.labels import edge_sums
from ..formulas.zmod import conjugate
from ..models.funcmap import TreeFunc
from ..models.perm import Perm
from ..models.results import LabelSearchResult
from ..utils.seeding import derive_seed


class HeuristicLabelSearch:
    """
    Hill climbing over vertex labelings.

    Each restart starts from a random labeling and applies the best label swap of a
    pass until no swap improves the distinct-sum count. The random source is seeded
    from the tree code, so equal trees give equal results.
    """

    def __init__(self, restarts: int = HEURISTIC_RESTARTS, max_passes: int = HEURISTIC_MAX_PASSES,
                 seed: Optional[int] = None):
        self.restarts = restarts
        self.max_passes = max_passes
        self.seed = seed

    @staticmethod
    def _score(t: TreeFunc, edges: List[int], labels: List[int]) -> int:
        n = t.n
        return len({(labels[i] + labels[t.table[i]]) % n for i in edges})

    def search(self, t: TreeFunc, scope: SearchScope) -> LabelSearchResult:
        n = t.n
        edges = [i for i in range(n) if scope is SearchScope.FULL or i != t.root]
        target = len(edges)
        rng = random.Random(derive_seed(t.code, scope.value, self.seed))

        best_labels = list(range(n))
        best = self._score(t, edges, best_labels)

        for restart in range(self.restarts):
            if best == target:
                break
            labels = list(range(n))
            rng.shuffle(labels)
            score = self._score(t, edges, labels)

            for _ in range(self.max_passes):
                move = None
                move_score = score
                for a in range(n):
                    for b in range(a + 1, n):
                        labels[a], labels[b] = labels[b], labels[a]
                        candidate = self._score(t, edges, labels)
                        labels[a], labels[b] = labels[b], labels[a]
                        if candidate > move_score:
                            move, move_score = (a, b), candidate
                if move is None:
                    break
                a, b = move
                labels[a], labels[b] = labels[b], labels[a]
                score = move_score

            if score > best:
                best, best_labels = score, list(labels)
                logging.debug(f"Heuristic restart {restart} on {t.code}: {best}/{target}")

        sigma = Perm(n, tuple(best_labels))
        return LabelSearchResult(
            best_sigma=sigma,
            achieved=best,
            scope=scope,
            missing=edge_sums(conjugate(t, sigma)).missing,
            mode=SearchMode.HEURISTIC,
            is_bound=True,
        )
