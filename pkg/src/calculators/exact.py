"""
Exact labeling search for HarmoniTree.

Depth-first assignment of labels to vertices with branch-and-bound on the number of
distinct additive edge labels.
"""

from typing import List

from ..constants.checks import SearchMode, SearchScope
from ..constants.limits import EXACT_SEARCH_CAP
from ..formulas.labels import edge_sums
from ..formulas.zmod import conjugate
from ..models.errors import LimitExceededError
from ..models.funcmap import TreeFunc
from ..models.perm import Perm
from ..models.results import LabelSearchResult


class ExactLabelSearch:
    """
    Branch-and-bound search for the labeling with the most distinct edge sums.

    Vertices are labeled in index order with labels tried in increasing order. An edge
    is scored as soon as both endpoints carry labels; a branch is cut when the distinct
    sums so far plus the unscored edges cannot beat the best labeling found. Only
    strict improvements replace the best, so the result is the lexicographically
    least optimal labeling.
    """

    def __init__(self, cap: int = EXACT_SEARCH_CAP):
        self.cap = cap
        self.nodes = 0               # partial labelings visited by the last search

    def search(self, t: TreeFunc, scope: SearchScope) -> LabelSearchResult:
        """
        Run the search.

        Args:
            t: Tree-function
            scope: FULL counts all n sums including the loop, NONLOOP the n-1 tree edges

        Returns:
            LabelSearchResult with the optimal labeling as best_sigma

        Raises:
            LimitExceededError: if n exceeds the cap
        """
        n = t.n
        if n > self.cap:
            raise LimitExceededError("Exact labeling search", n, self.cap)

        table = t.table
        edges = [i for i in range(n) if scope is SearchScope.FULL or i != t.root]
        ready: List[List[int]] = [[] for _ in range(n)]
        for i in edges:
            ready[max(i, table[i])].append(i)
        total_edges = len(edges)
        target = total_edges

        labels = [-1] * n
        used = [False] * n
        counts = [0] * n
        state = {'distinct': 0, 'decided': 0, 'best': -1, 'best_labels': None, 'done': False}
        self.nodes = 0

        def assign(v: int):
            if v == n:
                if state['distinct'] > state['best']:
                    state['best'] = state['distinct']
                    state['best_labels'] = tuple(labels)
                    if state['best'] == target:
                        state['done'] = True
                return
            for label in range(n):
                if used[label]:
                    continue
                self.nodes += 1
                used[label] = True
                labels[v] = label
                scored = []
                for i in ready[v]:
                    s = (labels[i] + labels[table[i]]) % n
                    counts[s] += 1
                    if counts[s] == 1:
                        state['distinct'] += 1
                    scored.append(s)
                state['decided'] += len(scored)

                bound = state['distinct'] + total_edges - state['decided']
                if bound > state['best']:
                    assign(v + 1)

                state['decided'] -= len(scored)
                for s in scored:
                    counts[s] -= 1
                    if counts[s] == 0:
                        state['distinct'] -= 1
                used[label] = False
                labels[v] = -1
                if state['done']:
                    return

        assign(0)

        sigma = Perm(n, state['best_labels'])
        profile = edge_sums(conjugate(t, sigma))
        return LabelSearchResult(
            best_sigma=sigma,
            achieved=state['best'],
            scope=scope,
            missing=profile.missing,
            mode=SearchMode.EXACT,
            is_bound=False,
        )
