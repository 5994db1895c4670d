"""
Verification campaigns for HarmoniTree.

Runs the requested checks on one representative per isomorphism class, reusing
cached results, and assembles one CampaignRecord per tree in canonical order.
"""

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..calculators.exact import ExactLabelSearch
from ..calculators.props import props_check
from ..calculators.theorem import certificate_check, count_harmonious_labelings, theorem_check
from ..constants.checks import ALL_CHECKS, CheckId, SearchScope
from ..constants.limits import EXHAUSTIVE_CAP, LATTICE_SEARCH_CAP, TELESCOPE_CAP
from ..formulas.certificate import stabilizer_of_P, telescoping_check
from ..formulas.labels import is_harmonious
from ..formulas.perms import automorphism_group
from ..formulas.treegen import canonical_code, decode_level_sequence, enumerate_trees
from ..formulas.zmod import conjugate, swap_sink
from ..models.campaign import CampaignConfig, CampaignRecord
from ..models.errors import PreconditionError
from ..models.funcmap import TreeFunc
from ..models.lattice import LatticePoint
from ..utils.cache import ResultCache
from ..utils.codec import parse_code, parse_perm, read_code_file
from ..utils.seeding import seeded_rng


@dataclass
class CampaignOutcome:
    records: List[CampaignRecord]

    @property
    def failures(self) -> List[CampaignRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return (f"{len(self.records)} trees, {len(self.records) - len(self.failures)} passed, "
                f"{len(self.failures)} failed")


def parse_n_values(text: str) -> List[int]:
    """
    Parse "5", "3-9" or "3,5,7" (ranges and lists may be mixed).

    Raises:
        ValueError: on malformed input
    """
    values = []
    for part in str(text).split(','):
        part = part.strip()
        if not part:
            raise ValueError(f"Empty item in n list {text!r}")
        if '-' in part:
            low, _, high = part.partition('-')
            low, high = int(low), int(high)
            if low > high:
                raise ValueError(f"Empty n range {part!r}")
            values.extend(range(low, high + 1))
        else:
            values.append(int(part))
    return sorted(set(values))


def canonical_representative(t: TreeFunc) -> TreeFunc:
    """The tree enumerate_trees emits for the isomorphism class of t."""
    return decode_level_sequence(canonical_code(t).code)


def collect_trees(config: CampaignConfig) -> List[TreeFunc]:
    """
    One canonical representative per isomorphism class, ordered by (n, canonical code).

    With a tree file, trees whose n is not in n_values are dropped and duplicates
    up to isomorphism are merged.
    """
    if config.trees == 'file':
        wanted = set(config.n_values)
        classes = {}
        for t in read_code_file(config.trees_file):
            if t.n in wanted:
                code = canonical_code(t)
                classes.setdefault(code, canonical_representative(t))
        return [classes[code] for code in sorted(classes)]
    return [t for n in sorted(config.n_values) for t in enumerate_trees(n)]


def skip_reason(check_id: str, n: int) -> Optional[str]:
    """Why a check does not apply at this n, or None."""
    if check_id == CheckId.THEOREM:
        if n % 2 == 0:
            return "needs odd n"
        if n > EXHAUSTIVE_CAP:
            return f"n above {EXHAUSTIVE_CAP}"
    if check_id == CheckId.CERT and n > LATTICE_SEARCH_CAP:
        return f"n above {LATTICE_SEARCH_CAP}"
    if check_id == CheckId.STABILIZER:
        if n == 2:
            return "edge product is empty at n=2"
        if n > EXHAUSTIVE_CAP:
            return f"n above {EXHAUSTIVE_CAP}"
    if check_id in (CheckId.DIVISIBILITY, CheckId.PROPS) and n > EXHAUSTIVE_CAP:
        return f"n above {EXHAUSTIVE_CAP}"
    if check_id == CheckId.TELESCOPE and n > TELESCOPE_CAP:
        return f"n above {TELESCOPE_CAP}"
    return None


def check_settings(check_id: str, options: Dict[str, Any]) -> str:
    """Campaign settings a check result depends on, as part of its cache key."""
    if check_id == CheckId.TELESCOPE:
        return f"seed={options['seed']};points={options['points']}"
    return ''


def telescope_points(t: TreeFunc, options: Dict[str, Any]) -> List[LatticePoint]:
    """
    Lattice points for the telescoping check.

    Every point when there are at most 27; otherwise options['points'] seeded samples
    alternating between permutation exponent vectors and uniform ones. Both sides
    vanish at any point with a repeated exponent.
    """
    n = t.n
    if n ** n <= 27:
        return [LatticePoint(n, p) for p in itertools.product(range(n), repeat=n)]
    rng = seeded_rng(options['seed'], CheckId.TELESCOPE, t.code)
    points = []
    for index in range(options['points']):
        if index % 2 == 0:
            exponents = list(range(n))
            rng.shuffle(exponents)
        else:
            exponents = [rng.randrange(n) for _ in range(n)]
        points.append(LatticePoint(n, tuple(exponents)))
    return points


def evaluate_check(check_id: str, t: TreeFunc, options: Dict[str, Any]) -> Tuple[Dict[str, Any], bool]:
    """
    Run one check on one tree.

    Returns:
        (record fields, failed)
    """
    search = ExactLabelSearch()

    if check_id == CheckId.SUMMARY:
        nonloop = search.search(t, SearchScope.NONLOOP).achieved
        fields = {'aut_order': automorphism_group(t, with_elements=False).order,
                  'nonloop_max': nonloop}
        return fields, nonloop > t.n - 1

    if check_id == CheckId.THEOREM:
        result = theorem_check(t, search)
        verified = False
        if result.k is not None:
            verified = is_harmonious(conjugate(swap_sink(t, result.k), result.sigma))
        fields = {'harmonious_k': result.k if verified else None,
                  'sigma': result.sigma.code if verified else None,
                  'strategy_agreement': result.strategy_agreement}
        return fields, not (verified and result.strategy_agreement)

    if check_id == CheckId.CERT:
        result = certificate_check(t, search)
        return {'certificate': result.certified}, not result.agrees

    if check_id == CheckId.STABILIZER:
        stabilizer = stabilizer_of_P(t)
        matches = stabilizer.element_tables() == automorphism_group(t).element_tables()
        return {'stabilizer_matches': matches}, not matches

    if check_id == CheckId.DIVISIBILITY:
        count = count_harmonious_labelings(t)
        return {'hal_count': count}, count % t.n != 0

    if check_id == CheckId.PROPS:
        report = props_check(t, search)
        if not report.ok:
            logging.warning(f"Property failures on {t.code}: {', '.join(report.problems())}")
        return {'props_ok': report.ok}, not report.ok

    if check_id == CheckId.TELESCOPE:
        ok = all(telescoping_check(t, a) for a in telescope_points(t, options))
        return {'telescope_ok': ok}, not ok

    raise PreconditionError(f"Unknown check {check_id!r}")


def _run_check(check_id: str, code: str, options: Dict[str, Any]) -> Tuple[Dict[str, Any], bool, int]:
    """Process-pool entry point: rebuilds the tree from its code and times the check."""
    started = time.perf_counter()
    fields, failed = evaluate_check(check_id, parse_code(code), options)
    return fields, failed, int((time.perf_counter() - started) * 1000)


class CampaignRunner:
    """Schedules check work items, consults the cache, and merges results into records."""

    def __init__(self, config: CampaignConfig, cache: Optional[ResultCache] = None):
        self.config = config
        self.cache = cache
        self.options = {'seed': config.seed, 'points': config.points}

    def _work_items(self, trees: List[TreeFunc]) -> List[Tuple[int, str]]:
        items = []
        warned = set()
        for index, t in enumerate(trees):
            items.append((index, CheckId.SUMMARY))
            for check_id in ALL_CHECKS:
                if check_id not in self.config.checks:
                    continue
                reason = skip_reason(check_id, t.n)
                if reason:
                    if (check_id, t.n) not in warned:
                        logging.warning(f"Skipping {check_id} for n={t.n}: {reason}")
                        warned.add((check_id, t.n))
                    continue
                items.append((index, check_id))
        return items

    def run(self) -> CampaignOutcome:
        trees = collect_trees(self.config)
        items = self._work_items(trees)
        results: Dict[Tuple[int, str], Tuple[Dict[str, Any], bool, int]] = {}

        pending = []
        for index, check_id in items:
            code = trees[index].code
            settings = check_settings(check_id, self.options)
            cached = self.cache.lookup(check_id, code, settings) if self.cache else None
            if cached is not None:
                logging.debug(f"Cache hit: {check_id} {code}")
                results[(index, check_id)] = (cached['fields'], cached['failed'], 0)
            else:
                pending.append((index, check_id))

        if self.config.jobs > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
                futures = {key: pool.submit(_run_check, key[1], trees[key[0]].code, self.options)
                           for key in pending}
                for key, future in futures.items():
                    results[key] = future.result()
                    self._finish(trees, key, results[key])
        else:
            for key in pending:
                results[key] = _run_check(key[1], trees[key[0]].code, self.options)
                self._finish(trees, key, results[key])

        records = [self._assemble(index, t, results) for index, t in enumerate(trees)]
        return CampaignOutcome(records)

    def _finish(self, trees, key, result):
        index, check_id = key
        fields, failed, elapsed = result
        code = trees[index].code
        logging.info(f"{check_id} {code}: {'FAIL' if failed else 'ok'} ({elapsed} ms)")
        if self.cache:
            self.cache.store(check_id, code, {'fields': fields, 'failed': failed},
                             settings=check_settings(check_id, self.options))

    def _assemble(self, index: int, t: TreeFunc, results) -> CampaignRecord:
        summary, _, elapsed = results[(index, CheckId.SUMMARY)]
        record = CampaignRecord(n=t.n, tree_code=t.code, **summary)
        failed_checks = []
        for check_id in ALL_CHECKS:
            if (index, check_id) not in results:
                continue
            fields, failed, spent = results[(index, check_id)]
            for name, value in fields.items():
                setattr(record, name, value)
            elapsed += spent
            if failed:
                failed_checks.append(check_id)
        record.failed_checks = failed_checks
        if self.config.timings:
            record.elapsed_ms = elapsed
        return record


def run_campaign(config: CampaignConfig) -> CampaignOutcome:
    """
    Run a campaign described by a validated config.

    Raises:
        ValueError: if the config does not validate
    """
    errors = config.validate()
    if errors:
        raise ValueError("; ".join(errors))
    cache = ResultCache(config.cache_dir) if config.cache_dir else None
    return CampaignRunner(config, cache).run()


def verify_record(record: CampaignRecord) -> bool:
    """Re-run the theorem witness of a record on its tree code."""
    if record.harmonious_k is None:
        return True
    t = parse_code(record.tree_code)
    sigma = parse_perm(record.sigma)
    return is_harmonious(conjugate(swap_sink(t, record.harmonious_k), sigma))
