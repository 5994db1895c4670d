"""
Command-line interface for HarmoniTree.

Every subcommand prints one JSON object per result to stdout. Exit status is 0 when
all checks pass, 1 when a check fails (the failing case is dumped verbatim to stderr)
and 2 on usage or input errors.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List

from ..calculators.base import max_harmony_search
from ..calculators.props import props_check
from ..calculators.theorem import (certificate_check, count_harmonious_labelings, hal_enumerate,
                                   theorem_check)
from ..constants.checks import ALL_CHECKS, FactorKeying, SearchMode, SearchScope
from ..constants.limits import ENV_CACHE_DIR, ENV_JOBS
from ..formulas.certificate import orbit_sum_eval, stabilizer_of_P, telescoping_sides
from ..formulas.labels import count_harmonious_permutations
from ..formulas.perms import automorphism_group
from ..formulas.treegen import canonical_code, enumerate_trees
from ..formulas.zmod import edge_list, squaring_chain
from ..models.campaign import REPORT_FORMATS, TREE_SOURCES, CampaignConfig, load_config_file
from ..utils.codec import parse_code, parse_lattice
from .campaign import parse_n_values, run_campaign, telescope_points
from .report import format_failure, write_report

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def emit(obj: Dict[str, Any]):
    sys.stdout.write(json.dumps(obj, separators=(',', ':')) + '\n')


def _perm_code(sigma):
    return sigma.code if sigma is not None else None


# Subcommands

def cmd_enumerate(args) -> int:
    for n in parse_n_values(args.n):
        for t in enumerate_trees(n):
            obj = {'n': n, 'code': t.code, 'canonical': canonical_code(t).text}
            if args.edges:
                obj['edges'] = [list(e) for e in edge_list(t)]
            emit(obj)
    return EXIT_OK


def cmd_search(args) -> int:
    t = parse_code(args.code)
    result = max_harmony_search(t, SearchScope(args.scope), SearchMode(args.mode), args.seed)
    emit({
        'code': t.code,
        'scope': result.scope.value,
        'mode': result.mode.value,
        'achieved': result.achieved,
        'is_bound': result.is_bound,
        'sigma': result.best_sigma.code,
        'missing': result.missing,
    })
    return EXIT_OK


def cmd_theorem(args) -> int:
    t = parse_code(args.code)
    result = theorem_check(t)
    emit({
        'code': t.code,
        'nonloop_max': result.nonloop_max,
        'k': result.k,
        'sigma': _perm_code(result.sigma),
        'direct_k': result.direct_k,
        'completion_k': result.completion_k,
        'strategy_agreement': result.strategy_agreement,
    })
    if result.k is None or not result.strategy_agreement:
        sys.stderr.write(f"FAIL theorem {t.code}\n")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_hal(args) -> int:
    t = parse_code(args.code)
    for sigma, g in hal_enumerate(t):
        emit({'sigma': sigma.code, 'graph': g.code})
    return EXIT_OK


def cmd_count(args) -> int:
    if args.permutations is not None:
        count = count_harmonious_permutations(args.permutations)
        emit({'n': args.permutations, 'harmonious_permutations': count,
              'divisible': count % args.permutations == 0})
        return EXIT_OK if count % args.permutations == 0 else EXIT_FAILURE
    if args.code is None:
        raise ValueError("count needs a tree code or --permutations N")
    t = parse_code(args.code)
    count = count_harmonious_labelings(t)
    emit({'code': t.code, 'hal_count': count, 'divisible': count % t.n == 0})
    return EXIT_OK if count % t.n == 0 else EXIT_FAILURE


def cmd_cert(args) -> int:
    t = parse_code(args.code)
    result = certificate_check(t)
    emit({
        'code': t.code,
        'certified': result.certified,
        'witness': result.witness.code if result.witness is not None else None,
        'nonloop_max': result.nonloop_max,
        'agrees': result.agrees,
    })
    return EXIT_OK if result.agrees else EXIT_FAILURE


def cmd_stabilizer(args) -> int:
    t = parse_code(args.code)
    keying = FactorKeying(args.keying)
    stabilizer = stabilizer_of_P(t, keying)
    matches = stabilizer.element_tables() == automorphism_group(t).element_tables()
    emit({
        'code': t.code,
        'keying': keying.value,
        'order': stabilizer.order,
        'aut_order': automorphism_group(t, with_elements=False).order,
        'matches_aut': matches,
        'elements': [sigma.code for sigma in stabilizer],
    })
    # MONOMIAL keying is exploratory and may legitimately exceed Aut
    if keying is FactorKeying.ORDERED and not matches:
        return EXIT_FAILURE
    return EXIT_OK


def cmd_telescope(args) -> int:
    t = parse_code(args.code)
    if args.point:
        points = [parse_lattice(args.point)]
        if points[0].n != t.n:
            raise ValueError(f"Point {points[0].code} does not match n={t.n}")
    else:
        points = telescope_points(t, {'seed': args.seed, 'points': args.points})

    status = EXIT_OK
    for a in points:
        lhs, rhs = telescoping_sides(t, a)
        obj = {'code': t.code, 'point': a.code, 'lhs': str(lhs), 'rhs': str(rhs), 'equal': lhs == rhs}
        if args.orbit_sum:
            obj['orbit_sum'] = str(orbit_sum_eval(t, a))
        emit(obj)
        if lhs != rhs:
            status = EXIT_FAILURE
    return status


def cmd_props(args) -> int:
    t = parse_code(args.code)
    report = props_check(t)
    emit({
        'code': t.code,
        'translations_ok': report.translations_ok,
        'swap_sink_ok': report.swap_sink_ok,
        'expansion_ok': report.expansion_ok,
        'composition_ok': report.composition_ok,
        'aut_growth_k': report.aut_growth_k,
        'squaring_chain': [s.code for s in squaring_chain(t)],
        'ok': report.ok,
    })
    return EXIT_OK if report.ok else EXIT_FAILURE


def build_campaign_config(args, environ=None) -> CampaignConfig:
    """
    Resolve campaign settings: defaults, then the config file, then environment
    overrides, then command-line flags.
    """
    environ = os.environ if environ is None else environ
    settings = load_config_file(args.config) if args.config else {}
    config = CampaignConfig(**settings)
    if isinstance(config.n_values, (str, int)):
        config.n_values = parse_n_values(str(config.n_values))

    if environ.get(ENV_CACHE_DIR):
        config.cache_dir = environ[ENV_CACHE_DIR]
    if environ.get(ENV_JOBS):
        try:
            config.jobs = int(environ[ENV_JOBS])
        except ValueError:
            logging.warning(f"Ignoring non-integer {ENV_JOBS}={environ[ENV_JOBS]!r}")

    if args.n is not None:
        config.n_values = parse_n_values(args.n)
    if args.trees is not None:
        config.trees = args.trees
    if args.trees_file is not None:
        config.trees_file = args.trees_file
        if args.trees is None:
            config.trees = 'file'
    if args.checks is not None:
        config.checks = [c.strip() for c in args.checks.split(',') if c.strip()]
    if args.out is not None:
        config.out = args.out
    if args.cache_dir is not None:
        config.cache_dir = args.cache_dir
    if args.no_cache:
        config.cache_dir = None
    if args.jobs is not None:
        config.jobs = args.jobs
    if args.seed is not None:
        config.seed = args.seed
    if args.format is not None:
        config.format = args.format
    if args.timings:
        config.timings = True
    if args.points is not None:
        config.points = args.points
    return config


def cmd_campaign(args) -> int:
    config = build_campaign_config(args)
    errors = config.validate()
    if errors:
        for error in errors:
            logging.error(error)
        return EXIT_USAGE

    outcome = run_campaign(config)
    if not write_report(outcome.records, config.out, config.format, config.timings):
        return EXIT_USAGE
    for record in outcome.failures:
        sys.stderr.write(format_failure(record) + '\n')
    sys.stderr.write(outcome.summary() + '\n')
    return EXIT_OK if outcome.passed else EXIT_FAILURE


# Parser

def build_parser() -> argparse.ArgumentParser:
    # Subcommands accept -v too; SUPPRESS keeps them from resetting a -v given earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=argparse.SUPPRESS,
                        help="more logging (-v info, -vv debug)")

    parser = argparse.ArgumentParser(
        prog='harmonitree',
        description="Harmonious labelings of rooted trees over Z/nZ")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="more logging (-v info, -vv debug)")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('enumerate', parents=[common], help="list rooted trees up to isomorphism")
    p.add_argument('n', help="vertex count: 5, 3-9 or 3,5,7")
    p.add_argument('--edges', action='store_true', help="include the ordered edge pairs (i, f(i))")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser('search', parents=[common], help="maximum distinct edge sums")
    p.add_argument('code', help="tree code such as 3:0,0,1")
    p.add_argument('--scope', choices=[s.value for s in SearchScope], default=SearchScope.FULL.value)
    p.add_argument('--mode', choices=[m.value for m in SearchMode], default=SearchMode.EXACT.value)
    p.add_argument('--seed', type=int, default=None)
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser('theorem', parents=[common], help="harmonious rerooting (odd n)")
    p.add_argument('code')
    p.set_defaults(handler=cmd_theorem)

    p = sub.add_parser('hal', parents=[common], help="harmoniously labeled copies of a tree")
    p.add_argument('code')
    p.set_defaults(handler=cmd_hal)

    p = sub.add_parser('count', parents=[common], help="size of the HaL set")
    p.add_argument('code', nargs='?')
    p.add_argument('--permutations', type=int, metavar='N',
                   help="count harmonious permutations of Z_N instead")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser('cert', parents=[common], help="determinantal certificate")
    p.add_argument('code')
    p.set_defaults(handler=cmd_cert)

    p = sub.add_parser('stabilizer', parents=[common], help="relabelings fixing the certificate polynomial")
    p.add_argument('code')
    p.add_argument('--keying', choices=[k.value for k in FactorKeying], default=FactorKeying.ORDERED.value)
    p.set_defaults(handler=cmd_stabilizer)

    p = sub.add_parser('telescope', parents=[common], help="telescoping identity at lattice points")
    p.add_argument('code')
    p.add_argument('--point', help="lattice point such as 3:0,1,1")
    p.add_argument('--points', type=int, default=10, help="seeded points when --point is absent (all points for n <= 3)")
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--orbit-sum', action='store_true',
                   help="also evaluate the orbit sum over S_n / Aut(f^2) at each point")
    p.set_defaults(handler=cmd_telescope)

    p = sub.add_parser('props', parents=[common], help="structural property checks")
    p.add_argument('code')
    p.set_defaults(handler=cmd_props)

    p = sub.add_parser('campaign', parents=[common], help="verification campaign with report")
    p.add_argument('--n', help="vertex counts: 5, 3-9 or 3,5,7")
    p.add_argument('--trees', choices=TREE_SOURCES)
    p.add_argument('--trees-file', help="file of tree codes, one per line")
    p.add_argument('--checks', help=f"comma list of {','.join(ALL_CHECKS)}")
    p.add_argument('--out', help="report path (stdout when absent)")
    p.add_argument('--cache-dir')
    p.add_argument('--no-cache', action='store_true')
    p.add_argument('--jobs', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--config', help="JSON config file; flags win")
    p.add_argument('--format', choices=REPORT_FORMATS)
    p.add_argument('--timings', action='store_true', help="add elapsed_ms to records")
    p.add_argument('--points', type=int, help="telescope points per tree")
    p.set_defaults(handler=cmd_campaign)

    return parser


def dispatch(args) -> int:
    """Run a parsed command, mapping input errors to the usage exit status."""
    try:
        return args.handler(args)
    except ValueError as e:
        # TreeCodeError, LimitExceededError and the other domain errors are ValueErrors
        logging.error(str(e))
        return EXIT_USAGE
    except OSError as e:
        logging.error(f"{e.filename or ''}: {e.strerror or e}")
        return EXIT_USAGE


def main(argv: List[str] = None) -> int:
    args = build_parser().parse_args(argv)
    return dispatch(args)
