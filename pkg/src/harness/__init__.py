"""
Harness package for HarmoniTree.

This package contains the verification campaign runner, the report writers and
the command-line interface.
"""

from .campaign import *
from .report import *
from .cli import *

__all__ = [
    # Campaigns
    'CampaignOutcome', 'CampaignRunner', 'run_campaign', 'parse_n_values', 'collect_trees',
    'canonical_representative', 'skip_reason', 'evaluate_check', 'verify_record',

    # Reports
    'record_line', 'write_jsonl', 'write_csv', 'render_report', 'write_report', 'format_failure',

    # Command line
    'build_parser', 'build_campaign_config', 'dispatch', 'main',
    'EXIT_OK', 'EXIT_FAILURE', 'EXIT_USAGE',
]
