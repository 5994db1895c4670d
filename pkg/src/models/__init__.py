"""
Data models package for HarmoniTree.

Contains the immutable value types (maps, permutations, lattice points), result
records and campaign configuration.
"""

from .errors import *
from .funcmap import FuncMap, TreeFunc, EdgeList
from .perm import Perm, AutGroup, perm_from_sequence
from .lattice import LatticePoint
from .results import (SumProfile, LabelSearchResult, TauReport, TheoremResult,
                      CompositionReport, CertificateResult)
from .campaign import CampaignRecord, CampaignConfig, load_config_file, default_config_path

__all__ = [
    # Errors
    'FuncMapError', 'PermutationError', 'LimitExceededError', 'PreconditionError',
    'NotHarmoniousError', 'UnsupportedModulusError',

    # Value types
    'FuncMap', 'TreeFunc', 'EdgeList', 'Perm', 'AutGroup', 'perm_from_sequence',
    'LatticePoint',

    # Results
    'SumProfile', 'LabelSearchResult', 'TauReport', 'TheoremResult', 'CompositionReport',
    'CertificateResult',

    # Campaign
    'CampaignRecord', 'CampaignConfig', 'load_config_file', 'default_config_path',
]
