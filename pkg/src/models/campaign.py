"""
Campaign data models for HarmoniTree.

Provides the per-tree report record and the campaign configuration, with JSON
loading of configuration files.
"""

import json
import logging
import os
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional

from ..constants.checks import ALL_CHECKS
from ..constants.limits import DEFAULT_CACHE_DIR, DEFAULT_JOBS, DEFAULT_SEED, TELESCOPE_POINTS

REPORT_FORMATS = ('jsonl', 'csv')
TREE_SOURCES = ('enumerate', 'file')


@dataclass
class CampaignRecord:
    """
    One report line: every check outcome for one isomorphism class of rooted trees.

    Optional fields stay None when the corresponding check was not requested.
    ``elapsed_ms`` is only written when timings are enabled.
    """
    n: int
    tree_code: str
    aut_order: int
    nonloop_max: int
    harmonious_k: Optional[int] = None
    sigma: Optional[str] = None
    certificate: Optional[bool] = None
    strategy_agreement: Optional[bool] = None
    stabilizer_matches: Optional[bool] = None
    hal_count: Optional[int] = None
    props_ok: Optional[bool] = None
    telescope_ok: Optional[bool] = None
    failed_checks: List[str] = field(default_factory=list)
    elapsed_ms: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failed_checks

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        """Field-ordered dictionary; drops elapsed_ms unless timings are requested."""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        if not timings:
            data.pop('elapsed_ms')
        data['failed_checks'] = list(self.failed_checks)
        return data

    @classmethod
    def field_names(cls, timings: bool = False) -> List[str]:
        names = [f.name for f in fields(cls)]
        if not timings:
            names.remove('elapsed_ms')
        return names

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CampaignRecord':
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


@dataclass
class CampaignConfig:
    """Everything a campaign run needs; built from a config file, then overridden by flags."""
    n_values: List[int] = field(default_factory=lambda: [3, 5])
    trees: str = 'enumerate'
    trees_file: Optional[str] = None
    checks: List[str] = field(default_factory=lambda: list(ALL_CHECKS))
    out: Optional[str] = None
    cache_dir: Optional[str] = DEFAULT_CACHE_DIR
    jobs: int = DEFAULT_JOBS
    seed: int = DEFAULT_SEED
    format: str = 'jsonl'
    timings: bool = False
    points: int = TELESCOPE_POINTS

    def validate(self) -> List[str]:
        """
        Check the configuration for usage errors.

        Returns:
            List of error messages (empty if valid)
        """
        errors = []

        if not self.n_values:
            errors.append("At least one value of n is required")
        for n in self.n_values:
            if not isinstance(n, int) or n < 1:
                errors.append(f"n must be a positive integer, got {n!r}")

        if self.trees not in TREE_SOURCES:
            errors.append(f"Tree source must be one of {', '.join(TREE_SOURCES)}, got {self.trees!r}")
        elif self.trees == 'file' and not self.trees_file:
            errors.append("Tree source 'file' needs a tree-code file")

        unknown = [c for c in self.checks if c not in ALL_CHECKS]
        if unknown:
            errors.append(f"Unknown checks: {', '.join(unknown)}")

        if self.jobs < 1:
            errors.append(f"Job count must be at least 1, got {self.jobs}")
        if self.format not in REPORT_FORMATS:
            errors.append(f"Report format must be one of {', '.join(REPORT_FORMATS)}, got {self.format!r}")
        if self.points < 1:
            errors.append(f"Telescope points must be positive, got {self.points}")

        return errors


def default_config_path() -> str:
    return os.path.join(os.path.dirname(__file__), "..", "..", "data", "campaign.json")


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Load campaign settings from a JSON file.

    Unreadable or malformed files are logged and treated as empty, like a missing file.
    Unknown keys are dropped with a warning.
    """
    if not os.path.exists(path):
        logging.warning(f"Config file not found: {path}")
        return {}
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logging.warning(f"Error loading config {path}: {e}")
        return {}
    if not isinstance(data, dict):
        logging.warning(f"Config {path} is not a JSON object; ignored")
        return {}

    known = {f.name for f in fields(CampaignConfig)}
    settings = {}
    for key, value in data.items():
        if key in known:
            settings[key] = value
        else:
            logging.warning(f"Ignoring unknown config key {key!r} in {path}")
    return settings
