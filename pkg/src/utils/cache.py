"""
Result cache for HarmoniTree campaigns.

Check results are stored as small JSON files addressed by the hash of
(check logic version, check id, canonical tree code, check settings). Checks
whose result does not depend on campaign settings use an empty settings string.
"""

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional

from ..constants.limits import CHECK_VERSION, DEFAULT_CACHE_DIR


class ResultCache:
    """Content-addressed store of per-check results with atomic writes."""

    def __init__(self, base_path: str = None, version: str = CHECK_VERSION):
        """Initialize the cache under base_path (created on first store)."""
        if base_path is None:
            self.base_path = Path.cwd() / DEFAULT_CACHE_DIR
        else:
            self.base_path = Path(base_path)
        self.version = version

    def key(self, check_id: str, code: str, settings: str = '') -> str:
        text = f"{self.version}|{check_id}|{code}|{settings}"
        return hashlib.sha256(text.encode('utf-8')).hexdigest()

    def entry_path(self, check_id: str, code: str, settings: str = '') -> Path:
        return self.base_path / check_id / f"{self.key(check_id, code, settings)}.json"

    @staticmethod
    def encode(entry: Dict[str, Any]) -> bytes:
        """Byte-stable JSON: sorted keys, compact separators."""
        return json.dumps(entry, sort_keys=True, separators=(',', ':')).encode('utf-8')

    def lookup(self, check_id: str, code: str, settings: str = '') -> Optional[Dict[str, Any]]:
        """
        Fetch a stored result.

        Args:
            check_id: Check identifier
            code: Canonical tree code
            settings: Settings the result depends on, e.g. "seed=1;points=100"

        Returns:
            The stored result fields, or None on a miss. Corrupt entries log a
            warning and count as misses; so do entries written by another version.
        """
        path = self.entry_path(check_id, code, settings)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_bytes().decode('utf-8'))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            logging.warning(f"Ignoring corrupt cache entry {path}: {e}")
            return None

        if not isinstance(entry, dict) or not isinstance(entry.get('result'), dict):
            logging.warning(f"Ignoring malformed cache entry {path}")
            return None
        if entry.get('version') != self.version:
            logging.debug(f"Cache entry {path} has version {entry.get('version')}; miss")
            return None
        if (entry.get('check') != check_id or entry.get('code') != code
                or entry.get('settings', '') != settings):
            logging.warning(f"Cache entry {path} does not match {check_id} {code}; ignored")
            return None
        return entry['result']

    def store(self, check_id: str, code: str, result: Dict[str, Any], settings: str = '') -> bool:
        """
        Store a result atomically; concurrent writers of one key leave one well-formed file.

        Returns:
            True if the entry was written, False otherwise
        """
        path = self.entry_path(check_id, code, settings)
        entry = {'version': self.version, 'check': check_id, 'code': code,
                 'settings': settings, 'result': result}
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix='.tmp-', suffix='.json')
            try:
                with os.fdopen(fd, 'wb') as f:
                    f.write(self.encode(entry))
                os.replace(tmp_name, path)
            except BaseException:
                if os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                raise
            return True
        except OSError as e:
            logging.warning(f"Error writing cache entry {path}: {e}")
            return False

    def count_entries(self, check_id: str = None) -> int:
        """Number of stored entries, for one check or all of them."""
        if not self.base_path.exists():
            return 0
        pattern = f"{check_id}/*.json" if check_id else "*/*.json"
        return sum(1 for _ in self.base_path.glob(pattern))
