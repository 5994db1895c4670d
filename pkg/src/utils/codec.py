"""
Tree-code parsing utilities for HarmoniTree.

Provides functions for parsing the text form "n:v0,v1,...,v(n-1)" of maps,
permutations and lattice points, with line and column positions on errors.
"""

import re
from pathlib import Path
from typing import List, Tuple

from ..formulas.zmod import is_tree_func
from ..models.errors import FuncMapError
from ..models.funcmap import FuncMap, TreeFunc
from ..models.lattice import LatticePoint
from ..models.perm import Perm

_DIGITS = re.compile(r'[0-9]+')


class TreeCodeError(ValueError):
    """Exception raised when a tree code cannot be parsed; line and column are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _split_code(text: str, line: int) -> Tuple[int, List[int]]:
    """
    Split "n:v0,...,v(n-1)" into n and the values.

    Examples:
        >>> _split_code("3:0,0,1", 1)
        (3, [0, 0, 1])
    """
    if text is None or not text.strip():
        raise TreeCodeError("Empty tree code", line, 1)
    offset = len(text) - len(text.lstrip())
    body = text.strip()

    head = _DIGITS.match(body)
    if not head:
        raise TreeCodeError(f"Expected vertex count, found {body[0]!r}", line, offset + 1)
    colon = head.end()
    if colon >= len(body) or body[colon] != ':':
        found = repr(body[colon]) if colon < len(body) else "end of line"
        raise TreeCodeError(f"Expected ':' after vertex count, found {found}", line, offset + colon + 1)
    n = int(head.group())
    if n < 1:
        raise TreeCodeError("Vertex count must be positive", line, offset + 1)

    values = []
    position = colon + 1
    for entry in body[colon + 1:].split(','):
        match = _DIGITS.fullmatch(entry)
        if not match:
            bad = next((i for i, ch in enumerate(entry) if not ch.isascii() or not ch.isdigit()), 0)
            what = repr(entry[bad]) if entry else "empty entry"
            raise TreeCodeError(f"Expected a decimal entry, found {what}", line, offset + position + bad + 1)
        value = int(entry)
        if value >= n:
            raise TreeCodeError(f"Entry {value} out of range [0, {n})", line, offset + position + 1)
        values.append(value)
        position += len(entry) + 1

    if len(values) != n:
        raise TreeCodeError(f"Expected {n} entries, found {len(values)}", line, offset + len(body) + 1)
    return n, values


def parse_map(text: str, line: int = 1) -> FuncMap:
    n, values = _split_code(text, line)
    return FuncMap(n, tuple(values))


def parse_code(text: str, line: int = 1) -> TreeFunc:
    """
    Parse a tree code into a TreeFunc.

    Args:
        text: Code such as "3:0,0,1"
        line: Line number reported on errors

    Returns:
        TreeFunc rooted at its unique fixed point

    Raises:
        TreeCodeError: if the text is malformed or the map is not a tree-function
    """
    fm = parse_map(text, line)
    ok, tree = is_tree_func(fm)
    if not ok:
        raise TreeCodeError(f"{fm.code} is not a tree-function", line, 1)
    return tree


def parse_perm(text: str, line: int = 1) -> Perm:
    n, values = _split_code(text, line)
    try:
        return Perm(n, tuple(values))
    except FuncMapError as e:
        raise TreeCodeError(str(e), line, 1) from e


def parse_lattice(text: str, line: int = 1) -> LatticePoint:
    n, values = _split_code(text, line)
    return LatticePoint(n, tuple(values))


def format_code(obj) -> str:
    """Text form of a FuncMap, TreeFunc, Perm or LatticePoint."""
    return obj.code


def read_code_file(path: str) -> List[TreeFunc]:
    """
    Read one tree code per line; blank lines and lines starting with '#' are skipped.

    Raises:
        TreeCodeError: on the first malformed line, with its line number
    """
    trees = []
    with Path(path).open('r', encoding='utf-8') as f:
        for number, raw in enumerate(f, start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith('#'):
                continue
            trees.append(parse_code(raw.rstrip('\n'), number))
    return trees
