"""
Application entry point and startup logic for HarmoniTree.

Contains the start() function: argument parsing, logging setup and dispatch.
"""

import logging
import sys

from .harness.cli import build_parser, dispatch

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int):
    """WARNING by default, INFO with -v, DEBUG with -vv."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def start(argv=None):
    """Start the HarmoniTree command-line application."""
    args = build_parser().parse_args(argv)
    configure_logging(getattr(args, 'verbose', 0))
    sys.exit(dispatch(args))


if __name__ == "__main__":
    start()
