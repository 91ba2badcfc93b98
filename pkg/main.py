#!/usr/bin/env python3
"""
hypsec - main entry point

Configures logging on standard error and hands the command line to
``src.cli``. Reports are written to standard output or ``--output``.
"""

import logging
import sys

from src.cli import main as cli_main
from src.cli import verbosity_level

logger = logging.getLogger(__name__)


def main(argv=None):
    """Main entry point for the command line."""
    argv = sys.argv[1:] if argv is None else list(argv)
    logging.basicConfig(
        level=verbosity_level(argv),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ]
    )
    logger.debug(f"Starting hypsec with arguments {argv}")
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
