"""Main entry point for the AC context detector command line."""

import logging
import sys
from typing import List, Optional

from config import EXIT_CONFIG_ERROR
from errors import ConfigError
from harness.cli import build_parser, dispatch

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """Configure root logging once for a CLI run.

    Args:
        verbose: Log at DEBUG instead of INFO
        log_file: Optional file that receives the log in addition to stderr
    """
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, set up logging and run the selected subcommand.

    Returns:
        Process exit code (0 ok, 1 configuration error, 2 data error)
    """
    try:
        args = build_parser().parse_args(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    configure_logging(args.verbose, args.log_file)
    logger.debug(f"Running command {args.command}")
    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
