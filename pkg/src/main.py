#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# LOGCORR - pair correlations of logarithms of integers
#
# Main entry point for the command-line interface.
#
# Usage:
#   uv run python src/main.py empirical --n 2000 --scaling linear --support -4:4
#   uv run python src/main.py constants --a 1 --b 1 --k 3 --format json
#   uv run python src/main.py verify --suite all --debug
# -----------------------------------------------------------------------------

import logging
import os
import sys
from typing import Optional, Sequence

# Ensure src is in path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from pydantic import ValidationError

from cli import parse_args, run, show_error
from config.errors import CapacityError, ConfigurationError, InvalidParameterError, LogCorrError
from config.logging import setup_logger
from config.run_config import RunConfig


def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        where = ".".join(str(p) for p in item.get("loc", ())) or "config"
        parts.append(f"{where}: {item.get('msg')}")
    return "; ".join(parts)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for LOGCORR; returns the exit status."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags and 0 on --help
        return int(e.code or 0)

    debug = bool(getattr(args, "debug", False))
    setup_logger(level=logging.DEBUG if debug else None)

    try:
        config = RunConfig.from_args(args)
        return run(config)

    except ValidationError as e:
        show_error(_validation_message(e))
        return 2

    except (InvalidParameterError, ConfigurationError) as e:
        show_error(str(e))
        return 2

    except (CapacityError, LogCorrError) as e:
        show_error(str(e))
        return 1

    except KeyboardInterrupt:
        print("\n\n🛑 Cancelled by user.", file=sys.stderr)
        return 1

    except Exception as e:
        show_error(str(e))
        if debug:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
