"""v6forge command-line entry point."""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger

from .. import __version__
from ..exceptions import (
    AllRatesZero,
    ConfigError,
    EmptyCandidates,
    EmptySeedSet,
    ModelError,
    SampleExceedsUniverse,
    TooFewGroups,
    V6ForgeError,
)
from .commands import COMMANDS, run_command
from .config import load_config

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_MODEL = 4

CONFIG_ERRORS = (
    ConfigError,
    TooFewGroups,
    EmptySeedSet,
    EmptyCandidates,
    AllRatesZero,
    SampleExceedsUniverse,
)

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="v6forge",
        description="IPv6 target generation with a gated convolutional VAE",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=list(COMMANDS), help="pipeline stage to run")
    parser.add_argument("--config", type=Path, help="key = value configuration file")
    parser.add_argument("--seed", type=int, help="global rng_seed (overrides the config)")
    parser.add_argument("--out", type=Path, default=Path("."), help="output directory")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override one config key (repeatable)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parser


def configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO", format=LOG_FORMAT)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    Exit codes: 0 success, 1 other v6forge error, 2 configuration or
    input-set error, 3 I/O error, 4 unusable model file.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = load_config(args.config, args.overrides, args.seed)
        manifest = run_command(args.command, config, args.out)
    except CONFIG_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_CONFIG
    except ModelError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_MODEL
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO
    except V6ForgeError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE

    logger.info(f"{args.command}: {len(manifest.outputs)} artifacts in {manifest.out_dir}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
