"""netconv command line: argument parsing, logging setup and exit codes."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from cli.commands import COMMANDS
from cli.config import CliConfig, Command, parse_z0_list
from config import settings
from core.errors import IncompatiblePoints, NetconvError, RankDeficient, SingularConversion
from core.types import Representation
from oracle.verification import parse_pair
from utils.constants import EXIT_CODES

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-30s | %(message)s"


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the input-error status instead of argparse's 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES.INPUT_ERROR, f"netconv: error[usage]: {message}\n")


def _representation(text: str) -> Representation:
    try:
        return Representation.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _z0(text: str) -> tuple[complex, ...]:
    try:
        return parse_z0_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"bad z0 {text!r}: {e}") from e


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from e


def _pairs(text: str) -> tuple:
    try:
        return tuple(parse_pair(item) for item in text.split(",") if item.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netconv", description="Convert N-port network parameters between representations.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0, help="more logging (-vv for debug)")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="errors only")

    wave = argparse.ArgumentParser(add_help=False)
    wave.add_argument("--z0", type=_z0, help="reference impedance(s), e.g. 50, 50+10j or 50,75")
    wave.add_argument("--convention", choices=["kurokawa", "traveling"], default=settings.default_convention)
    wave.add_argument("--alpha", type=_complex, default=1 + 0j, help="unit phase for the traveling convention")

    written = argparse.ArgumentParser(add_help=False)
    written.add_argument("-o", "--output", type=Path, help="output file (default: standard output)")
    written.add_argument(
        "--format", choices=["ri", "ma", "db"], default=settings.touchstone_format.lower(),
        help="Touchstone number format",
    )

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    convert = sub.add_parser("convert", parents=[wave, written], help="convert a .sNp file")
    convert.add_argument("input", type=Path)
    convert.add_argument("--to", dest="target_rep", type=_representation, required=True)

    show = sub.add_parser("show", parents=[wave], help="print a .sNp file")
    show.add_argument("input", type=Path)
    show.add_argument("--rep", dest="target_rep", type=_representation)

    cascade = sub.add_parser("cascade", parents=[wave, written], help="cascade two-port files in order")
    cascade.add_argument("inputs", type=Path, nargs="+")
    cascade.add_argument("--to", dest="target_rep", type=_representation)

    selftest = sub.add_parser("selftest", help="verify every conversion against the oracle")
    selftest.add_argument("--pairs", type=_pairs, help="comma-separated FROM:TO[:N] pairs, e.g. z:g,s:y")
    selftest.add_argument("--seed", type=int)
    selftest.add_argument("--trials", type=int)
    selftest.add_argument("-o", "--output", type=Path, help="also write the line-oriented report here")
    return parser


def configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def to_config(args: argparse.Namespace) -> CliConfig:
    inputs = getattr(args, "inputs", None) or ([args.input] if getattr(args, "input", None) else [])
    fields = {
        "command": Command(args.command),
        "inputs": tuple(inputs),
        "output": getattr(args, "output", None),
        "target_rep": getattr(args, "target_rep", None),
        "z0": getattr(args, "z0", None),
        "pairs": getattr(args, "pairs", None),
        "seed": getattr(args, "seed", None),
        "trials": getattr(args, "trials", None),
    }
    if hasattr(args, "convention"):
        fields.update(convention=args.convention, alpha=args.alpha)
    if hasattr(args, "format"):
        fields["format"] = args.format.upper()
    return CliConfig(**fields)


def _fail(reason: str, message: str, status: int) -> int:
    sys.stderr.write(f"netconv: error[{reason}]: {message}\n")
    return status


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)

    try:
        config = to_config(args)
        logger.info(f"🚀 netconv {config.command.value}")
        return COMMANDS[config.command.value](config)
    except ValidationError as e:
        first = e.errors()[0]
        return _fail("invalid-arguments", first["msg"], EXIT_CODES.INPUT_ERROR)
    except (SingularConversion, IncompatiblePoints, RankDeficient) as e:
        return _fail(e.reason, str(e), EXIT_CODES.SINGULAR)
    except NetconvError as e:
        return _fail(e.reason, str(e), EXIT_CODES.INPUT_ERROR)
    except OSError as e:
        return _fail("io-error", f"{e.filename or ''}: {e.strerror or e}".lstrip(": "), EXIT_CODES.INPUT_ERROR)
    except ValueError as e:
        return _fail("invalid-input", str(e), EXIT_CODES.INPUT_ERROR)


if __name__ == "__main__":
    sys.exit(main())
