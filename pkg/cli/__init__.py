"""Command-line interface: convert, show, cascade and selftest."""

from cli.commands import cmd_cascade, cmd_convert, cmd_selftest, cmd_show
from cli.config import CliConfig, Command
from cli.main import build_parser, main

__all__ = [
    "CliConfig", "Command", "build_parser", "cmd_cascade", "cmd_convert", "cmd_selftest",
    "cmd_show", "main",
]
