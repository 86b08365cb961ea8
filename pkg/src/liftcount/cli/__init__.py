"""
命令行模块：count、sequence、verify 与 bench 子命令。

Command-line front end: the count, sequence, verify and bench commands.
"""

from liftcount.cli.config import Command, OutputFormat, RunConfig
from liftcount.cli.main import build_parser, main, parse_args, run

__all__ = [
    "Command",
    "OutputFormat",
    "RunConfig",
    "build_parser",
    "main",
    "parse_args",
    "run",
]
