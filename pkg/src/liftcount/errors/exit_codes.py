"""进程退出码：将错误类别映射到命令行退出码。

Process exit codes.

Every library error class declares the exit code the command-line front end
uses when the error escapes a command.
"""

from __future__ import annotations

from enum import IntEnum


class ExitCode(IntEnum):
    """Exit codes of the ``liftcount`` command."""

    OK = 0
    PARSE = 1
    """Sentence file could not be parsed or validated."""

    INCOMPATIBLE = 2
    """Algorithm incompatible with the declared axioms."""

    MISMATCH = 3
    """Verification found a value differing from the oracle."""

    USAGE = 4
    """Invalid command-line arguments."""

    LIMIT = 5
    """A configured enumeration cap was exceeded."""

    @property
    def description(self) -> str:
        """Short lowercase description used in messages."""
        return self.name.lower()


def from_name(name: str) -> ExitCode:
    """Look up an exit code by (case-insensitive) name.

    Raises:
        KeyError: If no exit code has that name.
    """
    return ExitCode[name.upper()]
