"""
Integration test helpers: running the command line in-process.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import pytest

from liftcount.cli import main
from tests.conftest import sentence_path


@dataclass
class CliResult:
    code: int
    stdout: str
    stderr: str


@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., CliResult]:
    """Run ``liftcount`` with corpus names expanded to sentence paths."""

    def run(*args: str) -> CliResult:
        argv = [str(sentence_path(a[1:])) if a.startswith("@") else a for a in args]
        code = main(argv)
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)

    return run
