"""Root pytest fixtures for liftcount tests."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import pytest
import yaml

from liftcount.config import LiftCountSettings, reset_settings
from liftcount.syntax import Sentence, parse_sentence
from liftcount.telemetry import clear_log_context

FIXTURES = Path(__file__).parent / "fixtures"
SENTENCES = FIXTURES / "sentences"

CORPUS = ("phi1", "phi2", "phi4", "phi5", "phi_train", "top_axioms", "worked_example")


def sentence_path(name: str) -> Path:
    return SENTENCES / f"{name}.fo2"


def load_sentence(name: str) -> Sentence:
    """Parse ``tests/fixtures/sentences/<name>.fo2``."""
    return parse_sentence(sentence_path(name).read_text(encoding="utf-8"))


def load_oeis() -> dict[str, dict[str, Any]]:
    with (FIXTURES / "oeis.yaml").open(encoding="utf-8") as handle:
        data: dict[str, dict[str, Any]] = yaml.safe_load(handle)
    return data


_UNARY_ATOMS = ("U1(x)", "U1(y)", "U2(x)", "U2(y)")
_BINARY_ATOMS = ("R(x,y)", "R(y,x)", "R(x,x)")
_AXIOM_ATOMS = ("L(x,y)", "L(y,x)", "S(x,y)", "S(y,x)")
_WEIGHTS = ("1", "2", "1/2", "-1", "3")


class SentenceGenerator:
    """Seeded random two-variable sentences over U1, U2 and R.

    ``axioms=True`` adds L and S (declared as linear order and successor)
    to the atom pool.
    """

    def __init__(self, seed: int) -> None:
        self.rng = random.Random(seed)

    def _matrix(self, pool: tuple[str, ...], depth: int) -> str:
        if depth == 0 or self.rng.random() < 0.25:
            atom = self.rng.choice(pool)
            return f"~{atom}" if self.rng.random() < 0.4 else atom
        op = self.rng.choice(("&", "|", "->", "<->"))
        left = self._matrix(pool, depth - 1)
        right = self._matrix(pool, depth - 1)
        return f"({left} {op} {right})"

    def text(self, *, axioms: bool = False, existential: bool = False) -> str:
        pool = _UNARY_ATOMS + _BINARY_ATOMS + (_AXIOM_ATOMS if axioms else ())
        matrix = self._matrix(pool, 3)
        if existential:
            formula = self.rng.choice(
                (
                    f"forall x. exists y. {matrix}",
                    f"(forall x. forall y. {self._matrix(pool, 2)}) & (forall x. exists y. {matrix})",
                    f"forall x. (U1(x) | exists y. {matrix})",
                    f"exists x. forall y. {matrix}",
                )
            )
        else:
            formula = f"forall x. forall y. {matrix}"
        lines = [formula]
        if axioms:
            lines += ["#axiom linear_order L", "#axiom successor S"]
        for name in ("U1", "U2", "R"):
            if f"{name}(" in formula and self.rng.random() < 0.5:
                w, wbar = self.rng.choice(_WEIGHTS), self.rng.choice(_WEIGHTS)
                lines.append(f"#weight {name} {w} {wbar}")
        return "\n".join(lines) + "\n"

    def sentence(self, *, axioms: bool = False, existential: bool = False) -> Sentence:
        return parse_sentence(self.text(axioms=axioms, existential=existential))


@pytest.fixture
def corpus() -> Callable[[str], Sentence]:
    """Loader for the sentence corpus."""
    return load_sentence


@pytest.fixture
def sentence_generator() -> Callable[[int], SentenceGenerator]:
    return SentenceGenerator


@pytest.fixture
def settings() -> LiftCountSettings:
    """Serial settings with default oracle caps, independent of the environment."""
    return LiftCountSettings(threads=1, _env_file=None)


@pytest.fixture(autouse=True)
def _isolate_process_state(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    for name in ("LIFTCOUNT_THREADS", "LIFTCOUNT_LOG_LEVEL", "LIFTCOUNT_LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()
    clear_log_context()


def pytest_configure(config: pytest.Config) -> None:
    """Register custom markers."""
    config.addinivalue_line(
        "markers",
        "slow: oracle enumerations and long sequences (deselected by default; run with -m slow)",
    )
