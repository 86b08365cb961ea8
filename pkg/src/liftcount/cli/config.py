"""
Validated command-line run configuration.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from liftcount.counting import Algorithm

Command = Literal["count", "sequence", "verify", "bench"]
OutputFormat = Literal["plain", "csv", "json"]


class RunConfig(BaseModel):
    """One ``liftcount`` invocation.

    ``count`` takes a single ``n``; the other commands take either ``n`` or
    an inclusive range ``start..stop``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    input: Path
    n: int | None = Field(default=None, ge=1)
    start: int | None = Field(default=None, ge=1)
    stop: int | None = Field(default=None, ge=1)
    algo: Algorithm = Algorithm.AUTO
    fixed_order: bool = False
    output_format: OutputFormat = "plain"
    dump_cells: bool = False
    dump_normal: bool = False
    dump_layers: int | None = Field(default=None, ge=1)
    threads: int | None = Field(default=None, ge=1)
    verbose: bool = False

    @model_validator(mode="after")
    def _check_sizes(self) -> RunConfig:
        ranged = self.start is not None or self.stop is not None
        if self.command == "count":
            if self.n is None:
                raise ValueError("count needs --n")
            if ranged:
                raise ValueError("count takes --n, not --from/--to")
        elif self.n is not None and ranged:
            raise ValueError("give either --n or --from/--to")
        elif self.n is None:
            if self.start is None or self.stop is None:
                raise ValueError(f"{self.command} needs --n or both --from and --to")
            if self.start > self.stop:
                raise ValueError(f"empty range {self.start}..{self.stop}")
        if self.command == "verify" and self.algo is Algorithm.ORACLE:
            raise ValueError("verify compares an algorithm with the oracle; choose fo2, lso or auto")
        if self.dump_layers is not None and self.dump_layers > self.sizes[0]:
            raise ValueError(f"--dump-layers {self.dump_layers} exceeds n={self.sizes[0]}")
        return self

    @property
    def sizes(self) -> list[int]:
        """Domain sizes in increasing order."""
        if self.n is not None:
            return [self.n]
        assert self.start is not None and self.stop is not None
        return list(range(self.start, self.stop + 1))
