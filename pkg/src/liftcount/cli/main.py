"""
The ``liftcount`` command.

Results go to stdout; logs, dumps and error messages go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Sequence
from typing import Any, TextIO

import pydantic

from liftcount.cli.config import RunConfig
from liftcount.config import LiftCountSettings, get_settings
from liftcount.counting import Algorithm, CountingEngine, segment_count
from liftcount.errors import ExitCode, LiftCountError, VerificationMismatch
from liftcount.oracle import verify_sequence
from liftcount.syntax import parse_sentence, pretty_print
from liftcount.telemetry import LogContext, LogLevel, clear_log_context, get_logger, set_log_context
from liftcount.types import format_rational

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liftcount",
        description="Exact weighted model counting for two-variable sentences "
        "with linear-order and successor axioms.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    helps = {
        "count": "count models for one domain size",
        "sequence": "count models for a range of domain sizes",
        "verify": "compare an algorithm with the brute-force oracle",
        "bench": "time an algorithm over a range of domain sizes",
    }
    for name, text in helps.items():
        sub = commands.add_parser(name, help=text)
        sub.add_argument("input", help="sentence file")
        sub.add_argument("--n", type=int, help="domain size")
        if name != "count":
            sub.add_argument("--from", dest="start", type=int, help="first domain size")
            sub.add_argument("--to", dest="stop", type=int, help="last domain size (inclusive)")
        sub.add_argument(
            "--algo",
            choices=[a.value for a in Algorithm],
            default=Algorithm.AUTO.value,
            help="counting algorithm (default: auto)",
        )
        sub.add_argument(
            "--fixed-order",
            action="store_true",
            help="fix the linear order to the natural order",
        )
        sub.add_argument("--format", dest="output_format", choices=["plain", "csv", "json"], default="plain")
        sub.add_argument("--dump-cells", action="store_true", help="print 1-types and pair weights")
        sub.add_argument("--dump-normal", action="store_true", help="print the normal form")
        sub.add_argument("--dump-layers", type=int, metavar="M", help="print DP layer M")
        sub.add_argument("--threads", type=int, help="worker processes (overrides LIFTCOUNT_THREADS)")
        sub.add_argument("--verbose", action="store_true", help="debug logging")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse and validate command-line arguments.

    Raises:
        SystemExit: With the usage exit code on invalid arguments
    """
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        raise SystemExit(ExitCode.USAGE if exc.code else ExitCode.OK) from exc
    values = {k: v for k, v in vars(namespace).items() if v is not None}
    try:
        return RunConfig(**values)
    except pydantic.ValidationError as exc:
        print(f"liftcount: error: {_messages(exc)}", file=sys.stderr)
        raise SystemExit(ExitCode.USAGE) from exc


def _messages(exc: pydantic.ValidationError, *, env_prefix: str | None = None) -> str:
    parts = []
    for error in exc.errors():
        message = str(error["msg"]).removeprefix("Value error, ")
        if env_prefix is not None and error["loc"]:
            message = f"{env_prefix}{str(error['loc'][0]).upper()}: {message}"
        parts.append(message)
    return "; ".join(parts)


def _settings_for(config: RunConfig) -> LiftCountSettings:
    settings = get_settings()
    update: dict[str, Any] = {}
    if config.threads is not None:
        update["threads"] = config.threads
    if config.verbose:
        update["log_level"] = LogLevel.DEBUG
    return settings.model_copy(update=update) if update else settings


class _Writer:
    """Formats result rows for one output format."""

    def __init__(
        self,
        output_format: str,
        columns: tuple[str, ...],
        out: TextIO,
        *,
        single: bool = False,
    ) -> None:
        self.format = output_format
        self.single = single
        self.columns = columns
        self.out = out
        self.rows: list[dict[str, Any]] = []
        if output_format == "csv":
            print(",".join(columns), file=out)

    def row(self, *values: Any) -> None:
        if self.format == "json":
            self.rows.append(dict(zip(self.columns, values, strict=True)))
        elif self.format == "plain" and self.single:
            print(values[1], file=self.out)
        else:
            print(",".join(str(v) for v in values), file=self.out)

    def close(self) -> None:
        if self.format != "json":
            return
        payload: Any = self.rows[0] if self.single and len(self.rows) == 1 else self.rows
        print(json.dumps(payload), file=self.out)


def _dump(config: RunConfig, engine: CountingEngine, err: TextIO) -> None:
    if config.dump_normal:
        print("% normal form", file=err)
        print(pretty_print(engine.normal_form.to_sentence()), end="", file=err)
    if config.dump_cells:
        cells = engine.cells
        print(f"% {cells.u} 1-types, {cells.two_table_count} 2-tables", file=err)
        for cell, weight in zip(cells.one_types, cells.weights, strict=True):
            print(f"C{cell.index} w={format_rational(weight)} {cell}", file=err)
        threads = engine.settings.threads
        rows: list[tuple[str, Any]] = []
        if cells.axiom_mode:
            rows = [(f"r{k}", table) for k, table in enumerate(cells.lso_table(threads), start=1)]
        elif not engine.sentence.axioms:
            rows = [("r", cells.plain_table(threads))]
        for label, table in rows:
            for s, row in enumerate(table):
                print(f"{label}[{s}] " + " ".join(format_rational(v) for v in row), file=err)
    if config.dump_layers is not None:
        n = config.sizes[0]
        for layer in engine.layers(n):
            if layer.m != config.dump_layers:
                continue
            print(f"% layer m={layer.m} of n={n}, {len(layer)} states", file=err)
            for (counts, segments), value in layer.states():
                shown = " ".join(f"<{h},{t}>x{c}" for h, t, c in segments)
                print(
                    f"k={list(counts)} g={segment_count(segments)} {shown} h={format_rational(value)}",
                    file=err,
                )
            break


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> ExitCode:
    """Execute one validated invocation.

    Returns:
        The process exit code
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        settings = _settings_for(config)
    except pydantic.ValidationError as exc:
        print(f"liftcount: error: {_messages(exc, env_prefix='LIFTCOUNT_')}", file=err)
        return ExitCode.USAGE
    settings.apply_logging()
    set_log_context(LogContext(sentence=config.input.stem))
    logger.debug("Run configured", command=config.command, algo=config.algo.value, sizes=len(config.sizes))
    try:
        try:
            text = config.input.read_text(encoding="utf-8")
        except OSError as exc:
            print(f"liftcount: error: cannot read {config.input}: {exc.strerror}", file=err)
            return ExitCode.USAGE
        except UnicodeDecodeError as exc:
            print(
                f"liftcount: error: {config.input} is not UTF-8 text: {exc.reason} at byte {exc.start}",
                file=err,
            )
            return ExitCode.PARSE
        engine = CountingEngine(parse_sentence(text), settings, name=config.input.stem)
        algo = engine.resolve(config.algo)
        _dump(config, engine, err)
        return _COMMANDS[config.command](config, engine, algo, out)
    except LiftCountError as exc:
        print(f"liftcount: error: {exc}", file=err)
        if isinstance(exc, VerificationMismatch) and exc.witness:
            print("witness: " + " ".join(exc.witness), file=err)
        return exc.exit_code
    finally:
        clear_log_context()


def _count(config: RunConfig, engine: CountingEngine, algo: Algorithm, out: TextIO) -> ExitCode:
    writer = _Writer(config.output_format, ("n", "value"), out, single=True)
    n = config.sizes[0]
    writer.row(n, format_rational(engine.count(n, algo, config.fixed_order)))
    writer.close()
    return ExitCode.OK


def _sequence(config: RunConfig, engine: CountingEngine, algo: Algorithm, out: TextIO) -> ExitCode:
    writer = _Writer(config.output_format, ("n", "value"), out)
    for n, value in engine.sequence(config.sizes, algo, config.fixed_order):
        writer.row(n, format_rational(value))
    writer.close()
    return ExitCode.OK


def _verify(config: RunConfig, engine: CountingEngine, algo: Algorithm, out: TextIO) -> ExitCode:
    records = verify_sequence(
        engine.sentence,
        config.sizes,
        lambda n: engine.count(n, algo, config.fixed_order),
        config.fixed_order,
        settings=engine.settings,
        workers=engine.settings.threads,
    )
    writer = _Writer(config.output_format, ("n", "value", "models"), out)
    for record in records:
        writer.row(record.n, format_rational(record.actual), record.models)
    writer.close()
    return ExitCode.OK


def _bench(config: RunConfig, engine: CountingEngine, algo: Algorithm, out: TextIO) -> ExitCode:
    writer = _Writer(config.output_format, ("n", "seconds"), out)
    for n in config.sizes:
        start = time.perf_counter()
        engine.count(n, algo, config.fixed_order)
        writer.row(n, f"{time.perf_counter() - start:.6f}")
    writer.close()
    return ExitCode.OK


_COMMANDS = {
    "count": _count,
    "sequence": _sequence,
    "verify": _verify,
    "bench": _bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Console entry point."""
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return int(run(config))
