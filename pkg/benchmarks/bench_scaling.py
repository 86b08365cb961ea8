#!/usr/bin/env python3
"""
Scaling benchmarks.

Times the lifted algorithms over growing domain sizes for the sentences in
``benchmark_config.json``, with and without 1-type grouping in the lso DP.
"""

import json
import sys
import time
from pathlib import Path
from typing import Any

from liftcount.config import LiftCountSettings
from liftcount.counting import CountingEngine
from liftcount.syntax import parse_sentence
from liftcount.types import format_rational

HERE = Path(__file__).parent


def load_config(path: Path = HERE / "benchmark_config.json") -> dict[str, Any]:
    with path.open(encoding="utf-8") as handle:
        config: dict[str, Any] = json.load(handle)
    return config


def benchmark_sentence(
    name: str,
    sizes: list[int],
    *,
    sentences: Path,
    settings: LiftCountSettings,
    fixed_order: bool,
    compress: bool = True,
) -> dict[str, Any]:
    """Time one count per size; the engine and its tables are shared."""
    sentence = parse_sentence((sentences / f"{name}.fo2").read_text(encoding="utf-8"))
    engine = CountingEngine(sentence, settings, name=name, compress=compress)

    start = time.perf_counter()
    algo = engine.resolve()
    if sentence.axioms:
        _ = engine.state_space
    else:
        engine.cells.plain_table(settings.threads)
    setup = time.perf_counter() - start

    points = []
    for n in sizes:
        start = time.perf_counter()
        value = engine.count(n, algo, fixed_order)
        points.append(
            {
                "n": n,
                "elapsed_seconds": time.perf_counter() - start,
                "digits": len(format_rational(value)),
            }
        )
    return {
        "name": name,
        "algorithm": algo.value,
        "compress": compress,
        "u": engine.cells.u,
        "setup_seconds": setup,
        "points": points,
    }


def run_benchmarks(config: dict[str, Any]) -> list[dict[str, Any]]:
    """Run all configured benchmarks and print results."""
    print("=" * 60)
    print("Scaling Benchmarks")
    print("=" * 60)
    print()

    settings = LiftCountSettings(threads=config.get("threads", 1), _env_file=None)
    sentences = (HERE / config["sentencesDir"]).resolve()
    results = []
    for run in config["runs"]:
        variants = [True, False] if run.get("compareRaw") else [True]
        for compress in variants:
            result = benchmark_sentence(
                run["sentence"],
                run["sizes"],
                sentences=sentences,
                settings=settings,
                fixed_order=config.get("fixedOrder", True),
                compress=compress,
            )
            results.append(result)
            label = "" if compress else " (ungrouped)"
            print(f"{result['name']}{label}: {result['algorithm']}, u={result['u']}")
            print(f"  Setup: {result['setup_seconds']:.4f}s")
            for point in result["points"]:
                print(f"  n={point['n']:>3}: {point['elapsed_seconds']:.4f}s ({point['digits']} digits)")
            print()
    return results


if __name__ == "__main__":
    path = Path(sys.argv[1]) if len(sys.argv) > 1 else HERE / "benchmark_config.json"
    run_benchmarks(load_config(path))
