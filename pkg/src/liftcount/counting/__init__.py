"""
计数模块：无公理两变量句子的闭式求和，以及线性序与后继公理下的分段动态规划。

Counting module: the closed-form sum for axiom-free sentences, the segment
DP under linear-order and successor axioms, and the engine selecting between
them.
"""

from liftcount.counting.cardinality import apply_cardinality_filter, predicate_count
from liftcount.counting.compositions import CountVector, compositions, multinomial
from liftcount.counting.engine import Algorithm, CountingEngine, wfomc
from liftcount.counting.fo2 import count_vector_weight, wfomc_fo2
from liftcount.counting.losucc import (
    Behavior,
    BehaviorKind,
    DpLayer,
    StateSpace,
    dp_step,
    gamma,
    init_layer,
    lambda_weight,
    run_layers,
    segment_count,
    wfomc_losucc,
)

__all__ = [
    "Algorithm",
    "Behavior",
    "BehaviorKind",
    "CountVector",
    "CountingEngine",
    "DpLayer",
    "StateSpace",
    "apply_cardinality_filter",
    "compositions",
    "count_vector_weight",
    "dp_step",
    "gamma",
    "init_layer",
    "lambda_weight",
    "multinomial",
    "predicate_count",
    "run_layers",
    "segment_count",
    "wfomc",
    "wfomc_fo2",
    "wfomc_losucc",
]
