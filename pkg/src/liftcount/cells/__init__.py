"""
单元模块：1-类型、2-表与配对权重。

Cells module: 1-types, 2-tables, evaluation and pair weights (r-tables).
"""

from liftcount.cells.evaluate import Assignment, compile_formula, evaluate
from liftcount.cells.rtable import (
    LSO_PATTERNS,
    CellTable,
    RTable,
    compute_r_lso,
    compute_r_plain,
)
from liftcount.cells.types import (
    OneType,
    TwoTable,
    enumerate_one_types,
    enumerate_two_tables,
    one_type_slots,
    one_type_weight,
    reflexive,
    two_table_slots,
)

__all__ = [
    "LSO_PATTERNS",
    "Assignment",
    "CellTable",
    "OneType",
    "RTable",
    "TwoTable",
    "compile_formula",
    "compute_r_lso",
    "compute_r_plain",
    "enumerate_one_types",
    "enumerate_two_tables",
    "evaluate",
    "one_type_slots",
    "one_type_weight",
    "reflexive",
    "two_table_slots",
]
