"""
规范化模块：Skolem 化并转换为全称对形式。

Normalization module: Skolemization and the universal pair form.
"""

from liftcount.normalize.nnf import is_nnf, negate, to_nnf
from liftcount.normalize.skolem import SKOLEM_WEIGHT, close, skolemize
from liftcount.normalize.universal import (
    UniversalSentence,
    augment_axioms,
    normalize,
    to_universal_pair_form,
)

__all__ = [
    "SKOLEM_WEIGHT",
    "UniversalSentence",
    "augment_axioms",
    "close",
    "is_nnf",
    "negate",
    "normalize",
    "skolemize",
    "to_nnf",
    "to_universal_pair_form",
]
