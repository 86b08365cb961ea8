"""
枚举预言机：在极小论域上穷举解释，作为其余模块的基准真值。

Oracle module: exhaustive enumeration of interpretations on tiny domains,
the ground truth every counting algorithm is checked against.
"""

from liftcount.oracle.brute_force import Interpretation, OracleResult, brute_force_wfomc
from liftcount.oracle.verify import VerificationRecord, verify_sequence

__all__ = [
    "Interpretation",
    "OracleResult",
    "VerificationRecord",
    "brute_force_wfomc",
    "verify_sequence",
]
