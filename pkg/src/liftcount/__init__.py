"""两变量逻辑精确加权模型计数：支持线性序与后继公理的提升计数引擎。

liftcount: exact weighted first-order model counting for two-variable
sentences, with linear-order and successor axioms.

The count is computed on the lifted level, in time polynomial in the domain
size; a brute-force oracle checks it on small domains.
"""

from __future__ import annotations

from liftcount._features import HAS_GMPY2
from liftcount.config import LiftCountSettings, get_settings
from liftcount.counting import Algorithm, CountingEngine, wfomc, wfomc_fo2, wfomc_losucc
from liftcount.errors import AxiomError, ExitCode, LiftCountError, SentenceSyntaxError
from liftcount.normalize import UniversalSentence, normalize
from liftcount.oracle import OracleResult, brute_force_wfomc
from liftcount.syntax import Sentence, parse_sentence, pretty_print
from liftcount.types import Rational, format_rational

__version__ = "0.1.0"

__all__ = [
    # Counting
    "Algorithm",
    "CountingEngine",
    "wfomc",
    "wfomc_fo2",
    "wfomc_losucc",
    # Oracle
    "OracleResult",
    "brute_force_wfomc",
    # Syntax
    "Sentence",
    "UniversalSentence",
    "normalize",
    "parse_sentence",
    "pretty_print",
    # Errors
    "AxiomError",
    "ExitCode",
    "LiftCountError",
    "SentenceSyntaxError",
    # Configuration
    "HAS_GMPY2",
    "LiftCountSettings",
    "get_settings",
    # Numbers
    "Rational",
    "format_rational",
    "__version__",
]
