"""
语法模块：两变量句子的抽象语法、解析与打印。

Syntax module: abstract syntax, parsing and printing of two-variable sentences.
"""

from liftcount.syntax.ast import (
    DEFAULT_WEIGHT,
    SWAP_XY,
    VARIABLES,
    And,
    Atom,
    AxiomRole,
    Bottom,
    CardinalityConstraint,
    Comparator,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Predicate,
    Sentence,
    Top,
    Vocabulary,
    Weight,
    atoms,
    check_atoms,
    conjoin,
    conjuncts,
    disjoin,
    free_variables,
    is_quantifier_free,
    map_atoms,
    rename_variables,
    subformulas,
    validate_vocabulary,
    variables,
)
from liftcount.syntax.checks import check_two_variable, render_atom
from liftcount.syntax.parser import parse_formula, parse_sentence
from liftcount.syntax.printer import format_formula, pretty_print

__all__ = [
    "DEFAULT_WEIGHT",
    "SWAP_XY",
    "VARIABLES",
    "And",
    "Atom",
    "AxiomRole",
    "Bottom",
    "CardinalityConstraint",
    "Comparator",
    "Exists",
    "Forall",
    "Formula",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "Predicate",
    "Sentence",
    "Top",
    "Vocabulary",
    "Weight",
    "atoms",
    "check_atoms",
    "check_two_variable",
    "conjoin",
    "conjuncts",
    "disjoin",
    "format_formula",
    "free_variables",
    "is_quantifier_free",
    "map_atoms",
    "parse_formula",
    "parse_sentence",
    "pretty_print",
    "render_atom",
    "rename_variables",
    "subformulas",
    "validate_vocabulary",
    "variables",
]
