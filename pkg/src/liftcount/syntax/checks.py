"""
Two-variable fragment check.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from liftcount.errors import TwoVariableError
from liftcount.syntax.ast import VARIABLES, Atom, Forall, subformulas

if TYPE_CHECKING:
    from liftcount.syntax.ast import Sentence


def render_atom(atom: Atom) -> str:
    return f"{atom.predicate}({','.join(atom.args)})"


def check_two_variable(sentence: Sentence) -> None:
    """Reject sentences using a variable other than x and y.

    Re-binding x or y inside its own scope is legal; only the variable names
    matter.

    Raises:
        TwoVariableError: Naming the first offending atom or quantifier
    """
    for node in subformulas(sentence.formula):
        if isinstance(node, Atom):
            extra = [a for a in node.args if a not in VARIABLES]
            if extra:
                raise TwoVariableError(
                    f"Atom {render_atom(node)} uses variable {extra[0]!r}; only x and y are allowed",
                    offending=render_atom(node),
                )
        elif hasattr(node, "var") and node.var not in VARIABLES:
            keyword = "forall" if isinstance(node, Forall) else "exists"
            raise TwoVariableError(
                f"Quantifier '{keyword} {node.var}' binds a variable other than x and y",
                offending=f"{keyword} {node.var}",
            )
