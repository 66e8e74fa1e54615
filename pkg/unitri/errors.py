"""
Exception types shared across unitri.

Everything that signals bad input subclasses ValueError, everything that
signals a computation that could not be completed subclasses ArithmeticError.
"""

from typing import Any, Optional


class AmbientMismatchError(ValueError):
    """Two operands live in polynomial rings with different variable counts."""

    def __init__(self, left: int, right: int):
        super().__init__(f"Mismatched ambient_n: {left} != {right}")
        self.left = left
        self.right = right


class TriangularityError(ValueError):
    """A unitriangular derivation or triangular automorphism invariant is violated."""


class GrammarError(ValueError):
    """Parse error in one of the text grammars."""

    def __init__(self, message: str, text: str, position: int):
        # position is a 0-based offset into text
        before = text[:position]
        self.line = before.count("\n") + 1
        self.column = position - (before.rfind("\n") + 1) + 1
        self.text = text
        self.message = message
        super().__init__(f"{message} at line {self.line}, column {self.column}")


class SchemaError(ValueError):
    """A YAML document does not match the expected structure."""


class NilpotencyCapExceeded(ArithmeticError):
    """ad(g) did not vanish on the argument within the iteration cap."""

    def __init__(self, cap: int):
        super().__init__(f"nilpotency cap exceeded ({cap} iterations)")
        self.cap = cap


class OutsideFiltrationError(ValueError):
    """A derivation has a monomial above the filtration level of a basis."""

    def __init__(self, level: int, term: Any = None):
        message = f"outside filtration level {level}"
        if term is not None:
            message += f": {term}"
        super().__init__(message)
        self.level = level
        self.term = term


class FiltrationNotPreservedError(ValueError):
    """An image of a basis element of N_i escapes N_i."""

    def __init__(self, level: int, witness: Any, image: Any = None):
        super().__init__(f"filtration not preserved at level {level}: image of {witness} is {image}")
        self.level = level
        self.witness = witness
        self.image = image


class GeneratorError(ValueError):
    """phi(d_i) does not have the shape lambda_i d_i + u_i."""

    MESSAGES = {
        "inclusion": "derived-series inclusion violated",
        "not_scalar": "lambda_{index} not scalar - homomorphism law must fail",
        "zero_scalar": "zero leading scalar: not injective",
    }

    def __init__(self, reason: str, index: int, detail: Optional[str] = None):
        message = self.MESSAGES[reason].format(index=index)
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.reason = reason
        self.index = index


class SolverError(ArithmeticError):
    """construct_sigma could not produce a triangular automorphism."""

    MESSAGES = {
        "integrability": "integrability failure",
        "not_realizable": "not realizable in T^n x T_n",
        "consistency": "solver consistency failure",
    }

    def __init__(self, reason: str, detail: Optional[str] = None):
        message = self.MESSAGES[reason]
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.reason = reason
