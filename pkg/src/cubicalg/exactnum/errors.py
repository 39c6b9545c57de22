"""Errors raised by the exact arithmetic layer."""


class SymbolTableMismatch(Exception):
    """Operands belong to different symbol tables."""


class ExactDivisionError(ArithmeticError):
    """A division that must be exact failed to be exact."""


class PoleError(ArithmeticError):
    """Evaluation hit a zero of a denominator factor."""


class ParseError(ValueError):
    """Expression text violates the grammar.

    Carries the character offset of the problem.
    """

    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


class DegreeBoundExceeded(Exception):
    """Sampled data needs a higher polynomial degree than allowed."""
