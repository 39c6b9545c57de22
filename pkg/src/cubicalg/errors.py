"""Domain errors shared across the algebra, ladder, and operator layers."""


class JacobiViolation(Exception):
    """Structure constants break the Jacobi identity."""


class UnsupportedCase(Exception):
    """No oscillator realization is available for these constants."""


class SingularSystem(Exception):
    """The linear system for the structure function is degenerate."""


class NonPolynomialStructure(Exception):
    """The solved structure function is not a polynomial of bounded degree."""


class ShiftInconsistency(Exception):
    """Recurrence components disagree between level shifts."""


class UnderdeterminedCasimir(Exception):
    """The centralizer conditions leave free casimir coefficients."""


class UnresolvedFactor(Exception):
    """A polynomial kept a factor the exact root search cannot split."""


class NotInSpan(Exception):
    """An operator cannot be written over the requested basis."""


class AmbiguousBasis(Exception):
    """The requested basis is linearly dependent on the target span."""
