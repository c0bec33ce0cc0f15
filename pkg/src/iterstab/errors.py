"""Exception types shared across the package."""


class IterstabError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(IterstabError, ValueError):
    pass


class ParseError(IterstabError, ValueError):
    pass


class ReducibleModulusError(IterstabError, ValueError):
    pass


class DegreeCapError(IterstabError, ValueError):
    """An operation would produce a polynomial above the configured degree cap."""


class NotSquarefreeError(IterstabError, ValueError):
    pass


class OracleCapError(IterstabError, ValueError):
    pass


class HypothesisViolation(IterstabError, ValueError):
    """The instance does not satisfy the hypotheses of the statement being checked."""


class NoOddPivotError(IterstabError, ArithmeticError):
    """Elimination modulo 2^k found an even column; the determinant is even."""


class CharacteristicError(IterstabError, ValueError):
    pass


class BudgetExceeded(IterstabError):
    """Raised internally when a time budget runs out."""
