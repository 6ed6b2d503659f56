"""Exception types raised by the qmaeur package.

Every error raised on a bad input or a failed numerical contract derives from
QmaeurError, so callers (and the CLI) can catch one type and report a clean
diagnostic instead of a traceback.
"""


class QmaeurError(Exception):
    """Base class for all package errors."""


class NotSquare(QmaeurError):
    """Matrix operation applied to a non-square matrix."""


class NotHermitian(QmaeurError):
    """Matrix fails the Hermitian check within tolerance."""


class NoConvergence(QmaeurError):
    """Iterative eigensolver failed to converge within the sweep cap."""


class InvalidSubsystem(QmaeurError):
    """Subsystem index set is empty, duplicated, or out of range."""


class DimensionMismatch(QmaeurError):
    """Operands live in different Hilbert-space dimensions."""


class OutOfRange(QmaeurError):
    """Scalar parameter outside its documented domain."""


class InvalidDistribution(QmaeurError):
    """Probability vector has negative entries or does not sum to one."""


class DegenerateDraw(QmaeurError):
    """Random draw produced an unusable degenerate value repeatedly."""


class WrongArity(QmaeurError):
    """Bound called with the wrong number of measurements or memories."""


class UnknownProvider(QmaeurError):
    """Named Shannon-bound provider is not registered."""


class UnknownScenario(QmaeurError):
    """Scenario name is not one of the built-in case studies."""


class ParseError(QmaeurError):
    """Input file or command-line expression could not be parsed."""


class ValidationError(QmaeurError):
    """Parsed object violates a structural invariant."""
