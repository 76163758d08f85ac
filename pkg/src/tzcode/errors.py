"""Exception types raised across the package.

Decoding failures are not exceptions; the decoder reports them as values
(see decoder.DecodeOutcome).  Exceptions here signal contract violations
or impossible requests.
"""


class TZError(Exception):
    """Base class for all package errors."""


class DivisionByZero(TZError, ZeroDivisionError):
    """Division by the zero field element."""


class SingularMatrix(TZError):
    """Matrix inversion requested for a singular matrix."""


class NoSolution(TZError):
    """Linear system is inconsistent."""


class DependentSpan(TZError):
    """Span polynomial requested for linearly dependent generators."""


class UnsupportedCharacteristic(TZError):
    """Construction requires odd q; even characteristic has no valid twist."""


class InvalidParameter(TZError):
    """A supplied code parameter violates one of its invariants."""


class MessageNotInSubfield(TZError):
    """Message entry does not lie in the subfield of linearity."""


class NotACodeword(TZError):
    """Vector passed as a codeword fails the membership test."""


class DependentEvaluationPoints(TZError):
    """Evaluation points for a punctured generator must be independent."""


class LimitCaseInapplicable(TZError):
    """Trace-augmented system only exists for even k."""


class OracleBudgetExceeded(TZError):
    """Brute-force enumeration would exceed the configured budget."""


class SpanDimMismatch(TZError):
    """Span-polynomial system has a solution space of dimension other than one."""


class LocatorSystemInconsistent(TZError):
    """Locator system has no solution, signalling a wrong span estimate."""
