"""Exception types shared across the package."""


class TropresError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByTropicalZero(TropresError):
    """Tropical division by -inf is undefined."""


class InvalidPolynomial(TropresError):
    """Coefficient vector violates a structural requirement."""


class UnsortedRoots(TropresError):
    """Root list passed where a non-increasing list is required."""


class AssumptionViolated(TropresError):
    """Input fails the simple-nonzero-roots hypothesis of an operation."""


class DegreeZero(TropresError):
    """Operation needs both polynomials to have degree at least one."""


class CapExceeded(TropresError):
    """Enumeration would exceed the configured budget."""


class TropicalZeroResultant(TropresError):
    """The resultant evaluates to -inf; its order is not defined."""


class ZeroPolynomial(TropresError):
    """The zero polynomial has no support."""


class BothZero(TropresError):
    """gcd(0, 0) is undefined."""


class DegenerateDraw(TropresError):
    """Random perturbations kept collapsing; inputs are pathological."""


class PreconditionViolated(TropresError):
    """Arguments do not satisfy the operation's stated precondition."""


class ParseError(TropresError):
    """Malformed polynomial text.

    Carries the byte offset of the offending token and a hint about
    what was expected there.
    """

    def __init__(self, message: str, offset: int, expected: str):
        super().__init__(f"{message} at offset {offset} (expected {expected})")
        self.offset = offset
        self.expected = expected


class LeadingZeroError(TropresError):
    """Leading coefficient must be finite (not -inf)."""
