"""Exception and warning types raised across the package."""


class BesselRadiiError(Exception):
    """Base class for all errors raised by bessel_radii."""


class InvalidParameters(BesselRadiiError, ValueError):
    """Rejected coefficient triple, order, or query parameter.

    ``reason`` is a short machine-friendly tag (``"inadmissible"``,
    ``"below-threshold"``, ``"q-zero"``, ``"beta-range"``, ...).
    """

    def __init__(self, message: str, reason: str = "invalid"):
        super().__init__(message)
        self.reason = reason


class DegenerateCoefficient(BesselRadiiError, ArithmeticError):
    """A series coefficient recurrence hit a zero or sign-breaking Q value."""


class TruncationFailure(BesselRadiiError, ArithmeticError):
    """A power series did not converge within ``max_terms``."""


class ZeroDenominator(BesselRadiiError, ZeroDivisionError):
    """A logarithmic derivative was requested at (or too near) a zero."""


class ScanExhausted(BesselRadiiError, RuntimeError):
    """The zero scan reached its ceiling before finding enough zeros."""


class PrecisionLoss(UserWarning):
    """Emitted when binary64 cancellation makes a result untrustworthy."""


class UnverifiedOrder(UserWarning):
    """Order below the real-zero threshold accepted via ``allow_unverified``."""
