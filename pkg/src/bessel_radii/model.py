"""Parameter validation for N(z) = a z^2 J''(z) + b z J'(z) + c J(z).

Everything downstream is driven by the quadratic weight

    Q(t) = a t (t - 1) + b t + c,

whose values at t = 2n + nu scale the power-series coefficients, and by the
order threshold max(0, nu0) above which all zeros of N are real.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .errors import InvalidParameters, UnverifiedOrder

DEFAULT_TOLERANCE = 1e-15
DEFAULT_MAX_TERMS = 500
DEFAULT_DOMAIN_CAP = 100.0


@dataclass(frozen=True)
class CoefficientTriple:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParameters(f"{name}={value!r} is not finite", "non-finite")
            object.__setattr__(self, name, float(value))

    @property
    def q(self) -> float:
        return self.b - self.a

    def rejection_reason(self) -> str | None:
        """None when admissible, else a human-readable reason."""
        if self.c == 0.0:
            if self.q == 0.0:
                return "inadmissible triple: c = 0 requires a != b"
            return None
        if self.c > 0.0:
            if self.q > 0.0:
                return None
            return "inadmissible triple: c > 0 requires a < b"
        return "inadmissible triple: c must be >= 0"

    @property
    def admissible(self) -> bool:
        return self.rejection_reason() is None

    def Q(self, t):
        return eval_Q(self, t)


def eval_Q(coeffs: CoefficientTriple, t):
    """Return a*t*(t-1) + b*t + c. Works for floats, complex and numpy arrays."""
    return coeffs.a * t * (t - 1) + coeffs.b * t + coeffs.c


@dataclass(frozen=True)
class OrderThreshold:
    """Largest real root of Q (``nu0 is None`` when Q has no real root)."""

    nu0: float | None
    threshold: float

    @property
    def has_real_root(self) -> bool:
        return self.nu0 is not None


def largest_root(coeffs: CoefficientTriple) -> OrderThreshold:
    reason = coeffs.rejection_reason()
    if reason is not None:
        raise InvalidParameters(reason, "inadmissible")
    a, lin, c = coeffs.a, coeffs.q, coeffs.c  # Q(t) = a t^2 + (b - a) t + c
    if a == 0.0:
        nu0 = -c / lin
    else:
        disc = lin * lin - 4.0 * a * c
        if disc < 0.0:
            return OrderThreshold(None, 0.0)
        # cancellation-free pair of roots
        s = math.sqrt(disc)
        big = -0.5 * (lin + math.copysign(s, lin)) if lin != 0.0 else 0.5 * s
        r1 = big / a
        r2 = c / big if big != 0.0 else -r1
        nu0 = max(r1, r2)
    nu0 = nu0 + 0.0  # normalise -0.0
    return OrderThreshold(nu0, max(0.0, nu0))


@dataclass(frozen=True)
class EvaluationContext:
    """Validated (a, b, c, nu) plus the series truncation policy."""

    coeffs: CoefficientTriple
    nu: float
    tolerance: float = DEFAULT_TOLERANCE
    max_terms: int = DEFAULT_MAX_TERMS
    domain_cap: float = DEFAULT_DOMAIN_CAP
    allow_unverified: bool = False
    order: OrderThreshold = field(default=None, compare=False, repr=False)

    @property
    def threshold(self) -> float:
        return self.order.threshold

    @property
    def verified(self) -> bool:
        """True when nu >= max(0, nu0), i.e. all zeros are known to be real."""
        return self.nu >= self.order.threshold

    def Q(self, t):
        return eval_Q(self.coeffs, t)

    @property
    def Q_nu(self) -> float:
        return eval_Q(self.coeffs, self.nu)

    def describe(self) -> dict:
        return {"a": self.coeffs.a, "b": self.coeffs.b, "c": self.coeffs.c, "nu": self.nu}


def validate_context(
    coeffs: CoefficientTriple,
    nu: float,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    max_terms: int = DEFAULT_MAX_TERMS,
    domain_cap: float = DEFAULT_DOMAIN_CAP,
    allow_unverified: bool = False,
) -> EvaluationContext:
    """Build an :class:`EvaluationContext`, raising InvalidParameters on rejection.

    With ``allow_unverified`` an order below the threshold is accepted (a
    :class:`UnverifiedOrder` warning is issued) but Q(nu) = 0 is still fatal.
    """
    nu = float(nu)
    if not math.isfinite(nu):
        raise InvalidParameters(f"order nu={nu!r} is not finite", "non-finite")
    order = largest_root(coeffs)
    if nu < order.threshold:
        if not allow_unverified:
            raise InvalidParameters(
                f"order below threshold: nu={nu} < max(0, nu0)={order.threshold}",
                "below-threshold",
            )
        warnings.warn(
            f"nu={nu} is below max(0, nu0)={order.threshold}; zeros-not-guaranteed-real",
            UnverifiedOrder,
            stacklevel=2,
        )
    if eval_Q(coeffs, nu) == 0.0:
        raise InvalidParameters(f"Q(nu)=0 at nu={nu}", "q-zero")
    if not (tolerance > 0.0) or max_terms < 1 or not (domain_cap > 0.0):
        raise InvalidParameters("tolerance, max_terms and domain_cap must be positive", "policy")
    return EvaluationContext(
        coeffs, nu, float(tolerance), int(max_terms), float(domain_cap), bool(allow_unverified), order
    )


def make_context(a: float, b: float, c: float, nu: float, **policy) -> EvaluationContext:
    """Shorthand for ``validate_context(CoefficientTriple(a, b, c), nu, **policy)``."""
    return validate_context(CoefficientTriple(a, b, c), nu, **policy)
