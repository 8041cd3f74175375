"""Normalized entire-series evaluators for N(z) and the functions built from it.

Six families share one base coefficient

    base_n = (-1)^n Q(2n + nu) / (n! 4^n (nu + 1)_n Q(nu)),

multiplied by a per-family weight:

=========  ==============  ==========  ==================================
kind       weight          variable    function
=========  ==============  ==========  ==================================
PSI        1               z^2         2^nu Gamma(nu+1) N(z) / (Q(nu) z^nu)
PSI1       (2n + nu)/nu    z^2         same normalization applied to N'(z)
GPRIME     2n + 1          z^2         g'(z),  g(z) = z PSI(z)
HPRIME     n + 1           x           h'(x),  h(x) = x PSI(sqrt x)
DELTA      (2n + 1)^2      z^2         (z g'(z))'
THETA      (n + 1)^2       x           (x h'(x))'
=========  ==============  ==========  ==================================

All six start at 1 and alternate in sign, so every quantity needed by the
radius problems is a ratio of two such series and no fractional power of z
is ever formed.
"""

from __future__ import annotations

import cmath
import enum
import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateCoefficient, InvalidParameters, TruncationFailure, ZeroDenominator
from .model import EvaluationContext

CANCELLATION_FACTOR = 1e6
TINY = 1e-300


class Family(str, enum.Enum):
    PSI = "psi"
    PSI1 = "psi1"
    GPRIME = "gprime"
    HPRIME = "hprime"
    DELTA = "delta"
    THETA = "theta"

    @property
    def squared(self) -> bool:
        """True when the series runs in powers of z^2, False for powers of x."""
        return self not in (Family.HPRIME, Family.THETA)

    def weight(self, n: int, nu: float) -> float:
        if self is Family.PSI:
            return 1.0
        if self is Family.PSI1:
            return (2 * n + nu) / nu
        if self is Family.GPRIME:
            return 2 * n + 1.0
        if self is Family.HPRIME:
            return n + 1.0
        if self is Family.DELTA:
            return (2 * n + 1.0) ** 2
        return (n + 1.0) ** 2


@dataclass(frozen=True)
class RatioValue:
    """A series value (or ratio of series) with truncation diagnostics."""

    value: complex | float
    residual_terms: int
    cancellation_flag: bool = False

    def __float__(self) -> float:
        if isinstance(self.value, complex):
            return self.value.real
        return float(self.value)


class SeriesFamily:
    """One normalized series with a lazily grown coefficient cache."""

    def __init__(self, kind: Family | str, context: EvaluationContext):
        self.kind = Family(kind)
        self.context = context
        if self.kind is Family.PSI1 and context.nu == 0.0:
            raise InvalidParameters("the N' normalization divides by nu; nu = 0 is not allowed", "nu-zero")
        self._base = [1.0]
        self._ratio = [1.0]  # base_n / base_{n-1}, finite even where base_n underflows
        self._coeffs = [1.0]
        self._lock = threading.Lock()

    def __repr__(self):
        return f"SeriesFamily({self.kind.value!r}, nu={self.context.nu}, coeffs={self.context.coeffs})"

    @property
    def squared(self) -> bool:
        return self.kind.squared

    def _extend(self, n: int) -> None:
        ctx = self.context
        nu = ctx.nu
        with self._lock:
            base = self._base
            while len(base) <= n:
                k = len(base) - 1
                q_here = ctx.Q(2 * k + nu)
                if q_here == 0.0:
                    raise DegenerateCoefficient(f"Q(2*{k} + nu) = 0 at nu={nu}")
                q_next = ctx.Q(2 * k + 2 + nu)
                ratio = (-0.25) * q_next / (q_here * (k + 1) * (k + 1 + nu))
                self._ratio.append(ratio)
                base.append(base[-1] * ratio)
                self._coeffs.append(base[-1] * self.kind.weight(k + 1, nu))

    def coefficient(self, n: int) -> float:
        if n < 0:
            raise IndexError("coefficient index must be >= 0")
        if n >= len(self._coeffs):
            self._extend(n)
        return self._coeffs[n]

    def coefficients(self, count: int) -> list[float]:
        if count > len(self._coeffs):
            self._extend(count - 1)
        return self._coeffs[:count]

    def _check_domain(self, z) -> None:
        size = abs(z) if self.squared else math.sqrt(abs(z))
        if size > self.context.domain_cap:
            raise InvalidParameters(
                f"|z|={size:g} exceeds domain_cap={self.context.domain_cap:g}", "domain"
            )

    def _sum(self, z, with_deriv: bool):
        """Kahan-compensated value (and z d/dz) of the series at z."""
        self._check_domain(z)
        if z == 0:
            return 1.0, 0.0, 1, False
        w = z * z if self.squared else z
        # the largest term sits near n ~ sqrt|w| / 2; never stop before it
        peak = 0.5 * math.sqrt(abs(w)) + 2
        dscale = 2 if self.squared else 1
        tol = self.context.tolerance
        s, comp = 1.0, 0.0
        ds, dcomp = 0.0, 0.0
        mag = 1.0
        scaled = 1.0  # base_n * w^n, carried by ratios so neither factor overflows
        nu = self.context.nu
        weight = self.kind.weight
        quiet = 0
        n = 0
        while True:
            n += 1
            if n >= self.context.max_terms:
                raise TruncationFailure(
                    f"{self.kind.value} series at z={z} did not converge in {self.context.max_terms} terms"
                )
            if n >= len(self._ratio):
                self._extend(n)
            scaled = scaled * self._ratio[n] * w
            term = scaled * weight(n, nu)
            y = term - comp
            t = s + y
            comp = (t - s) - y
            s = t
            mag += abs(term)
            dterm = 0.0
            if with_deriv:
                dterm = dscale * n * term
                y = dterm - dcomp
                t = ds + y
                dcomp = (t - ds) - y
                ds = t
            small = abs(term) <= tol * abs(s) and (not with_deriv or abs(dterm) <= tol * abs(ds))
            if term == 0 or (small and n > peak):
                quiet += 1
                if quiet >= 2:
                    break
            else:
                quiet = 0
        flag = mag > CANCELLATION_FACTOR * abs(s)
        return s, ds, n + 1, flag

    def eval(self, z) -> RatioValue:
        """Value of the series at z (powers of z^2 or of x depending on kind)."""
        value, _, terms, flag = self._sum(z, False)
        return RatioValue(value, terms, flag)

    def eval_with_zderiv(self, z):
        """Return ``(F(z), z F'(z), terms, cancellation_flag)``."""
        return self._sum(z, True)

    def log_zderiv(self, z) -> RatioValue:
        """z F'(z) / F(z) for this family."""
        value, zd, terms, flag = self._sum(z, True)
        if abs(value) < TINY:
            raise ZeroDenominator(f"{self.kind.value} vanishes at z={z}")
        return RatioValue(zd / value, terms, flag)


@lru_cache(maxsize=512)
def family(context: EvaluationContext, kind: Family | str) -> SeriesFamily:
    """Shared :class:`SeriesFamily` per (context, kind) so caches are reused."""
    return SeriesFamily(Family(kind), context)


def coefficient(fam: SeriesFamily, n: int) -> float:
    return fam.coefficient(n)


def log_deriv_N(context: EvaluationContext, z) -> RatioValue:
    """z N'(z) / N(z), computed as nu + z PSI'(z) / PSI(z)."""
    r = family(context, Family.PSI).log_zderiv(z)
    return RatioValue(context.nu + r.value, r.residual_terms, r.cancellation_flag)


def log_deriv_NP(context: EvaluationContext, z) -> RatioValue:
    """z N''(z) / N'(z), computed as (nu - 1) + z PSI1'(z) / PSI1(z)."""
    r = family(context, Family.PSI1).log_zderiv(z)
    return RatioValue(context.nu - 1.0 + r.value, r.residual_terms, r.cancellation_flag)


def normalized_value(context: EvaluationContext, normalization: str, z):
    """Value of the normalized function g or h (or f) at z.

    g and h are plain power series. f(z) = z * PSI(z)**(1/nu) uses the
    principal power, so it is only trustworthy where PSI stays off the
    negative real axis; :func:`bessel_radii.mapping.boundary_curve` unwraps the phase along a
    circle instead of calling this for f.
    """
    psi = family(context, Family.PSI)
    if normalization == "g":
        return z * psi.eval(z).value
    if normalization == "h":
        return z * psi.eval(cmath.sqrt(z) if isinstance(z, complex) else math.sqrt(z)).value
    if normalization == "f":
        if context.nu == 0.0:
            raise InvalidParameters("f is undefined for nu = 0", "nu-zero")
        return z * complex(psi.eval(z).value) ** (1.0 / context.nu)
    raise InvalidParameters(f"unknown normalization {normalization!r}", "normalization")
