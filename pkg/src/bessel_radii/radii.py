"""Radii of starlikeness and convexity of order beta for f, g and h.

Each radius is the unique root, below the first zero of the relevant
denominator series, of a defining function that decreases strictly from
1 - beta to -infinity. The root is located by bisection.

====================  ===========================================  ===========
problem               left-hand side at r                          ceiling
====================  ===========================================  ===========
starlike f            (1/nu) rN'/N                                 lambda_1
starlike g            (1 - nu) + rN'/N                             lambda_1
starlike h (x = r)    (1 - nu/2) + sqrt(x) N'(sqrt x) / 2N(sqrt x)  lambda_1^2
convex f              1 + rN''/N' + (1/nu - 1) rN'/N               lambda'_1
convex g              1 + r g''(r) / g'(r)                         delta_1
convex h (x = r)      1 + x h''(x) / h'(x)                         gamma_1
====================  ===========================================  ===========
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameters, ZeroDenominator
from .model import EvaluationContext
from .series import Family, family, log_deriv_N, log_deriv_NP
from .zeros import bisect, find_zeros

NORMALIZATIONS = ("f", "g", "h")
KINDS = ("starlike", "convex")
RADIUS_TOL = 1e-10
ZERO_TOL = 1e-14

_CEILING_FAMILY = {
    ("f", "starlike"): Family.PSI,
    ("g", "starlike"): Family.PSI,
    ("h", "starlike"): Family.PSI,
    ("f", "convex"): Family.PSI1,
    ("g", "convex"): Family.GPRIME,
    ("h", "convex"): Family.HPRIME,
}


@dataclass(frozen=True)
class RadiusQuery:
    normalization: str
    kind: str
    beta: float = 0.0

    def __post_init__(self):
        if self.normalization not in NORMALIZATIONS:
            raise InvalidParameters(f"normalization must be one of {NORMALIZATIONS}", "normalization")
        if self.kind not in KINDS:
            raise InvalidParameters(f"kind must be one of {KINDS}", "kind")
        beta = float(self.beta)
        if not 0.0 <= beta < 1.0:
            raise InvalidParameters(f"beta={beta} outside [0, 1)", "beta-range")
        object.__setattr__(self, "beta", beta)


@dataclass(frozen=True)
class RadiusResult:
    query: RadiusQuery
    radius: float
    bracket: tuple[float, float]
    residual: float
    upper_limit: float

    def echo(self) -> dict:
        return {"normalization": self.query.normalization, "kind": self.query.kind, "beta": self.query.beta}


def _check_query(context: EvaluationContext, query: RadiusQuery) -> None:
    if query.normalization != "f":
        return
    if context.nu == 0.0:
        raise InvalidParameters("f requires nu != 0", "nu-zero")
    if query.kind == "convex" and not context.nu > context.threshold and not context.allow_unverified:
        raise InvalidParameters(
            f"convexity of f requires nu > max(0, nu0) = {context.threshold}", "below-threshold"
        )


@lru_cache(maxsize=1024)
def first_zero(context: EvaluationContext, kind: Family) -> float:
    """First positive zero of a family, refined to ZERO_TOL."""
    return find_zeros(family(context, kind), 1, ZERO_TOL).first


def upper_limit(context: EvaluationContext, query: RadiusQuery) -> float:
    """First zero of the denominator series bounding the radius search."""
    z = first_zero(context, _CEILING_FAMILY[(query.normalization, query.kind)])
    if query.normalization == "h" and query.kind == "starlike":
        return z * z
    return z


def lhs(context: EvaluationContext, normalization: str, kind: str, r: float) -> float:
    """Left-hand side of the defining equation (the quantity compared to beta)."""
    nu = context.nu
    if kind == "starlike":
        if normalization == "f":
            return float(log_deriv_N(context, r)) / nu
        if normalization == "g":
            return 1.0 - nu + float(log_deriv_N(context, r))
        return 1.0 - 0.5 * nu + 0.5 * float(log_deriv_N(context, math.sqrt(r)))
    if normalization == "f":
        return 1.0 + float(log_deriv_NP(context, r)) + (1.0 / nu - 1.0) * float(log_deriv_N(context, r))
    if normalization == "g":
        return 1.0 + float(family(context, Family.GPRIME).log_zderiv(r))
    return 1.0 + float(family(context, Family.HPRIME).log_zderiv(r))


def defining_function(context: EvaluationContext, query: RadiusQuery, r: float) -> float:
    """Left-hand side minus beta; positive below the radius, negative above."""
    _check_query(context, query)
    return lhs(context, query.normalization, query.kind, r) - query.beta


def solve_radius(context: EvaluationContext, query: RadiusQuery, tol: float = RADIUS_TOL) -> RadiusResult:
    _check_query(context, query)
    ceiling = upper_limit(context, query)

    def fn(r):
        return lhs(context, query.normalization, query.kind, r) - query.beta

    # walk toward the ceiling until the defining function turns negative
    lo, flo = 0.0, 1.0 - query.beta
    gap = 0.5 * ceiling
    while True:
        hi = ceiling - gap
        try:
            fhi = fn(hi)
        except ZeroDenominator:
            fhi = -math.inf
        if fhi < 0.0:
            break
        lo, flo = hi, fhi
        gap *= 0.5
        if gap < 1e-15 * ceiling:
            raise ZeroDenominator(f"no sign change below ceiling {ceiling} for {query}")
    lo, hi = bisect(fn, lo, hi, tol, flo)
    radius = 0.5 * (lo + hi)
    return RadiusResult(query, radius, (lo, hi), fn(radius), ceiling)


def starlike_radius(context: EvaluationContext, normalization: str, beta: float = 0.0) -> RadiusResult:
    return solve_radius(context, RadiusQuery(normalization, "starlike", beta))


def convex_radius(context: EvaluationContext, normalization: str, beta: float = 0.0) -> RadiusResult:
    return solve_radius(context, RadiusQuery(normalization, "convex", beta))


def radius(context: EvaluationContext, normalization: str, kind: str, beta: float = 0.0) -> RadiusResult:
    return solve_radius(context, RadiusQuery(normalization, kind, beta))
