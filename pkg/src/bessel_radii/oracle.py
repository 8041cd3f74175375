"""Brute-force cross-checks that share no code path with the series solvers.

N and its derivatives are evaluated here from ``scipy.special.jvp`` (real or
complex argument), zeros come from a vectorised sign scan refined by
``scipy.optimize.brentq``, and sums over zeros are plain ``math.fsum`` calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.special import jvp

from .model import CoefficientTriple, EvaluationContext
from .series import Family, SeriesFamily
from .zeros import ZeroCatalog


@dataclass(frozen=True)
class VerificationReport:
    check: str
    computed: float
    reference: float
    tolerance: float
    passed: bool
    notes: str = ""
    relative: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        kind = "rel" if self.relative else "abs"
        text = (f"[{status}] {self.check}: computed={self.computed!r} reference={self.reference!r} "
                f"tol={self.tolerance:g} ({kind})")
        return text + (f"  # {self.notes}" if self.notes else "")


def compare(check: str, computed, reference, tolerance: float, relative: bool = False,
            notes: str = "") -> VerificationReport:
    computed, reference = float(computed), float(reference)
    err = abs(computed - reference)
    if relative:
        err = err / abs(reference) if reference else err
    return VerificationReport(check, computed, reference, tolerance, bool(err <= tolerance), notes, relative)


# -- N and the family numerators through scipy --------------------------------

def bessel_N(coeffs: CoefficientTriple, nu: float, z, k: int = 0):
    """k-th derivative of a z^2 J'' + b z J' + c J, via scipy.special.jvp."""
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    j0, j1, j2 = jvp(nu, z, k), jvp(nu, z, k + 1), jvp(nu, z, k + 2)
    return (a * (z * z * j2 + 2 * k * z * j1 + k * (k - 1) * j0)
            + b * (z * j1 + k * j0) + c * j0)


def family_numerator(kind: Family, coeffs: CoefficientTriple, nu: float, t):
    """A function with the same positive zeros as ``kind``.

    For HPRIME and THETA ``t`` is sqrt(x); the returned values differ from
    the normalized family only by a factor that does not vanish for t > 0.
    """
    kind = Family(kind)
    n0 = bessel_N(coeffs, nu, t)
    if kind is Family.PSI:
        return n0
    n1 = bessel_N(coeffs, nu, t, 1)
    if kind is Family.PSI1:
        return n1
    if kind is Family.GPRIME:
        return (1 - nu) * n0 + t * n1
    if kind is Family.HPRIME:
        return (2 - nu) * n0 + t * n1
    n2 = bessel_N(coeffs, nu, t, 2)
    if kind is Family.DELTA:
        return t * t * n2 + (3 - 2 * nu) * t * n1 + (1 - nu) ** 2 * n0
    return t * t * n2 + (5 - 2 * nu) * t * n1 + (2 - nu) ** 2 * n0


def oracle_catalog(context: EvaluationContext, kind: Family, count: int,
                   step: float = 0.25, xtol: float = 1e-13) -> ZeroCatalog:
    """First ``count`` positive zeros of a family, located through scipy."""
    kind = Family(kind)
    coeffs, nu = context.coeffs, context.nu

    def f(t):
        return family_numerator(kind, coeffs, nu, t)

    found: list[float] = []
    start = step
    span = (count + abs(nu) + 4) * math.pi
    while len(found) < count:
        ts = np.arange(start, start + span, step)
        vals = f(ts)
        idx = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
        for i in idx:
            found.append(brentq(f, ts[i], ts[i + 1], xtol=xtol, rtol=4 * np.finfo(float).eps))
            if len(found) == count:
                break
        start = ts[-1]
        span = (count - len(found) + 4) * math.pi
    zeros = np.array(found)
    if not kind.squared:
        zeros = zeros * zeros
    return ZeroCatalog(kind, zeros, xtol, float(start))


# -- sums and products over zeros ---------------------------------------------

def _z_abscissae(catalog) -> np.ndarray:
    zeros = np.asarray(catalog.zeros if hasattr(catalog, "zeros") else catalog, dtype=float)
    if hasattr(catalog, "kind") and not Family(catalog.kind).squared:
        return np.sqrt(zeros)
    return zeros


def direct_zero_sum(catalog, power: float, tail: bool = True) -> float:
    """sum zero^-power in the z variable (x-zeros are square-rooted first).

    With ``tail`` the omitted zeros are approximated by a continuum with
    spacing pi beyond the last one: integral of t^-power dt / pi from
    z_N + pi/2.
    """
    z = _z_abscissae(catalog)
    if tail and len(z) < 100:
        raise ValueError("tail correction needs at least 100 zeros")
    total = math.fsum(float(v) ** -power for v in z)
    if tail and power > 1:
        total += (z[-1] + math.pi / 2) ** (1 - power) / (math.pi * (power - 1))
    return total


def product_from_zeros(catalog, z, count: int | None = None):
    """Truncated Weierstrass product prod (1 - w / zero) with w = z^2 or x."""
    zeros = np.asarray(catalog.zeros, dtype=float)[:count]
    if Family(catalog.kind).squared:
        return np.prod(1 - (z * z) / (zeros * zeros))
    return np.prod(1 - z / zeros)


# -- circle sampling ----------------------------------------------------------

def ratio_from_N(context: EvaluationContext, normalization: str, kind: str, z):
    """Starlikeness or convexity ratio of f, g or h built from scipy N.

    For h the argument is x and N is evaluated at sqrt(x) (principal root).
    """
    coeffs, nu = context.coeffs, context.nu
    if normalization == "h":
        s = np.sqrt(z)
        n0, n1, n2 = (bessel_N(coeffs, nu, s, k) for k in range(3))
        if kind == "starlike":
            return 1 - nu / 2 + 0.5 * s * n1 / n0
        return (s * s * n2 + (5 - 2 * nu) * s * n1 + (2 - nu) ** 2 * n0) / (2 * s * n1 + 2 * (2 - nu) * n0)
    n0, n1, n2 = (bessel_N(coeffs, nu, z, k) for k in range(3))
    if kind == "starlike":
        ratio = z * n1 / n0
        return ratio / nu if normalization == "f" else 1 - nu + ratio
    if normalization == "f":
        return 1 + z * n2 / n1 + (1 / nu - 1) * z * n1 / n0
    return (z * z * n2 + (3 - 2 * nu) * z * n1 + (1 - nu) ** 2 * n0) / (z * n1 + (1 - nu) * n0)


def re_ratio_samples(context: EvaluationContext, normalization: str, r: float, samples: int = 720,
                     kind: str = "starlike") -> tuple[np.ndarray, np.ndarray]:
    """Angles and Re of the starlikeness (or convexity) ratio on |z| = r."""
    if samples < 360:
        raise ValueError("samples must be >= 360")
    theta = 2 * np.pi * np.arange(samples) / samples
    z = r * np.exp(1j * theta)
    return theta, ratio_from_N(context, normalization, kind, z).real


def sample_min_re_ratio(context: EvaluationContext, normalization: str, r: float, samples: int = 720,
                        kind: str = "starlike") -> float:
    """min over |z| = r of Re(z f'/f) (or of Re(1 + z f''/f') for ``kind='convex'``)."""
    return float(re_ratio_samples(context, normalization, r, samples, kind)[1].min())


# -- derivative checks ----------------------------------------------------------

def finite_diff_check(fam: SeriesFamily, z: float, step: float = 1e-5, rtol: float = 1e-6) -> VerificationReport:
    """Central difference of the family value against its derivative series."""
    fd = (float(fam.eval(z + step).value) - float(fam.eval(z - step).value)) / (2 * step)
    value, zderiv, _, _ = fam.eval_with_zderiv(z)
    series = zderiv / z
    return compare(f"finite-difference {fam.kind.value} at {z}", series, fd, rtol, relative=True)


def psi1_relation_check(context: EvaluationContext, z: float, step: float = 1e-5,
                        rtol: float = 1e-7) -> VerificationReport:
    """d/dz [z^nu PSI(z)] against nu z^(nu-1) PSI1(z)."""
    psi = SeriesFamily(Family.PSI, context)
    psi1 = SeriesFamily(Family.PSI1, context)
    nu = context.nu

    def phi(t):
        return t**nu * float(psi.eval(t).value)

    fd = (phi(z + step) - phi(z - step)) / (2 * step)
    rel = nu * z ** (nu - 1) * float(psi1.eval(z).value)
    return compare(f"psi1 relation at {z}", rel, fd, rtol, relative=True)


def coefficient_identity_check(context: EvaluationContext, nmax: int = 100) -> list[VerificationReport]:
    """DELTA_n = (2n+1) GPRIME_n and THETA_n = (n+1) HPRIME_n for n <= nmax."""
    fams = {k: SeriesFamily(k, context) for k in Family if k is not Family.PSI1 or context.nu != 0}
    out = []
    for outer, inner, weight in ((Family.DELTA, Family.GPRIME, lambda n: 2 * n + 1),
                                 (Family.THETA, Family.HPRIME, lambda n: n + 1)):
        worst = 0.0
        for n in range(nmax + 1):
            lhs = fams[outer].coefficient(n)
            rhs = weight(n) * fams[inner].coefficient(n)
            if lhs != rhs:
                worst = max(worst, abs(lhs - rhs) / abs(rhs))
        out.append(VerificationReport(f"{outer.value}_n = weight * {inner.value}_n (n <= {nmax})",
                                      worst, 0.0, 4 * np.finfo(float).eps, worst <= 4 * np.finfo(float).eps,
                                      relative=True))
    return out
