"""Symmetric functions of the squared reciprocal zeros 1/lambda_k^2 of N.

The elementary symmetric sums have the closed form

    e_n = sum_{k1<...<kn} 1/(lambda_k1^2 ... lambda_kn^2)
        = Q(2n + nu) / (n! 4^n (nu + 1)_n Q(nu)),

and the power sums s_n = sum_k lambda_k^{-2n} are obtained two ways: as a
Cramer-rule determinant of the triangular Newton system, and by the Newton
recurrence itself. The two must agree to rounding.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameters, PrecisionLoss
from .model import EvaluationContext

MAX_N = 10


def pochhammer(x: float, n: int) -> float:
    return math.prod(x + j for j in range(n))


def elementary_sums(context: EvaluationContext, nmax: int) -> list[float]:
    """[e_1, ..., e_nmax] from the closed form (not from the series recurrence)."""
    nu = context.nu
    q0 = context.Q(nu)
    return [
        context.Q(2 * n + nu) / (math.factorial(n) * 4.0**n * pochhammer(nu + 1, n) * q0)
        for n in range(1, nmax + 1)
    ]


def newton_from_elementary(e: list[float]) -> list[float]:
    """s_n = (-1)^(n-1) n e_n + sum_{j=1}^{n-1} (-1)^(j-1) e_j s_{n-j}."""
    s: list[float] = []
    for n in range(1, len(e) + 1):
        terms = [(-1) ** (n - 1) * n * e[n - 1]]
        terms += [(-1) ** (j - 1) * e[j - 1] * s[n - j - 1] for j in range(1, n)]
        s.append(math.fsum(terms))
    return s


def newton_determinant(c: list[float], n: int) -> float:
    """n-th power sum of reciprocal roots of 1 + c_1 w + c_2 w^2 + ...

    ``c`` is indexed from 1 (``c[0]`` must be 1). The matrix is the unit
    lower-triangular Toeplitz system sum_j c_j p_{k-j} = -k c_k with its last
    column replaced by the right-hand side, so its determinant is p_n.
    """
    m = np.zeros((n, n))
    for k in range(n):
        for i in range(n - 1):
            if k >= i:
                m[k, i] = c[k - i]
        m[k, n - 1] = -(k + 1) * c[k + 1]
    return float(np.linalg.det(m))


def closed_form_sums(context: EvaluationContext) -> dict[int, float]:
    """Literature closed forms for s_1..s_4 (s_4 as printed)."""
    v = context.nu
    q0, q2, q4, q6, q8 = (context.Q(v + 2 * j) for j in range(5))
    p = pochhammer
    prodp = lambda n: math.prod(p(v + 1, j) for j in range(1, n + 1))  # noqa: E731
    s1 = q2 / (4 * p(v + 1, 1) * q0)
    s2 = ((v + 2) * q2**2 - (v + 1) * q0 * q4) / (4**2 * q0**2 * prodp(2))
    s3 = (p(v + 2, 2) * q2 * (2 * (v + 2) * q2**2 - 3 * (v + 1) * q0 * q4)
          + (v + 1) ** 2 * (v + 2) * q0**2 * q6) / (2 * 4**3 * q0**3 * prodp(3))
    s4 = p(v + 2, 2) * (
        6 * (v + 2) * p(v + 2, 3) * q2**4
        - 12 * p(v + 1, 4) * q0 * q2**2 * q4
        + (v + 1) * p(v + 1, 2) * (v + 4) * q0**2 * q2 * (q4 + 3 * q6)
        + (v + 1) ** 2 * q0**2 * (3 * p(v + 2, 2) * q4**2 - p(v + 1, 2) * q0 * q8)
    ) / (6 * 4**4 * q0**4 * prodp(4))
    return {1: s1, 2: s2, 3: s3, 4: s4}


@dataclass(frozen=True)
class SymmetricData:
    e: tuple[float, ...]
    s: tuple[float, ...]
    s_det: tuple[float, ...]
    s_newton: tuple[float, ...]
    s_closed: dict = field(default_factory=dict)
    alternating: bool = False

    def method(self, n: int) -> str:
        return "newton"


def power_sums_det(context: EvaluationContext, nmax: int, alternating: bool = False) -> SymmetricData:
    """Power sums s_1..s_nmax by determinant and by Newton recurrence.

    With ``alternating`` the determinant is built from 4^m e_m, which yields
    sum_k (-4)^n / lambda_k^{2n} instead; ``s_newton`` is scaled the same way
    so the two columns stay comparable.
    """
    if not 1 <= nmax <= MAX_N:
        raise InvalidParameters(f"nmax must be in [1, {MAX_N}]", "nmax")
    e = elementary_sums(context, nmax + 1)
    if alternating:
        c = [1.0] + [4.0**m * e[m - 1] for m in range(1, nmax + 2)]
    else:
        c = [1.0] + [(-1) ** m * e[m - 1] for m in range(1, nmax + 2)]
    s_det = [newton_determinant(c, n) for n in range(1, nmax + 1)]
    s_newton = newton_from_elementary(e[:nmax])
    if alternating:
        s_newton = [(-4.0) ** n * s for n, s in zip(range(1, nmax + 1), s_newton)]
    for n, (d, s) in enumerate(zip(s_det, s_newton), start=1):
        if abs(d - s) > 1e-6 * abs(s):
            warnings.warn(f"s_{n}: determinant and recurrence differ by {abs(d - s):.2e}", PrecisionLoss,
                          stacklevel=2)
    closed = {}
    if not alternating:
        closed = {n: v for n, v in closed_form_sums(context).items() if n <= nmax}
    return SymmetricData(tuple(e[:nmax]), tuple(s_newton), tuple(s_det), tuple(s_newton), closed, alternating)
