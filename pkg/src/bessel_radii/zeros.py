"""Positive zeros of the series families, by sign-change scan plus bisection."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import PrecisionLoss, ScanExhausted
from .series import Family, SeriesFamily

SCAN_STEP = 0.25
MAX_HALVINGS = 6
# beyond this |z| binary64 cancellation costs more than ~1e-10 in zero location
ACCURATE_BELOW = 20.0


@dataclass(frozen=True)
class ZeroCatalog:
    """Ascending positive zeros of one family.

    Zeros of squared-convention families live in z; those of HPRIME and
    THETA live in the plain variable x (roughly the square of a z-zero).
    """

    kind: Family
    zeros: np.ndarray
    refined_tol: float
    scan_ceiling: float

    def __post_init__(self):
        arr = np.array(self.zeros, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "zeros", arr)

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    @property
    def squared(self) -> bool:
        return Family(self.kind).squared

    @property
    def first(self) -> float:
        return float(self.zeros[0])


def bisect(func: Callable[[float], float], lo: float, hi: float, tol: float,
           flo: float | None = None, max_iter: int = 200) -> tuple[float, float]:
    """Shrink a sign-change bracket [lo, hi] until hi - lo <= tol.

    Returns the final bracket. Raises ValueError if the endpoints do not
    straddle a sign change.
    """
    if flo is None:
        flo = func(lo)
    fhi = func(hi)
    if flo == 0.0:
        return lo, lo
    if fhi == 0.0:
        return hi, hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = func(mid)
        if fmid == 0.0:
            return mid, mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


def _value(fam: SeriesFamily) -> Callable[[float], float]:
    return lambda x: float(fam.eval(x).value)


def find_zeros(fam: SeriesFamily, count: int, tol: float = 1e-13) -> ZeroCatalog:
    """First ``count`` positive zeros of ``fam``.

    The scan runs in z with step 0.25 (for HPRIME/THETA it runs in
    t = sqrt(x) and evaluates at x = t^2, so the step tracks the growing
    spacing of x-zeros). Each sign change is refined by bisection to ``tol``
    in the family's own variable.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if tol < 1e-14:
        raise ValueError("tol must be >= 1e-14")
    f = _value(fam)
    squared = fam.squared
    ceiling = min(10.0 * count * math.pi, fam.context.domain_cap)
    rescan = not fam.context.verified or fam.context.allow_unverified

    def native(t):
        return t if squared else t * t

    zeros: list[float] = []
    t_prev, f_prev = 0.0, 1.0
    f_prev2 = None
    t = 0.0
    while len(zeros) < count:
        t = t_prev + SCAN_STEP
        if t > ceiling:
            raise ScanExhausted(
                f"found {len(zeros)} of {count} zeros of {fam.kind.value} below {ceiling:g}"
            )
        f_here = f(native(t))
        if (rescan and f_prev2 is not None and not zeros_between(f_prev, f_here)
                and not zeros_between(f_prev2, f_prev)):
            # |f| dipping toward zero without a sign flip: maybe two close zeros
            if abs(f_prev) < abs(f_prev2) and abs(f_prev) < abs(f_here):
                for lo, hi in _refine_window(f, native, t_prev - SCAN_STEP, t, MAX_HALVINGS):
                    zeros.append(_refine(f, lo, hi, tol))
        if zeros_between(f_prev, f_here):
            zeros.append(_refine(f, native(t_prev), native(t), tol, f_prev))
        f_prev2, t_prev, f_prev = f_prev, t, f_here
    zeros = sorted(zeros)[:count]
    if native(ACCURATE_BELOW) < zeros[-1]:
        warnings.warn(
            f"{fam.kind.value} zeros beyond |z| = {ACCURATE_BELOW:g} lose accuracy to cancellation "
            "(about 1e-4 near 30, worse beyond)", PrecisionLoss, stacklevel=2)
    return ZeroCatalog(fam.kind, np.array(zeros), tol, t if squared else t * t)


def zeros_between(fa: float, fb: float) -> bool:
    return fa == 0.0 or (fa > 0) != (fb > 0)


def _refine(f, lo, hi, tol, flo=None) -> float:
    lo, hi = bisect(f, lo, hi, tol, flo)
    return 0.5 * (lo + hi)


def _refine_window(f, native, t0, t1, depth):
    """Sign-change sub-brackets of [t0, t1] found by repeated step halving."""
    n = 4
    for _ in range(depth):
        ts = np.linspace(t0, t1, n + 1)
        vals = [f(native(t)) for t in ts]
        found = [(native(ts[i]), native(ts[i + 1])) for i in range(n)
                 if vals[i] != 0.0 and zeros_between(vals[i], vals[i + 1])]
        if found:
            return found
        n *= 2
    return []


@dataclass(frozen=True)
class InterlacingReport:
    passed: bool
    checked: int
    violation_index: int | None = None
    detail: str = ""


def interlacing_check(psi_catalog: ZeroCatalog, psi1_catalog: ZeroCatalog,
                      tol: float = 0.0) -> InterlacingReport:
    """Check lambda'_k < lambda_k < lambda'_{k+1} (1-based k in the report).

    ``psi_catalog`` holds the zeros of N, ``psi1_catalog`` those of N'.
    A pair closer than ``tol`` counts as a violation.
    """
    lam = np.asarray(psi_catalog.zeros)
    lamp = np.asarray(psi1_catalog.zeros)
    n = min(len(lam), len(lamp))
    checked = 0
    for k in range(n):
        checked += 1
        if not lamp[k] < lam[k] - tol:
            return InterlacingReport(False, checked, k + 1,
                                     f"lambda'_{k + 1}={lamp[k]!r} >= lambda_{k + 1}={lam[k]!r}")
        if k + 1 < n:
            checked += 1
            if not lam[k] < lamp[k + 1] - tol:
                return InterlacingReport(False, checked, k + 1,
                                         f"lambda_{k + 1}={lam[k]!r} >= lambda'_{k + 2}={lamp[k + 1]!r}")
    return InterlacingReport(True, checked)
