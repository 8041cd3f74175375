"""Euler-Rayleigh sums of zeros and the radius brackets they give.

For a normalized family F(w) = sum c_n w^n = prod (1 - w / zeta_n), the
power sums p_k = sum zeta_n^{-k} follow from the coefficients by Newton's
identities

    p_k = -k c_k - sum_{j=1}^{k-1} c_j p_{k-j}.

For squared-convention families w = z^2, so p_k = sum z_n^{-2k}; for HPRIME
and THETA w = x and p_k = sum x_n^{-k}. Since p_k^{-1/k} < zeta_1 < p_k/p_{k+1},
every k gives a bracket on the first zero, which is the beta = 0 radius:

    starlike_g -> GPRIME,   starlike_h -> HPRIME,
    convex_g   -> DELTA,    convex_h   -> THETA.

Hand-derived closed forms for k <= 3 from the literature live in
``REFERENCE_FORMS``; :func:`audit_report` compares them against the Newton
values and never substitutes them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameters, PrecisionLoss
from .model import EvaluationContext
from .series import Family, SeriesFamily, family

MAX_K = 12
DEFAULT_KMAX = 4
PRECISION_LIMIT = 1e-6
EPS = np.finfo(float).eps

TARGET_FAMILY = {
    "starlike_g": Family.GPRIME,
    "starlike_h": Family.HPRIME,
    "convex_g": Family.DELTA,
    "convex_h": Family.THETA,
}
FAMILY_SYMBOL = {Family.GPRIME: "sigma", Family.HPRIME: "rho", Family.DELTA: "kappa", Family.THETA: "omega",
                 Family.PSI: "s", Family.PSI1: "s'"}


def newton_power_sums(coeffs, kmax: int) -> tuple[list[float], list[float]]:
    """Power sums p_1..p_kmax of reciprocal roots of sum coeffs[n] w^n (coeffs[0] = 1).

    Also returns, per k, a running absolute error estimate that accounts for
    the error carried in from earlier sums.
    """
    p: list[float] = []
    err: list[float] = []
    for k in range(1, kmax + 1):
        terms = [-k * coeffs[k]] + [-coeffs[j] * p[k - j - 1] for j in range(1, k)]
        value = math.fsum(terms)
        carried = sum(abs(coeffs[j]) * err[k - j - 1] for j in range(1, k))
        p.append(value)
        err.append(EPS * sum(abs(t) for t in terms) + carried)
    return p, err


@dataclass(frozen=True)
class EulerRayleighSums:
    kind: Family
    values: tuple[float, ...]
    source: str = "coefficient_recurrence"
    reference: dict = field(default_factory=dict)
    relative_error: tuple[float, ...] = ()

    def __getitem__(self, k: int) -> float:
        """1-based access: sums[k] is the k-th power sum."""
        if k < 1:
            raise IndexError("Euler-Rayleigh sums are 1-based")
        return self.values[k - 1]

    @property
    def power(self) -> int:
        return 2 if Family(self.kind).squared else 1


def coefficient_sums(fam: SeriesFamily, kmax: int = DEFAULT_KMAX) -> EulerRayleighSums:
    """Euler-Rayleigh sums of the zeros of ``fam`` via Newton's identities.

    For k <= 3 the literature closed forms (when one exists for the family)
    are evaluated as well and stored in ``reference``.
    """
    if not 1 <= kmax <= MAX_K:
        raise InvalidParameters(f"kmax must be in [1, {MAX_K}]", "kmax")
    coeffs = fam.coefficients(kmax + 1)
    values, err = newton_power_sums(coeffs, kmax)
    rel = tuple(e / abs(v) if v else math.inf for e, v in zip(err, values))
    worst = max(rel)
    if worst > PRECISION_LIMIT:
        warnings.warn(
            f"{fam.kind.value} Euler-Rayleigh sums up to k={kmax}: estimated relative error {worst:.1e}",
            PrecisionLoss,
            stacklevel=2,
        )
    reference = {}
    forms = REFERENCE_FORMS.get(fam.kind)
    if forms:
        for k in range(1, min(kmax, 3) + 1):
            reference[k] = forms[k](fam.context)
    return EulerRayleighSums(fam.kind, tuple(values), "coefficient_recurrence", reference, rel)


def rayleigh_S5_S6(context: EvaluationContext) -> tuple[float, float]:
    """Closed forms of sum lambda^-2 and sum lambda^-4 over the zeros of N."""
    nu = context.nu
    q0, q2, q4 = context.Q(nu), context.Q(nu + 2), context.Q(nu + 4)
    s5 = q2 / (4 * (nu + 1) * q0)
    s6 = (q2 * q2 / ((nu + 1) * q0) - q4 / (nu + 2)) / (16 * (nu + 1) * q0)
    return s5, s6


@dataclass(frozen=True)
class BoundBracket:
    k: int
    lower: float
    upper: float

    def contains(self, value: float) -> bool:
        return self.lower < value < self.upper


@dataclass(frozen=True)
class BoundBrackets:
    target: str
    brackets: tuple[BoundBracket, ...]
    kreyszig_todd: float | None = None

    def __iter__(self):
        return iter(self.brackets)

    def __getitem__(self, k: int) -> BoundBracket:
        return self.brackets[k - 1]


def bound_brackets(context: EvaluationContext, target: str, kmax: int = DEFAULT_KMAX) -> BoundBrackets:
    """Euler-Rayleigh brackets on the beta = 0 radius for k = 1..kmax.

    Starlike targets also carry the k-independent Kreyszig-Todd upper bound
    (1 / sqrt(2 S) for g, 1 / S for h, with S = sum lambda^-2).
    """
    if target not in TARGET_FAMILY:
        raise InvalidParameters(f"target must be one of {tuple(TARGET_FAMILY)}", "target")
    if not 1 <= kmax < MAX_K:
        raise InvalidParameters(f"kmax must be in [1, {MAX_K - 1}]", "kmax")
    sums = coefficient_sums(family(context, TARGET_FAMILY[target]), kmax + 1)
    out = []
    for k in range(1, kmax + 1):
        lo = sums[k] ** (-1.0 / k)
        hi = sums[k] / sums[k + 1]
        if sums.power == 2:
            lo, hi = math.sqrt(lo), math.sqrt(hi)
        out.append(BoundBracket(k, lo, hi))
    kt = None
    if target.startswith("starlike"):
        s5, _ = rayleigh_S5_S6(context)
        kt = 1.0 / math.sqrt(2.0 * s5) if target == "starlike_g" else 1.0 / s5
    return BoundBrackets(target, tuple(out), kt)


# -- closed forms as as printed (kept verbatim, errors included) --

def _qs(ctx: EvaluationContext):
    v = ctx.nu
    return v, ctx.Q(v), ctx.Q(v + 2), ctx.Q(v + 4), ctx.Q(v + 6)


def _gprime_ref(k):
    def form(ctx):
        v, q0, q2, q4, q6 = _qs(ctx)
        if k == 1:
            return 3 * q2 / (4 * (v + 1) * q0)
        if k == 2:
            return (9 * (v + 2) * q2**2 - 5 * (v + 1) * q0 * q4) / (16 * (v + 1) ** 2 * (v + 2) * q0**2)
        return (54 * (v + 2) * (v + 3) * q2**3 - 45 * (v + 1) ** 2 * (v + 3) * q0 * q2 * q4
                + 7 * (v + 1) ** 2 * q0**2 * q6) / (128 * (v + 1) ** 3 * (v + 2) * (v + 3) * q0**3)
    return form


def _hprime_ref(k):
    def form(ctx):
        v, q0, q2, q4, q6 = _qs(ctx)
        if k == 1:
            return q2 / (2 * (v + 1) * q0)
        if k == 2:
            return (q2**2 / ((v + 1) * q0) - 3 * q4 / (4 * (v + 2))) / (4 * (v + 1) * q0)
        return (8 * q2**3 - 9 * (v + 1) * q0 * q2 * q4 / (v + 2)
                + 2 * (v + 1) ** 2 * q0**2 * q6 / ((v + 2) * (v + 3))) / (64 * (v + 1) ** 3 * q0**3)
    return form


def _delta_ref(k):
    def form(ctx):
        v, q0, q2, q4, q6 = _qs(ctx)
        if k == 1:
            return 9 * q2 / (4 * (v + 1) * q0)
        if k == 2:
            return (81 * (v + 2) * q2**2 - 25 * (v + 1) * q0 * q4) / (16 * (v + 1) ** 2 * (v + 2) * q0)
        return (27 * (v + 3) * q2 * (54 * (v + 2) * q2**2 - 25 * (v + 1) ** 2 * q0 * q4)
                + 49 * (v + 1) ** 2 * q0**2 * q6) / (128 * (v + 1) ** 3 * (v + 2) * (v + 3) * q0**3)
    return form


def _theta_ref(k):
    def form(ctx):
        v, q0, q2, q4, q6 = _qs(ctx)
        if k == 1:
            return q2 / ((v + 1) * q0)
        if k == 2:
            return (16 * (v + 2) * q2**2 - 9 * q0 * q4) / (16 * (v + 1) * (v + 2) * q0**2)
        return (32 * q2**3 - 27 * (v + 1) ** 2 * q0 * q2 * q4 / (v + 2)
                + 4 * (v + 1) ** 2 * q0**2 * q6 / ((v + 2) * (v + 3))) / (32 * (v + 1) ** 3 * q0**3)
    return form


REFERENCE_FORMS = {
    Family.GPRIME: {k: _gprime_ref(k) for k in (1, 2, 3)},
    Family.HPRIME: {k: _hprime_ref(k) for k in (1, 2, 3)},
    Family.DELTA: {k: _delta_ref(k) for k in (1, 2, 3)},
    Family.THETA: {k: _theta_ref(k) for k in (1, 2, 3)},
}


def _root(x: float, n: int = 2) -> float:
    return x ** (1.0 / n) if x >= 0 else math.nan


def _reference_bounds(ctx: EvaluationContext) -> dict:
    """Printed radius bounds keyed by (target, label); nan where a root goes negative."""
    v, q0, q2, q4, q6 = _qs(ctx)
    g2 = 9 * (v + 2) * q2**2 - 5 * (v + 1) * q0 * q4
    h2 = q2**2 / ((v + 1) * q0) - 3 * q4 / (4 * (v + 2))
    d2 = 81 * (v + 2) * q2**2 - 25 * (v + 1) * q0 * q4
    t2 = 16 * (v + 2) * q2**2 - 9 * q0 * q4
    return {
        ("starlike_g", "kreyszig_todd upper"): _root(2 * (v + 1) * q0 / q2),
        ("starlike_g", "k=1 lower"): 2 * _root((v + 1) * q0 / (3 * q2)),
        ("starlike_g", "k=1 upper"): 2 * _root(q2 / (3 * q2**2 / ((v + 1) * q0) - 5 * q2 / (3 * (v + 2)))),
        ("starlike_g", "k=2 lower"): _root(16 * (v + 1) ** 2 * (v + 2) * q0**2 / g2, 4),
        ("starlike_g", "k=2 upper"): _root(
            8 * (v + 1) * (v + 3) * q0 * g2
            / (9 * (v + 3) * q2 * (6 * (v + 2) * q2**2 - 5 * (v + 1) ** 2 * q0 * q4)
               + 7 * (v + 1) ** 2 * q0**2 * q6)),
        ("starlike_h", "kreyszig_todd upper"): 2 * (v + 1) * q0 / q2,
        ("starlike_h", "k=1 lower"): 2 * (v + 1) * q0 / (3 * q2),
        ("starlike_h", "k=1 upper"): 2 * q2 / h2,
        ("starlike_h", "k=2 lower"): _root(4 * (v + 1) * q0 / h2),
        ("starlike_h", "k=2 upper"): 4 * (v + 3) * q0 * (-4 * (v + 2) * q2**2 + 3 * (v + 1) ** 2 * q0 * q4)
        / ((v + 3) * q2 * (8 * (v + 2) * q2**2 - 9 * (v + 1) * q0 * q4) + 2 * (v + 1) ** 2 * q0**2 * q6),
        ("convex_g", "k=1 lower"): (2 / 3) * _root((v + 1) * q0 / q2),
        ("convex_g", "k=1 upper"): _root(36 * (v + 1) * (v + 2) * q2 / d2),
        ("convex_g", "k=2 lower"): _root(16 * (v + 1) ** 2 * (v + 2) * q0 / d2, 4),
        ("convex_g", "k=2 upper"): _root(
            8 * (v + 1) * (v + 3) * q0 * d2
            / (27 * (v + 3) * q2 * (54 * (v + 2) * q2**2 - 25 * (v + 1) ** 2 * q0 * q4)
               + 49 * (v + 1) ** 2 * q0**2 * q6)),
        ("convex_h", "k=1 lower"): (v + 1) * q0 / q2,
        ("convex_h", "k=1 upper"): 16 * (v + 2) * q0 * q2 / t2,
        ("convex_h", "k=2 lower"): _root(16 * (v + 1) * (v + 2) * q0**2 / t2),
        ("convex_h", "k=2 upper"): 2 * (v + 1) ** 2 * (v + 3) * q0 * t2
        / ((v + 3) * q2 * (32 * (v + 2) * q2**2 - 27 * (v + 1) ** 2 * q0 * q4) + 4 * (v + 1) ** 2 * q0**2 * q6),
    }


@dataclass(frozen=True)
class AuditEntry:
    item: str
    reference_form: float
    newton_form: float
    rel_diff: float
    matches: bool


@dataclass(frozen=True)
class AuditReport:
    context: dict
    entries: tuple[AuditEntry, ...]
    rtol: float

    @property
    def mismatches(self) -> tuple[AuditEntry, ...]:
        return tuple(e for e in self.entries if not e.matches)

    def find(self, item: str) -> AuditEntry:
        for e in self.entries:
            if e.item == item:
                return e
        raise KeyError(item)

    def render(self) -> str:
        c = self.context
        lines = [f"closed-form audit at a={c['a']!r} b={c['b']!r} c={c['c']!r} nu={c['nu']!r} (rtol {self.rtol:g})",
                 f"{'item':32s} {'reference_form':>22s} {'newton_form':>22s} {'rel_diff':>10s}  status"]
        for e in self.entries:
            status = "ok" if e.matches else "MISMATCH"
            lines.append(f"{e.item:32s} {e.reference_form:22.15e} {e.newton_form:22.15e} {e.rel_diff:10.2e}  {status}")
        return "\n".join(lines)


def _entry(item, ref, new, rtol) -> AuditEntry:
    rel = abs(ref - new) / abs(new) if new else abs(ref - new)
    if math.isnan(rel):
        rel = math.inf
    return AuditEntry(item, float(ref), float(new), float(rel), bool(rel <= rtol))


def audit_report(context: EvaluationContext, rtol: float = 1e-12) -> AuditReport:
    """Literature closed forms versus Newton-identity values, item by item.

    Covers the k = 1..3 power sums of the GPRIME, HPRIME, DELTA and THETA
    zeros and the printed radius bounds (Kreyszig-Todd and k = 1, 2
    brackets). Entries are in a fixed order so the rendered text is
    reproducible.
    """
    entries = []
    for kind in (Family.GPRIME, Family.HPRIME, Family.DELTA, Family.THETA):
        sums = coefficient_sums(family(context, kind), 3)
        for k in (1, 2, 3):
            entries.append(_entry(f"{FAMILY_SYMBOL[kind]}_{k} ({kind.value})", sums.reference[k], sums[k], rtol))
    refs = _reference_bounds(context)
    derived = {t: bound_brackets(context, t, 2) for t in TARGET_FAMILY}
    for (target, label), ref in refs.items():
        br = derived[target]
        if label == "kreyszig_todd upper":
            new = br.kreyszig_todd
        else:
            k = int(label[2])
            new = br[k].lower if label.endswith("lower") else br[k].upper
        entries.append(_entry(f"{target} {label}", ref, new, rtol))
    return AuditReport(context.describe(), tuple(entries), rtol)
