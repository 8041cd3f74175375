import math

import numpy as np
import pytest

from bessel_radii import InvalidParameters, PrecisionLoss, audit_report, bound_brackets, make_context, radius
from bessel_radii.bounds import (REFERENCE_FORMS, TARGET_FAMILY, coefficient_sums, newton_power_sums,
                                 rayleigh_S5_S6)
from bessel_radii.oracle import direct_zero_sum, oracle_catalog
from bessel_radii.series import Family, family

NORM_KIND = {"starlike_g": ("g", "starlike"), "starlike_h": ("h", "starlike"),
             "convex_g": ("g", "convex"), "convex_h": ("h", "convex")}


def test_newton_on_known_roots():
    # (1 - w/2)(1 - w/3)(1 - w/5) expanded
    roots = np.array([2.0, 3.0, 5.0])
    poly = np.poly(1 / roots)  # also the ascending coefficients of prod (1 - w/root)
    p, _ = newton_power_sums(list(poly) + [0.0] * 3, 5)
    for k in range(1, 6):
        assert p[k - 1] == pytest.approx(np.sum(roots ** -float(k)), rel=1e-14)


def test_sigma_values(ctx_t1):
    sig = coefficient_sums(family(ctx_t1, Family.GPRIME), 3)
    assert sig[1] == pytest.approx(2.1)
    assert sig[2] == pytest.approx(3.755238, rel=1e-6)
    assert sig.power == 2


def test_omega_values(ctx_t4):
    om = coefficient_sums(family(ctx_t4, Family.THETA), 3)
    assert om[1] == pytest.approx(36 / 35)
    assert om[2] == pytest.approx(0.779387, abs=1e-6)
    assert om.power == 1
    # omega_2 = sum over x-zeros of THETA of x^-2, checked against the scipy zeros
    cat = oracle_catalog(ctx_t4, Family.THETA, 300)
    assert om[2] == pytest.approx(math.fsum(cat.zeros**-2.0), rel=1e-9)


@pytest.mark.parametrize("kind", [Family.GPRIME, Family.DELTA, Family.PSI])
def test_sums_match_direct_zero_sums(ctx_t1, kind):
    sums = coefficient_sums(family(ctx_t1, kind), 3)
    cat = oracle_catalog(ctx_t1, kind, 1000)
    for k in (2, 3):
        assert sums[k] == pytest.approx(direct_zero_sum(cat, 2 * k), rel=1e-8)


def test_S5_S6(ctx_t1, ctx_j):
    s5, s6 = rayleigh_S5_S6(ctx_t1)
    assert s5 == pytest.approx(0.7, rel=1e-15)
    assert s6 == pytest.approx(0.359047619047619, rel=1e-14)
    assert rayleigh_S5_S6(ctx_j)[0] == 0.375


def test_starlike_g_brackets(ctx_t1):
    brs = bound_brackets(ctx_t1, "starlike_g", 2)
    assert brs[1].lower == pytest.approx(0.69007, abs=1e-5)
    assert brs[1].upper == pytest.approx(0.74781, abs=1e-5)
    assert brs[2].lower == pytest.approx(0.71836, abs=1e-5)
    assert brs[2].upper == pytest.approx(0.719841, abs=1e-6)
    assert brs.kreyszig_todd == pytest.approx(1 / math.sqrt(1.4))


def test_convex_h_k1_bracket(ctx_t4):
    b = bound_brackets(ctx_t4, "convex_h", 1)[1]
    assert (b.lower, b.upper) == pytest.approx((0.97222, 1.31972), abs=1e-5)
    assert b.contains(1.1386)


@pytest.mark.parametrize("target", sorted(TARGET_FAMILY))
@pytest.mark.parametrize("triple, nu", [((2, 1, 0), 1.5), ((1, 3, 0), 2.5), ((1, 2, 4), 1.5), ((1, 2, 0), 0.7)])
def test_brackets_contain_radius_and_nest(target, triple, nu):
    ctx = make_context(*triple, nu)
    r = radius(ctx, *NORM_KIND[target], 0.0).radius
    brs = bound_brackets(ctx, target, 4)
    for k, b in enumerate(brs, start=1):
        assert b.contains(r), (k, b, r)
        if k > 1:
            assert brs[k - 1].lower <= b.lower and b.upper <= brs[k - 1].upper
    if brs.kreyszig_todd is not None:
        assert r < brs.kreyszig_todd


def test_bracket_argument_checks(ctx_t1):
    with pytest.raises(InvalidParameters):
        bound_brackets(ctx_t1, "starlike_f")
    with pytest.raises(InvalidParameters):
        bound_brackets(ctx_t1, "starlike_g", 12)


def test_precision_warning_on_cancellation(ctx_t1):
    # reciprocal roots exp(+-i pi/6): p_3 = 2 cos(pi/2) = 0 from O(1) terms
    fam = family(ctx_t1, Family.PSI)

    class Cancelling:
        kind, context = fam.kind, fam.context

        @staticmethod
        def coefficients(count):
            return ([1.0, -math.sqrt(3.0), 1.0] + [0.0] * count)[:count]

    with pytest.warns(PrecisionLoss):
        coefficient_sums(Cancelling, 3)


@pytest.mark.parametrize("kind", [Family.GPRIME, Family.HPRIME, Family.DELTA, Family.THETA, Family.PSI])
@pytest.mark.parametrize("triple, nu", [((2, 1, 0), 1.5), ((1, 2, 3), 2.5), ((-1, 1, 0), 3.5)])
def test_sums_positive_and_log_convex(kind, triple, nu):
    sums = coefficient_sums(family(make_context(*triple, nu), kind), 10)
    v = sums.values
    assert all(x > 0 for x in v)
    for k in range(len(v) - 2):
        assert v[k] * v[k + 2] >= v[k + 1] ** 2 * (1 - 1e-12)


def test_reference_forms_cover_k_le_3():
    assert set(REFERENCE_FORMS) == {Family.GPRIME, Family.HPRIME, Family.DELTA, Family.THETA}
    for forms in REFERENCE_FORMS.values():
        assert set(forms) == {1, 2, 3}


def test_audit_report_flags(ctx_t1):
    rep = audit_report(ctx_t1)
    matching = ["sigma_1 (gprime)", "sigma_2 (gprime)", "rho_1 (hprime)", "rho_2 (hprime)", "rho_3 (hprime)",
                "kappa_1 (delta)", "omega_1 (theta)", "starlike_g kreyszig_todd upper"]
    for item in matching:
        assert rep.find(item).matches, item
    for item in ["kappa_2 (delta)", "omega_2 (theta)", "starlike_h kreyszig_todd upper"]:
        e = rep.find(item)
        assert not e.matches and math.isfinite(e.reference_form) and math.isfinite(e.newton_form)
    kt = rep.find("starlike_h kreyszig_todd upper")
    assert kt.reference_form == pytest.approx(kt.newton_form / 2)
    with pytest.raises(KeyError):
        rep.find("nothing")


def test_audit_report_deterministic(ctx_t1):
    text = audit_report(ctx_t1).render()
    assert text == audit_report(make_context(2, 1, 0, 1.5)).render()
    assert "MISMATCH" in text and "omega_2" in text


def test_audit_flags_are_not_accidental():
    # the same items mismatch away from the table parameters
    rep = audit_report(make_context(1.3, 2.9, 0.7, 3.1))
    for item in ["kappa_2 (delta)", "omega_2 (theta)", "starlike_h kreyszig_todd upper"]:
        assert not rep.find(item).matches
    for item in ["sigma_1 (gprime)", "rho_3 (hprime)", "omega_1 (theta)"]:
        assert rep.find(item).matches


def _grid(n=20, seed=7):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        a = float(rng.uniform(0, 4))
        b = a + float(rng.uniform(0.1, 3))
        c = float(rng.choice([0.0, rng.uniform(0.1, 4)]))
        out.append(make_context(a, b, c, float(rng.uniform(0.8, 4))))
    return out


def test_closed_forms_on_grid():
    # k <= 2 forms agree except kappa_2, whose printed denominator is off; every mismatch is reported
    for ctx in _grid():
        rep = audit_report(ctx)
        for item in ("sigma_1 (gprime)", "sigma_2 (gprime)", "rho_1 (hprime)", "rho_2 (hprime)",
                     "kappa_1 (delta)", "omega_1 (theta)"):
            assert rep.find(item).matches, (item, ctx)
        assert not rep.find("kappa_2 (delta)").matches
        assert not rep.find("omega_2 (theta)").matches
        assert {e.item for e in rep.mismatches} >= {"kappa_2 (delta)", "omega_2 (theta)"}
