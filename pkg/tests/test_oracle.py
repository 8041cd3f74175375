import math

import numpy as np
import pytest

from bessel_radii import Family, SeriesFamily, make_context
from bessel_radii.bounds import rayleigh_S5_S6
from bessel_radii.oracle import (VerificationReport, coefficient_identity_check, compare, direct_zero_sum,
                                 finite_diff_check, oracle_catalog, product_from_zeros, psi1_relation_check,
                                 re_ratio_samples, sample_min_re_ratio)


def test_report_semantics():
    assert compare("x", 1.0, 1.0 + 1e-9, 1e-8).passed
    assert not compare("x", 1.0, 1.1, 1e-3, relative=True).passed
    rep = compare("x", 2.0, 1.0, 0.5)
    assert isinstance(rep, VerificationReport) and "FAIL" in rep.line()


def test_direct_sum_examples(ctx_j, ctx_t1):
    cat = oracle_catalog(ctx_j, Family.PSI, 1000)
    assert direct_zero_sum(cat, 2) == pytest.approx(0.375, abs=1e-3)
    cat = oracle_catalog(ctx_t1, Family.PSI, 1000)
    assert direct_zero_sum(cat, 4) == pytest.approx(rayleigh_S5_S6(ctx_t1)[1], rel=1e-8)
    short = oracle_catalog(ctx_t1, Family.PSI, 10)
    assert direct_zero_sum(short, 2, tail=False) < rayleigh_S5_S6(ctx_t1)[0]
    with pytest.raises(ValueError):
        direct_zero_sum(short, 2)


def test_tail_improves_sum(ctx_j):
    cat = oracle_catalog(ctx_j, Family.PSI, 1000)
    with_tail = abs(direct_zero_sum(cat, 2) - 0.375)
    without = abs(direct_zero_sum(cat, 2, tail=False) - 0.375)
    assert with_tail < without / 100


def test_plain_family_sum_uses_square_roots(ctx_t4):
    # THETA zeros are x-values; power 2 in z means sum of 1/x
    cat = oracle_catalog(ctx_t4, Family.THETA, 200)
    assert direct_zero_sum(cat, 4, tail=False) == pytest.approx(math.fsum(cat.zeros**-2.0))


def test_product_reconstruction(ctx_t1):
    cat = oracle_catalog(ctx_t1, Family.PSI, 2000)
    psi = SeriesFamily(Family.PSI, ctx_t1)
    for z in (0.5, 1.0, 2.0):
        assert product_from_zeros(cat, z) == pytest.approx(float(psi.eval(z)), rel=1e-3)
    cat = oracle_catalog(ctx_t1, Family.HPRIME, 2000)
    hp = SeriesFamily(Family.HPRIME, ctx_t1)
    assert product_from_zeros(cat, 0.5) == pytest.approx(float(hp.eval(0.5)), rel=1e-3)


def test_circle_sampling_property():
    ctx = make_context(1, 2, 0, 1.5)
    assert abs(sample_min_re_ratio(ctx, "g", 0.9477)) < 5e-3
    assert sample_min_re_ratio(ctx, "g", 1.2) < 0
    for norm in "fgh":
        assert sample_min_re_ratio(ctx, norm, 1e-5) == pytest.approx(1.0, abs=1e-4)
        assert sample_min_re_ratio(ctx, norm, 1e-5, kind="convex") == pytest.approx(1.0, abs=1e-4)
    with pytest.raises(ValueError):
        sample_min_re_ratio(ctx, "g", 0.5, samples=100)


@pytest.mark.parametrize("r", [0.3, 0.9477, 1.2])
def test_minimiser_on_real_axis(r):
    ctx = make_context(1, 2, 0, 1.5)
    theta, vals = re_ratio_samples(ctx, "g", r)
    at = theta[np.argmin(vals)] % math.pi
    assert min(at, math.pi - at) <= theta[1] + 1e-12


@pytest.mark.parametrize("kind", list(Family))
def test_finite_differences(ctx_t1, kind):
    fam = SeriesFamily(kind, ctx_t1)
    for z in (0.5, 1.7):
        assert finite_diff_check(fam, z).passed


def test_psi1_relation(ctx_t1):
    assert psi1_relation_check(ctx_t1, 0.5).passed
    assert psi1_relation_check(ctx_t1, 2.2).passed


def test_coefficient_identities(ctx_t4):
    reps = coefficient_identity_check(ctx_t4, 100)
    assert len(reps) == 2 and all(r.passed for r in reps)
