import numpy as np
import pytest

from bessel_radii import (Family, PrecisionLoss, ScanExhausted, SeriesFamily, ZeroCatalog, find_zeros,
                          interlacing_check, make_context)
from bessel_radii.oracle import oracle_catalog
from bessel_radii.zeros import bisect


def test_bessel_prime_zeros(ctx_j):
    cat = find_zeros(SeriesFamily(Family.PSI, ctx_j), 3)
    ref = oracle_catalog(ctx_j, Family.PSI, 3, xtol=1e-14)
    np.testing.assert_allclose(cat.zeros, ref.zeros, atol=1e-10)
    np.testing.assert_allclose(cat.zeros, [1.8412, 5.3314, 8.5363], atol=5e-5)


@pytest.mark.parametrize("kind", list(Family))
def test_all_families_match_scipy(ctx_t1, kind):
    cat = find_zeros(SeriesFamily(kind, ctx_t1), 4)
    ref = oracle_catalog(ctx_t1, kind, 4)
    np.testing.assert_allclose(cat.zeros, ref.zeros, rtol=1e-11)
    assert cat.squared == kind.squared


def test_first_zero_anchors(ctx_t1, ctx_t4):
    assert find_zeros(SeriesFamily(Family.GPRIME, ctx_t1), 1).first == pytest.approx(0.7188, abs=1e-4)
    assert find_zeros(SeriesFamily(Family.THETA, ctx_t4), 1).first == pytest.approx(1.1386, abs=1e-4)


def test_catalog_is_read_only(ctx_t1):
    cat = find_zeros(SeriesFamily(Family.PSI, ctx_t1), 2)
    with pytest.raises(ValueError):
        cat.zeros[0] = 1.0
    assert len(cat) == 2 and cat[1] > cat[0]


def test_scan_limits(ctx_t1):
    fam = SeriesFamily(Family.PSI, ctx_t1)
    with pytest.raises(ValueError):
        find_zeros(fam, 1, tol=1e-16)
    with pytest.raises(ValueError):
        find_zeros(fam, 0)
    tight = make_context(2, 1, 0, 1.5, domain_cap=3.0)
    with pytest.raises(ScanExhausted):
        find_zeros(SeriesFamily(Family.PSI, tight), 2)


def test_precision_warning_far_out(ctx_t1):
    with pytest.warns(PrecisionLoss):
        find_zeros(SeriesFamily(Family.PSI, ctx_t1), 8)


@pytest.mark.parametrize("triple, nu", [((0, 1, 0), 1.0), ((2, 1, 0), 1.5), ((1, 2, 3), 0.4)])
def test_interlacing(triple, nu):
    ctx = make_context(*triple, nu)
    psi = find_zeros(SeriesFamily(Family.PSI, ctx), 5)
    psi1 = find_zeros(SeriesFamily(Family.PSI1, ctx), 5)
    rep = interlacing_check(psi, psi1, 1e-13)
    assert rep.passed and rep.checked == 9


def test_interlacing_detects_swap(ctx_t1):
    psi = find_zeros(SeriesFamily(Family.PSI, ctx_t1), 3)
    psi1 = find_zeros(SeriesFamily(Family.PSI1, ctx_t1), 3)
    rep = interlacing_check(ZeroCatalog(Family.PSI, psi1.zeros, 0, 0), ZeroCatalog(Family.PSI1, psi.zeros, 0, 0))
    assert not rep.passed and rep.violation_index == 1


def test_bisect():
    lo, hi = bisect(lambda x: x * x - 2, 1, 2, 1e-12)
    assert lo <= 2**0.5 <= hi and hi - lo <= 1e-12
    with pytest.raises(ValueError):
        bisect(lambda x: x * x + 1, 0, 1, 1e-6)
