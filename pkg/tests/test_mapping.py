import numpy as np
import pytest

from bessel_radii import make_context
from bessel_radii.mapping import boundary_curve, curve_csv, curve_svg, is_starlike_curve, ray_crossings


@pytest.fixture
def ctx():
    return make_context(1, 2, 0, 1.5)


def test_circle_is_starlike():
    pts = np.exp(2j * np.pi * np.arange(100) / 100)
    assert is_starlike_curve(pts)
    assert is_starlike_curve(0.3 + 0.5 * pts)


def test_non_starlike_polygon():
    t = 2 * np.pi * np.arange(400) / 400
    # argument t + 0.5 sin 3t runs backwards where 1 + 1.5 cos 3t < 0
    folded = (1 + 0.2 * np.cos(t)) * np.exp(1j * (t + 0.5 * np.sin(3 * t)))
    assert not is_starlike_curve(folded)
    assert (ray_crossings(folded) == 3).any()
    # winding twice
    twice = np.exp(2j * t)
    assert not is_starlike_curve(twice)
    assert (ray_crossings(twice) == 2).all()


@pytest.mark.parametrize("norm", ["f", "g", "h"])
def test_small_circle_maps_to_circle(ctx, norm):
    theta, w = boundary_curve(ctx, norm, 1e-4)
    z = 1e-4 * np.exp(1j * theta)
    assert np.max(np.abs(w - z)) / 1e-4 < 1e-3


def test_circle_image_curves(ctx):
    assert is_starlike_curve(boundary_curve(ctx, "g", 0.9477)[1])
    assert not is_starlike_curve(boundary_curve(ctx, "g", 1.2)[1])
    assert not is_starlike_curve(boundary_curve(ctx, "f", 1.2)[1])


def test_f_curve_is_closed(ctx):
    theta, w = boundary_curve(ctx, "f", 1.0)
    steps = np.abs(np.diff(np.append(w, w[0])))
    assert steps.max() < 5 * np.median(steps)


def test_outputs_deterministic(ctx):
    theta, w = boundary_curve(ctx, "g", 0.9477)
    assert curve_svg(w) == curve_svg(boundary_curve(ctx, "g", 0.9477)[1])
    text = curve_csv(theta, w)
    lines = text.splitlines()
    assert lines[0] == "theta,re,im" and len(lines) == 721
    back = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    assert np.array_equal(back[:, 1] + 1j * back[:, 2], w)
    assert curve_svg(w).startswith("<svg") and "Z\"" in curve_svg(w)
