"""Images of circles |z| = r under the normalized functions, and a
starlikeness test for the resulting closed curves."""

from __future__ import annotations

import cmath
import io

import numpy as np

from .model import EvaluationContext
from .series import Family, family, normalized_value

DEFAULT_SAMPLES = 720


def boundary_curve(context: EvaluationContext, normalization: str, r: float,
                   samples: int = DEFAULT_SAMPLES) -> tuple[np.ndarray, np.ndarray]:
    """Angles theta_j = 2 pi j / samples and the image points F(r e^{i theta_j}).

    For f the power PSI^(1/nu) follows the phase of PSI continuously around
    the circle (starting from the real value at theta = 0) rather than the
    principal branch, so the curve stays closed and smooth.
    """
    theta = 2 * np.pi * np.arange(samples) / samples
    zs = r * np.exp(1j * theta)
    if normalization in ("g", "h"):
        w = np.array([complex(normalized_value(context, normalization, complex(z))) for z in zs])
        return theta, w
    psi = family(context, Family.PSI)
    vals = np.array([complex(psi.eval(complex(z)).value) for z in zs])
    phase = np.unwrap(np.angle(vals))
    phase -= 2 * np.pi * np.round(phase[0] / (2 * np.pi))
    w = zs * np.abs(vals) ** (1 / context.nu) * np.exp(1j * phase / context.nu)
    return theta, w


def ray_crossings(points: np.ndarray, rays: int = 360) -> np.ndarray:
    """Number of times each ray from the origin crosses the closed polygon."""
    p = np.asarray(points, dtype=complex)
    q = np.roll(p, -1)
    counts = np.zeros(rays, dtype=int)
    for i, alpha in enumerate(2 * np.pi * (np.arange(rays) + 0.5) / rays):
        d = cmath.exp(1j * alpha)
        # signed distance of each vertex from the line through 0 along d
        sp = (p * np.conj(d)).imag
        sq = (q * np.conj(d)).imag
        crossing = np.signbit(sp) != np.signbit(sq)
        with np.errstate(divide="ignore", invalid="ignore"):
            t = sp / (sp - sq)
            hit = p + t * (q - p)
            along = (hit * np.conj(d)).real
        counts[i] = int(np.count_nonzero(crossing & (along > 0)))
    return counts


def is_starlike_curve(points: np.ndarray, rays: int = 360) -> bool:
    """True when every ray from the origin meets the curve exactly once."""
    return bool(np.all(ray_crossings(points, rays) == 1))


def curve_csv(theta: np.ndarray, w: np.ndarray) -> str:
    buf = io.StringIO()
    buf.write("theta,re,im\n")
    for t, v in zip(theta, w):
        buf.write(f"{float(t)!r},{float(v.real)!r},{float(v.imag)!r}\n")
    return buf.getvalue()


def curve_svg(w: np.ndarray, size: int = 400, title: str = "") -> str:
    """Closed SVG path of the curve, scaled to fit a square canvas with axes."""
    extent = float(np.max(np.abs(np.concatenate([w.real, w.imag])))) * 1.1 or 1.0
    scale = size / (2 * extent)
    half = size / 2
    xs = half + w.real * scale
    ys = half - w.imag * scale
    coords = " L ".join(f"{x:.4f},{y:.4f}" for x, y in zip(xs, ys))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        lines.append(f"<title>{title}</title>")
    lines += [
        f'<line x1="0" y1="{half}" x2="{size}" y2="{half}" stroke="#999" stroke-width="0.5"/>',
        f'<line x1="{half}" y1="0" x2="{half}" y2="{size}" stroke="#999" stroke-width="0.5"/>',
        f'<path d="M {coords} Z" fill="#cfe0f5" stroke="#1f4e8c" stroke-width="1"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
