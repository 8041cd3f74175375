"""
Images of circles under g
=========================

At r equal to the starlikeness radius the image of |z| = r is still
starlike; a little beyond it the curve folds back and some rays from the
origin cross it three times.
"""
# %%

import numpy as np

from bessel_radii import make_context, starlike_radius
from bessel_radii.mapping import boundary_curve, curve_svg, is_starlike_curve, ray_crossings
from bessel_radii.oracle import sample_min_re_ratio

ctx = make_context(1, 2, 0, 1.5)
r_star = starlike_radius(ctx, "g").radius
print("starlikeness radius of g:", r_star)

# %%
# min Re(z g'(z)/g(z)) on the circle: zero at the radius, negative past it.

for r in (0.5, r_star, 1.2):
    theta, w = boundary_curve(ctx, "g", r)
    crossings = ray_crossings(w)
    print(f"r={r:.4f}  min Re ratio={sample_min_re_ratio(ctx, 'g', r):+.5f}  "
          f"starlike curve={is_starlike_curve(w)}  max crossings per ray={crossings.max()}")

# %%
# Write both panels for a look.

for r, name in ((r_star, "g_at_radius.svg"), (1.2, "g_beyond_radius.svg")):
    _, w = boundary_curve(ctx, "g", r)
    with open(name, "w") as fh:
        fh.write(curve_svg(w, title=f"g image of |z| = {r:.4f}"))
    print("wrote", name, "extent", float(np.abs(w).max()))
