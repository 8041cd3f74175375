"""
Euler-Rayleigh brackets
=======================

Power sums of reciprocal zeros come straight from series coefficients via
Newton's identities, and each one pins the first zero (hence the beta = 0
radius) between two numbers.
"""
# %%

from bessel_radii import audit_report, bound_brackets, make_context, radius

ctx = make_context(2, 1, 0, 1.5)
r = radius(ctx, "g", "starlike").radius
brs = bound_brackets(ctx, "starlike_g", 6)
print(f"starlikeness radius of g: {r:.10f}")
for b in brs:
    print(f"  k={b.k}: ({b.lower:.10f}, {b.upper:.10f})  width {b.upper - b.lower:.1e}")
print(f"  Kreyszig-Todd upper bound: {brs.kreyszig_todd:.6f}")

# %%
# Hand-derived closed forms from the literature, checked item by item.

print(audit_report(ctx).render())
