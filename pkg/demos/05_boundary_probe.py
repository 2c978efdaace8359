#!/usr/bin/env python3
"""Arc-integral probe of |f| near the unit circle.

A series that continues analytically across an arc keeps the arc integral
of |f(r e^{i theta})| bounded as r -> 1.  The probe scans that integral
over a radius ladder with certified truncation and quadrature bounds.  It
corroborates certificates -- monotone growth, a log-law fit -- but never
carries a conclusion by itself: boundedness is an asymptotic statement no
finite scan can decide.
"""
import math

import nbscope as nb
from nbscope.analytic import ArcSpec, boundary_l1_scan

flat = nb.make_sequence(nb.periodic([1]))  # f = 1/(1-z), single pole at 1

# full circle: the pole drives logarithmic growth of the mean of |f|
radii = [0.9, 0.99, 0.999, 0.9999]
rep = boundary_l1_scan(flat, ArcSpec.full_circle(), radii,
                       quad_points=16384, tol=1e-6)
print("full circle, f = 1/(1-z):")
for r, i, q, t in zip(rep.radii, rep.integrals, rep.quad_errors,
                      rep.trunc_errors):
    print(f"  r={r:<7} I(r)={i:.6f}  quad_err={q:.2e}  trunc_err={t:.2e}")
print(f"  growth ~ {rep.growth.slope:.4f} * log(1/(1-r)) + "
      f"{rep.growth.intercept:.4f}  (max rel residual "
      f"{rep.growth.max_rel_residual:.3%})")

# away from the pole the integrals saturate
arc = ArcSpec(math.pi / 2, 3 * math.pi / 2)
rep2 = boundary_l1_scan(flat, arc, [0.999, 0.9999], quad_points=8192,
                        tol=1e-8)
print("\nleft half-circle (pole excluded):")
print("  I(0.999)  =", rep2.integrals[0])
print("  I(0.9999) =", rep2.integrals[1])
print("  difference:", abs(rep2.integrals[1] - rep2.integrals[0]))

# the factorial gap series grows on every arc; sample one through theta=0
gap = nb.make_sequence(nb.gap_powers("factorials", 1))
rep3 = boundary_l1_scan(gap, ArcSpec(-0.25, 0.25), [0.9, 0.99, 0.999],
                        quad_points=4096, tol=1e-8)
print("\nfactorial series on the arc (-0.25, 0.25):")
print("  I(r):", [round(v, 6) for v in rep3.integrals])

rep.write_csv("/tmp/probe_full_circle.csv")
print("\nplot-ready CSV written to /tmp/probe_full_circle.csv")
