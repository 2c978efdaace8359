#!/usr/bin/env python3
"""Pair-mismatch certificates: the sign stream and an irrational rotation.

Two recurring windows that agree along a one-sided flank but differ at the
center witness two right limits sharing a half-line yet disagreeing at the
origin.  A sequence reflectionless on an arc is determined by either half,
so such a pair rules out analytic continuation across every arc.
"""
import math

import numpy as np

import nbscope as nb

# --- the +-1 sign stream ---------------------------------------------------
rs = nb.make_sequence(nb.rudin_shapiro())

# the stream is built from doubling blocks: positions 2^j and 3*2^j open
# copies of the same block with opposite sign, so their backward flanks
# agree exactly while the centers differ by 2
for j in (2, 3, 4):
    n, m = 2 ** j, 3 * 2 ** j
    print(f"pair ({n}, {m}): flanks equal =",
          all(rs.eval(n - k) == rs.eval(m - k) for k in range(1, 5)),
          " center gap =", abs(rs.eval(n) - rs.eval(m)))

cert = nb.find_pair_certificate(rs, width=4, horizon=4096, eps=0.0,
                                delta=2.0, flank_side="backward")
print("search found", len(cert.pairs), "disjoint pairs; first:",
      cert.pairs[:4])

# --- fractional parts along an irrational rotation --------------------------
q = math.sqrt(2) - 1
rot = nb.make_sequence(nb.rotation(q, 0.0))

# indices 41 apart shift the fractional part by ~0.0172 (mod 1); centers
# where the shift wraps through 0 jump by ~0.98 while their neighbors move
# only ~0.0172: flank match + center mismatch
print("\nrotation stream: a_29 = %.5f, a_70 = %.5f" %
      (rot.eval(29).real, rot.eval(70).real))
print("forward flank differences:",
      np.round([abs(rot.eval(70 + k) - rot.eval(29 + k)) for k in range(1, 6)], 5))
print("(29, 70) qualifies:",
      nb.verify_pair(rot, 29, 70, 5, eps=0.05, delta=0.5, flank_side="forward"))

cert2 = nb.find_pair_certificate(rot, width=5, horizon=50_000, eps=0.05,
                                 delta=0.5, flank_side="forward")
print("search found", len(cert2.pairs), "pairs; separation >=",
      round(cert2.separation, 4))

v = nb.verdict(rot, nb.AnalysisConfig(width=5, eps=0.05, delta=0.5,
                                      horizon=50_000))
print("verdict:", v.kind, "via", v.certificate.kind)
