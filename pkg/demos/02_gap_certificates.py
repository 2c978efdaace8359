#!/usr/bin/env python3
"""Zero-flank certificates for sparse (gap) series.

If the coefficient stream keeps producing centers n with a_n large while
the whole backward flank a_{n-W}..a_{n-1} is (near) zero, the stream has a
right limit vanishing on one side with a nonzero center value.  Such a
two-sided sequence cannot be reflectionless across any arc -- its outside
series is identically zero while the inside one is not -- so the power
series has a strong natural boundary: certificates of this shape are the
discrete evidence.
"""
import nbscope as nb

gap = nb.make_sequence(nb.gap_powers("factorials", 1))

cert = nb.find_gap_certificate(gap, width=6, horizon=10**6, eps=0.0, delta=0.5)
print("factorial family, flank width 6, horizon 1e6")
print("  hit centers:", cert.witnesses)
print("  re-verification against raw reads:", cert.verify(gap))

# squares: consecutive squares are 2j-1 apart, so flank-4 clearance needs
# 2j-1 > 4; the hits are exactly the squares from 9 on
sq = nb.make_sequence(nb.gap_powers("squares", 1))
cert_sq = nb.find_gap_certificate(sq, width=4, horizon=10**4, eps=0.0, delta=0.5)
print("\nsquares family, flank width 4, horizon 1e4")
print("  first hits:", cert_sq.witnesses[:8])

# a constant stream never clears its flank
flat = nb.make_sequence(nb.periodic([1]))
print("\nconstant stream certificate:",
      nb.find_gap_certificate(flat, 4, 10**4, eps=0.0, delta=0.5))

# exponential-envelope variant: flanks need not vanish, only decay
import math
import numpy as np

vals = np.zeros(5000)
for c in (1000, 2500, 4000):
    vals[c] = 1.0
    for k in range(1, 7):
        vals[c - k] = 2.0 ** (-k - 2)
seq = nb.make_sequence(nb.explicit(vals))
cert_decay = nb.find_gap_certificate(seq, width=6, horizon=4999,
                                     eps=1e-9, delta=0.5,
                                     decay=(0.25, math.log(2)))
print("\ndecay-envelope certificate hits:", cert_decay.witnesses)

# the full pipeline reaches the same conclusion
v = nb.verdict(gap, nb.AnalysisConfig(horizon=100_000))
print("\nverdict for the factorial series:", v.kind)
