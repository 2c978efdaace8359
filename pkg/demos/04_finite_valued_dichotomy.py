#!/usr/bin/env python3
"""The finite-valued dichotomy: block mismatches or eventual periodicity.

A stream over finitely many values has recurring aligned blocks of every
length p (pigeonhole).  Either some recurrence fails to extend -- a
mismatch witness at offset >= p+1, and witnesses at every p are
strong-boundary evidence -- or the stream is eventually periodic and the
series is a rational function with poles at roots of unity.
"""
import numpy as np

import nbscope as nb

# an aperiodic +-1 stream: a witness at every block length
rs = nb.make_sequence(nb.rudin_shapiro())
rep = nb.szego_block_analysis(rs, p_max=8, horizon=4096)
print("sign stream:", rep.overall)
for p in range(1, 5):
    w = rep.per_p[p]
    print(f"  p={p}: blocks at offsets {w.first}/{w.second} agree, "
          f"streams split at offset {w.mismatch}")

# a periodic stream: every recurrence extends forever, no witness at any p
per = nb.make_sequence(nb.periodic([1, 1, 0]))
rep2 = nb.szego_block_analysis(per, p_max=6, horizon=3000)
print("\nperiodic stream:", rep2.overall, rep2.periodicity)

# the verdict reduces the series to its rational form
v = nb.verdict(per, nb.AnalysisConfig(horizon=3000))
form = v.rational_form
print("verdict:", v.kind, v.periodicity)
print("numerator:", [c.real for c in form.numerator])
print("denominator:", [c.real for c in form.denominator])
print("poles:", [p.label() for p in form.poles])

# eventual periodicity with a preperiod is found exactly
seq = nb.make_sequence(nb.explicit([7, 3] + [1, 0, 2] * 400))
print("\npreperiodic stream detected:",
      nb.detect_eventual_periodicity(seq, 16, 16, 1200))

# a seeded random +-1 stream behaves like the aperiodic case
path = nb.sample_process(nb.iid_process([-1, 1], seed=7), 4096)
rep3 = nb.szego_block_analysis(path, p_max=8, horizon=4095)
print("\nseeded +-1 stream:", rep3.overall)

# snapping a float stream with finitely many limit points makes it exact
noisy = nb.make_sequence(nb.explicit(
    [v.real * (1 + 1e-7 / (n + 1)) for n, v in enumerate(rs.prefix(2000))]))
snapped = nb.snap_to_limit_points(noisy, [-1, 1], onset_tol=1e-3,
                                  scan_horizon=1999)
print("snapped stream equals the sign stream:",
      bool(np.array_equal(snapped.prefix(2000), rs.prefix(2000))))
