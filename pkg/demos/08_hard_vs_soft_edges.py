#!/usr/bin/env python3
"""Hard versus soft edges around the same zero set.

Both streams vanish on the blocks [j!, j!+j].  The hard-edge stream jumps
straight back to 1, so every block end yields a zero-flank certificate.
The soft-edge stream ramps up with slope 1/(sqrt(gap)+1): the slope decays,
every recurring window is nearly constant, and no certificate exists --
density of the zero set alone does not decide boundary behavior; the edges
do.
"""
import numpy as np

import nbscope as nb

horizon = 10 ** 6

hard = nb.make_sequence(nb.erdos("hard"))
soft = nb.make_sequence(nb.erdos("soft"))

print("values around the block [24, 28]:")
print("  hard:", np.round(np.real(hard.prefix(34))[22:], 3))
print("  soft:", np.round(np.real(soft.prefix(34))[22:], 3))

cert = nb.find_gap_certificate(hard, width=5, horizon=horizon,
                               eps=0.01, delta=0.5)
print("\nhard edges: certificate at centers", cert.witnesses)

print("soft edges: certificate is",
      nb.find_gap_certificate(soft, width=5, horizon=horizon,
                              eps=0.01, delta=0.5))

# the recurring windows of the soft stream are all nearly constant
res = nb.extract_right_limits(soft, width=3, horizon=horizon, eps=0.1,
                              max_candidates=0)
devs = [float(np.max(np.abs(c.window.as_array() - c.window.value(0))))
        for c in res.candidates]
print(f"\nsoft stream: {len(res.candidates)} recurring windows, "
      f"max deviation from the center value {max(devs):.3f}")
biggest = max(res.candidates, key=lambda c: len(c.recurrence_indices))
print("most frequent window:",
      np.round(np.real(biggest.window.as_array()), 3),
      f"({len(biggest.recurrence_indices)} recurrences)")
