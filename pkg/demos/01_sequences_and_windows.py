#!/usr/bin/env python3
"""Tour of the generator families and two-sided windows.

Every sequence is a bounded coefficient stream a_0, a_1, ... of a power
series on the unit disk.  Windows are finite two-sided excerpts centered
at an index; recurring windows are the desk-scale stand-in for right
limits of the stream.
"""
import numpy as np

import nbscope as nb

# a sparse "gap" series: coefficient 1 exactly at the factorials
gap = nb.make_sequence(nb.gap_powers("factorials", 1))
print("factorial-support coefficients a_0..a_30:")
print(np.real(gap.prefix(31)).astype(int))

# the +-1 stream from the paired polynomial recursion
rs = nb.make_sequence(nb.rudin_shapiro())
print("\nsign stream a_0..a_15:", np.real(rs.prefix(16)).astype(int))

# samples of the fractional part along an irrational rotation
rot = nb.make_sequence(nb.rotation(np.sqrt(2) - 1, theta=0.0))
print("\nrotation samples a_1..a_5:", np.round(np.real(rot.prefix(6))[1:], 6))

# windows: values a_{n-W}..a_{n+W}, exact reads from the stream
win = nb.window(gap, center=24, radius=4)
print("\nwindow around 24 (= 4!):", np.real(win.as_array()).astype(int))
print("provenance:", win.provenance)

# a window recurs when other centers match it; the cluster of matching
# centers is evidence of a right limit with that local shape
res = nb.extract_right_limits(gap, width=2, horizon=10_000, eps=0.0)
print("\nrecurring windows in the factorial stream (top clusters):")
for cand in res.candidates[:3]:
    vals = np.real(cand.window.as_array()).astype(int)
    print(f"  window {vals}  recurs {len(cand.recurrence_indices)} times, "
          f"first centers {cand.recurrence_indices[:4]}")

# CSV round trip uses the schema n,re,im with full double precision
nb.write_sequence_csv("/tmp/rotation.csv", rot, 64)
back = nb.read_sequence_csv("/tmp/rotation.csv")
print("\nCSV round trip identical:",
      bool(np.array_equal(back.prefix(64), rot.prefix(64))))
