#!/usr/bin/env python3
"""Reflectionless checks: periodic streams and the exponential-decay rule.

A two-sided periodic stream sums inside the disk to P(z)/(1 - z^p); after
cancelling shared roots of unity it continues across exactly the arcs
avoiding the surviving poles, where the continuation cancels the outside
series.  Separately, a two-sided stream that is reflectionless somewhere
and decays exponentially on one side must vanish identically, which turns
one large window value into a non-reflectionless witness.
"""
import math

import nbscope as nb
from nbscope.analytic import ArcSpec, decay_rule_check

# the constant stream: inside sum 1/(1-z), outside sum -1/(1-z); it is
# reflectionless on the circle minus the point 1
almost_full = ArcSpec(0.1, 2 * math.pi - 0.1)
res = nb.periodic_reflectionless_check([1], almost_full)
print("pattern (1) on the circle minus a notch:", res.passed)
print("  worst confirmation defect:", res.max_confirmation_defect)

# alternating pattern (1, 0): the pole at z = 1 survives reduction
res2 = nb.periodic_reflectionless_check([1, 0], ArcSpec(-0.5, 0.5))
print("\npattern (1, 0) on an arc through 1:", res2.passed)
print("  reason:", res2.reason)

# pattern (1, -1): the factor (1 - z) cancels, leaving 1/(1 + z); the arc
# through 1 is now fine, an arc through -1 is not
res3 = nb.periodic_reflectionless_check([1, -1], ArcSpec(-0.5, 0.5))
print("\npattern (1, -1) on an arc through 1:", res3.passed)
print("  reduced denominator:", [c.real for c in res3.form.denominator])
res4 = nb.periodic_reflectionless_check([1, -1],
                                        ArcSpec(math.pi - 0.5, math.pi + 0.5))
print("pattern (1, -1) on an arc through -1:", res4.passed)

# decay rule: the window b_{-1} = 1, rest 0, decays (trivially) on the
# positive side, so the nonzero value at -1 is a witness
w = nb.TwoSidedWindow((1.0, 0.0, 0.0), 1, {"kind": "demo"})
print("\nb_{-1}=1 window:", decay_rule_check(w, "positive", 1.0, 1.0, 0.5))

# geometric positive side with b_0 = 1: were the stream reflectionless,
# the decay would force it to vanish; b_0 witnesses it is not
vals = (0.0, 0.0, 0.0, 1.0, 0.5, 0.25, 0.125)
w2 = nb.TwoSidedWindow(vals, 3, {"kind": "demo"})
print("geometric-side window:",
      decay_rule_check(w2, "positive", 1.0, math.log(2), 0.5))
