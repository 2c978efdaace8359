#!/usr/bin/env python3
"""Random coefficient streams: variance, separation, certificate rate.

A bounded random stream whose per-index variance stays positive keeps
producing two well-separated values, each with definite probability; on a
sampled path this shows up as flank-matching index pairs with separated
centers.  The experiment samples seeded paths and reports how often the
pair search succeeds.  Identical (process, seed, knobs) reproduce the
report bit for bit.
"""
import numpy as np

import nbscope as nb

spec = nb.iid_process([0, 1], [0.5, 0.5], seed=42)

# per-index variance across independent paths (fair coin: 1/4)
for item in nb.variance_window(spec, [0, 10, 100], samples=300):
    print(f"index {item.index:>3}: variance {item.variance:.4f} "
          f"(se {item.standard_error:.2e})")

# constructive separation: cover the value disk by small disks, take the
# heaviest center, then the heaviest center beyond sqrt(sigma/2)
sep = nb.separated_values((np.array([0, 1], complex), np.array([.5, .5])),
                          m=4, sigma=0.25)
print(f"\nseparated values: z={sep.z}, w={sep.w}, "
      f"|z-w|={sep.separation} >= threshold {sep.threshold:.4f}")
print(f"cover size {sep.cover_size}, prob_z={sep.prob_z}, prob_w={sep.prob_w}")

# the experiment: 10 seeded paths, pair search on each
rep = nb.certificate_rate_experiment(spec, trials=10, width=3,
                                     horizon=10_000, eps=0.0, delta=1.0)
print(f"\ncertificates found in {rep.found_count}/{rep.trials} trials")
t0 = rep.results[0]
print(f"trial 0: first pairs {t0.pairs[:3]}, path variance {t0.variance:.4f}")

# a degenerate (constant) process refuses: no separation target is reachable
try:
    nb.certificate_rate_experiment(nb.iid_process([1.0], [1.0], seed=1),
                                   trials=2, width=3, horizon=1000,
                                   eps=0.0, delta=0.5)
except nb.SequenceError as e:
    print("\nconstant process:", e)

# a markov stream works the same way through the library interface
mspec = nb.markov_process([0, 1], [[0.7, 0.3], [0.3, 0.7]], seed=9)
mrep = nb.certificate_rate_experiment(mspec, trials=5, width=3,
                                      horizon=8000, eps=0.0, delta=0.9)
print(f"\nmarkov chain: {mrep.found_count}/{mrep.trials} trials certified")
