"""Seeded stochastic coefficient processes and the pair-certificate
Monte Carlo experiment.

A bounded random coefficient sequence whose per-index variance stays
positive along some index subsequence admits, almost surely, two right
limits agreeing off the center but differing at it; at desk scale this
shows up as pair-mismatch certificates on sampled paths.  The experiment
here samples seeded paths, runs the pair search on each, and reports the
hit rate together with variance diagnostics and the constructive
two-value separation used to justify the center-gap target.

Reproducibility: every path is a pure function of (process spec, seed,
trial index); trials are aggregated in trial order, so reports are
identical across worker counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._util import worker_count
from .rightlimits import find_pair_certificate
from .sequences import GeneratorSpec, OneSidedSequence, SequenceError, make_sequence

__all__ = [
    "ProcessSpec",
    "iid_process",
    "markov_process",
    "rotation_process",
    "sample_process",
    "IndexVariance",
    "variance_window",
    "Separation",
    "separated_values",
    "TrialResult",
    "MonteCarloReport",
    "certificate_rate_experiment",
]

_ROW_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ProcessSpec:
    """A bounded stochastic coefficient process.

    ``kind`` is ``iid`` (independent draws from finitely many atoms),
    ``markov`` (finite-state chain with per-state emission values), or
    ``rotation-driven`` (deterministic samples of a boundary function along
    an irrational rotation; the seed is ignored).  ``bound`` certifies
    sup |a_n| over all randomness.
    """

    kind: str
    params: dict
    bound: float
    seed: int


def iid_process(values, probs=None, seed: int = 0) -> ProcessSpec:
    vals = tuple(complex(v) for v in values)
    if not vals:
        raise SequenceError("iid process needs at least one atom")
    if probs is None:
        probs = tuple(1.0 / len(vals) for _ in vals)
    probs = tuple(float(p) for p in probs)
    if len(probs) != len(vals):
        raise SequenceError("values and probs must have equal length")
    if any(p < 0 for p in probs) or abs(sum(probs) - 1.0) > _ROW_SUM_TOL:
        raise SequenceError("probs must be nonnegative and sum to 1")
    bound = max(abs(v) for v in vals)
    return ProcessSpec("iid", {"values": vals, "probs": probs}, bound, seed)


def markov_process(emissions, transition, initial=None, seed: int = 0) -> ProcessSpec:
    em = tuple(complex(v) for v in emissions)
    tr = np.asarray(transition, dtype=float)
    k = len(em)
    if tr.shape != (k, k):
        raise SequenceError("transition matrix shape must match emissions")
    if np.any(tr < 0) or np.any(np.abs(tr.sum(axis=1) - 1.0) > _ROW_SUM_TOL):
        raise SequenceError("transition rows must be nonnegative and sum to 1")
    if initial is None:
        initial = tuple(1.0 / k for _ in range(k))
    initial = tuple(float(p) for p in initial)
    if abs(sum(initial) - 1.0) > _ROW_SUM_TOL or any(p < 0 for p in initial):
        raise SequenceError("initial distribution must be a distribution")
    bound = max(abs(v) for v in em)
    return ProcessSpec("markov",
                       {"emissions": em, "transition": tr.tolist(),
                        "initial": initial},
                       bound, seed)


def rotation_process(q: float, theta: float = 0.0,
                     boundary_fn="fractional-part", seed: int = 0) -> ProcessSpec:
    spec = GeneratorSpec("rotation",
                         {"q": q, "theta": theta, "boundary_fn": boundary_fn})
    probe = make_sequence(spec)  # validates q and the boundary function
    return ProcessSpec("rotation-driven",
                       {"q": q, "theta": theta,
                        "boundary_fn": spec.params["boundary_fn"]},
                       probe.bound, seed)


def _rng_for(spec: ProcessSpec, trial=None):
    if trial is None:
        ss = np.random.SeedSequence(spec.seed)
    else:
        ss = np.random.SeedSequence(spec.seed, spawn_key=(int(trial),))
    return np.random.default_rng(ss)


def _exact_kind_for(values) -> str:
    ints = all(v.imag == 0 and float(v.real).is_integer() for v in values)
    return "exact-integer" if ints else "exact-rational"


def sample_process(spec: ProcessSpec, length: int, trial=None) -> OneSidedSequence:
    """Draw one path of the process as an explicit sequence.

    The path is a deterministic function of (spec, seed, trial): repeated
    calls reproduce it bit for bit.
    """
    if length < 1:
        raise SequenceError("path length must be >= 1")
    if spec.kind == "iid":
        rng = _rng_for(spec, trial)
        vals = np.asarray(spec.params["values"], dtype=complex)
        idx = rng.choice(len(vals), size=length, p=spec.params["probs"])
        path = vals[idx]
        kind = _exact_kind_for(spec.params["values"])
    elif spec.kind == "markov":
        rng = _rng_for(spec, trial)
        em = np.asarray(spec.params["emissions"], dtype=complex)
        tr = np.asarray(spec.params["transition"], dtype=float)
        k = len(em)
        states = np.empty(length, dtype=np.int64)
        states[0] = rng.choice(k, p=spec.params["initial"])
        # one uniform per step, inverted through the row CDF
        u = rng.random(length - 1)
        cdf = np.cumsum(tr, axis=1)
        for i in range(1, length):
            states[i] = min(int(np.searchsorted(cdf[states[i - 1]], u[i - 1], side="right")), k - 1)
        path = em[states]
        kind = _exact_kind_for(spec.params["emissions"])
    elif spec.kind == "rotation-driven":
        gen = make_sequence(GeneratorSpec("rotation", dict(spec.params)))
        path = gen.prefix(length).copy()
        kind = "float"
    else:
        raise SequenceError(f"unknown process kind {spec.kind!r}")

    seq = OneSidedSequence(
        lambda n: path[n], spec.bound, f"stochastic-{spec.kind}",
        {"seed": spec.seed, "trial": trial, "kind": spec.kind},
        value_kind=kind, length=length,
        block_fn=lambda count: path[:count])
    return seq


# ---------------------------------------------------------------------------
# Variance diagnostics


@dataclass(frozen=True)
class IndexVariance:
    index: int
    variance: float
    standard_error: float
    samples: int


def _variance_with_se(x: np.ndarray):
    """Unbiased variance of complex draws with a batch-means standard error.

    Variance is sum |x - mean|^2 / (n-1); draws with a single value give
    (0, 0) exactly.  The SE comes from the spread of per-batch variances
    over disjoint batches (sd / sqrt(#batches)), which stays honest for
    two-point distributions where moment plug-in and jackknife both
    degenerate at symmetric samples.
    """
    n = x.size
    if n < 2 or bool(np.all(x == x[0])):
        return 0.0, 0.0
    mean = x.mean()
    var = float(np.sum(np.abs(x - mean) ** 2) / (n - 1))
    k = min(20, n // 10)
    if k < 2:
        # too few draws for batching: normal-theory fallback
        return var, var * math.sqrt(2.0 / (n - 1))
    bsize = n // k
    trimmed = x[: k * bsize].reshape(k, bsize)
    bmean = trimmed.mean(axis=1, keepdims=True)
    bvar = np.sum(np.abs(trimmed - bmean) ** 2, axis=1) / (bsize - 1)
    se = float(bvar.std(ddof=1) / math.sqrt(k))
    return var, se


def variance_window(spec: ProcessSpec, index_set, samples: int,
                    trial_base: int = 1_000_000) -> list:
    """Per-index empirical variance across independent sample paths."""
    if samples < 100:
        raise SequenceError("need at least 100 sample paths")
    indices = sorted(int(i) for i in index_set)
    if not indices or indices[0] < 0:
        raise SequenceError("index set must be nonempty and nonnegative")
    length = indices[-1] + 1
    draws = np.empty((samples, len(indices)), dtype=complex)
    for s in range(samples):
        path = sample_process(spec, length, trial=trial_base + s)
        vals = path.prefix(length)
        draws[s] = vals[indices]
    out = []
    for j, idx in enumerate(indices):
        var, se = _variance_with_se(draws[:, j])
        out.append(IndexVariance(idx, var, se, samples))
    return out


# ---------------------------------------------------------------------------
# Constructive two-value separation


@dataclass(frozen=True)
class Separation:
    """Two well-separated values each carrying definite probability mass.

    ``z`` and ``w`` are at distance >= sqrt(sigma/2); the disks of radius
    1/m around them carry empirical probability >= prob_z / prob_w, with
    prob_z >= 1/cover_size by the pigeonhole over the disk cover.
    """

    z: complex
    w: complex
    prob_z: float
    prob_w: float
    cover_size: int
    disk_radius: float
    threshold: float
    min_prob_w: float

    @property
    def separation(self) -> float:
        return abs(self.z - self.w)

    def to_json_dict(self):
        return {
            "z": [self.z.real, self.z.imag],
            "w": [self.w.real, self.w.imag],
            "prob_z": self.prob_z,
            "prob_w": self.prob_w,
            "cover_size": self.cover_size,
            "disk_radius": self.disk_radius,
            "threshold": self.threshold,
            "separation": self.separation,
        }


def _hex_cover(K: float, m: int):
    """Hexagonal-lattice centers (spacing sqrt(3)/m) covering the radius-K
    disk with disks of radius 1/m, enumerated lexicographically by
    (re, im)."""
    s = math.sqrt(3) / m
    R = K + 1.0 / m
    rows = int(math.ceil(R / (s * math.sqrt(3) / 2.0))) + 1
    cols = int(math.ceil(R / s)) + 1
    pts = []
    for j in range(-rows, rows + 1):
        y = j * s * math.sqrt(3) / 2.0
        off = (j % 2) * s / 2.0
        for i in range(-cols, cols + 1):
            x = i * s + off
            if math.hypot(x, y) <= R:
                pts.append(complex(x, y))
    pts.sort(key=lambda c: (c.real, c.imag))
    return pts


def separated_values(distribution, m: int, sigma: float, bound=None):
    """Constructively find two separated high-probability values.

    ``distribution`` is either an array of sample draws or a pair
    (values, probs) of atoms with weights.  The radius-K disk is covered by
    disks of radius 1/m (m is raised if needed so 1/m <= sqrt(sigma/2));
    z is a maximal-probability disk center (snapped to the conditional mean
    inside its disk when that does not lose mass), and w repeats the
    argument over centers at distance >= sqrt(sigma/2) from z.  Returns
    None when sigma = 0 or when no candidate retains enough mass.
    """
    if m < 1:
        raise SequenceError("cover parameter m must be >= 1")
    if sigma < 0:
        raise SequenceError("sigma must be >= 0")
    if isinstance(distribution, tuple) and len(distribution) == 2:
        points = np.asarray(distribution[0], dtype=complex)
        weights = np.asarray(distribution[1], dtype=float)
        if points.size != weights.size:
            raise SequenceError("values and probs must have equal length")
        weights = weights / weights.sum()
    else:
        points = np.asarray(distribution, dtype=complex).ravel()
        if points.size == 0:
            raise SequenceError("empty sample set")
        weights = np.full(points.size, 1.0 / points.size)
    if points.size == 0:
        raise SequenceError("empty sample set")

    if sigma == 0.0:
        return None
    K = float(bound) if bound is not None else float(np.max(np.abs(points)))
    K = max(K, 1e-12)
    threshold = math.sqrt(sigma / 2.0)
    m_eff = max(int(m), int(math.ceil(1.0 / threshold)))
    radius = 1.0 / m_eff

    centers = _hex_cover(K, m_eff)
    n_cover = len(centers)
    carr = np.asarray(centers, dtype=complex)
    mass = np.array([weights[np.abs(points - c) <= radius].sum() for c in carr])

    def pick(cand_idx):
        best = max(cand_idx, key=lambda i: (mass[i], -i))
        raw_prob = float(mass[best])
        sel = np.abs(points - carr[best]) <= radius
        snapped = complex(np.sum(points[sel] * weights[sel]) / weights[sel].sum())
        snapped_prob = float(weights[np.abs(points - snapped) <= radius].sum())
        if snapped_prob >= raw_prob:
            return snapped, snapped_prob
        return complex(carr[best]), raw_prob

    z, prob_z = pick(range(n_cover))
    if prob_z <= 0.0:
        return None

    k_tilde = (sigma / (8.0 * K * K)) / n_cover
    away = [i for i in range(n_cover) if abs(carr[i] - z) >= threshold]
    away = [i for i in away if mass[i] > 0]
    if not away:
        return None
    w, prob_w = pick(away)
    if abs(w - z) < threshold:
        # snapping pulled w inside the exclusion disk; keep the raw center
        best = max(away, key=lambda i: (mass[i], -i))
        w, prob_w = complex(carr[best]), float(mass[best])
    if prob_w < k_tilde:
        return None
    return Separation(z=z, w=w, prob_z=prob_z, prob_w=prob_w,
                      cover_size=n_cover, disk_radius=radius,
                      threshold=threshold, min_prob_w=k_tilde)


# ---------------------------------------------------------------------------
# Monte Carlo pair-certificate experiment


@dataclass(frozen=True)
class TrialResult:
    trial: int
    found: bool
    pairs: tuple
    flank_side: str | None
    variance: float
    variance_se: float


@dataclass
class MonteCarloReport:
    trials: int
    found_count: int
    results: list
    separation: Separation
    delta: float
    width: int
    horizon: int
    eps: float
    params: dict = field(default_factory=dict)

    @property
    def hit_rate(self) -> float:
        return self.found_count / self.trials if self.trials else 0.0

    def to_json_dict(self):
        return {
            "trials": self.trials,
            "found_count": self.found_count,
            "hit_rate": self.hit_rate,
            "separation": self.separation.to_json_dict(),
            "delta": self.delta,
            "width": self.width,
            "horizon": self.horizon,
            "eps": self.eps,
            "params": self.params,
            "results": [
                {"trial": t.trial, "found": t.found,
                 "pairs": [list(p) for p in t.pairs],
                 "flank_side": t.flank_side,
                 "variance": t.variance, "variance_se": t.variance_se}
                for t in self.results
            ],
        }


def _distribution_of(spec: ProcessSpec, calib_len: int = 4096):
    if spec.kind == "iid":
        values = np.asarray(spec.params["values"], dtype=complex)
        probs = np.asarray(spec.params["probs"], dtype=float)
        mean = np.sum(values * probs)
        sigma = float(np.sum(probs * np.abs(values) ** 2) - abs(mean) ** 2)
        return (values, probs), sigma
    path = sample_process(spec, calib_len, trial=None).prefix(calib_len)
    mean = path.mean()
    sigma = float(np.mean(np.abs(path - mean) ** 2))
    return path, sigma


def certificate_rate_experiment(spec: ProcessSpec, trials: int, width: int,
                                horizon: int, eps: float, delta: float,
                                min_recurrence: int = 3,
                                cover_m: int = 8) -> MonteCarloReport:
    """Sample seeded paths and search each for a pair-mismatch certificate.

    The center-separation target ``delta`` must not exceed the separation
    achieved by :func:`separated_values` on the process distribution
    (itself >= sqrt(sigma/2)); otherwise the experiment refuses to run.
    Witness pairs are re-verified against the stored path before being
    reported.
    """
    if trials < 1:
        raise SequenceError("need at least one trial")
    dist, sigma = _distribution_of(spec)
    sep = separated_values(dist, cover_m, sigma, bound=spec.bound)
    if sep is None:
        raise SequenceError(
            "precondition unsatisfiable: the process admits no separated "
            "value pair (sigma = 0 or too little mass); no delta > 0 is "
            "reachable")
    if delta > sep.separation + 1e-12:
        raise SequenceError(
            f"precondition unsatisfiable: delta = {delta} exceeds the "
            f"achieved separation {sep.separation}")

    def run(trial):
        path = sample_process(spec, horizon + 1, trial=trial)
        for side in ("backward", "forward"):
            cert = find_pair_certificate(path, width, horizon, eps=eps,
                                         delta=delta, flank_side=side,
                                         min_recurrence=min_recurrence)
            if cert is not None:
                assert cert.verify(path), "witness failed path re-verification"
                var, se = _variance_with_se(path.prefix(horizon + 1))
                return TrialResult(trial, True, cert.pairs, side, var, se)
        var, se = _variance_with_se(path.prefix(horizon + 1))
        return TrialResult(trial, False, (), None, var, se)

    with ThreadPoolExecutor(max_workers=min(worker_count(), trials)) as ex:
        results = list(ex.map(run, range(trials)))

    found = sum(1 for r in results if r.found)
    return MonteCarloReport(
        trials=trials, found_count=found, results=results, separation=sep,
        delta=delta, width=width, horizon=horizon, eps=eps,
        params={"kind": spec.kind, "seed": spec.seed,
                "min_recurrence": min_recurrence})
