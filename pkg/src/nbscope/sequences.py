"""Bounded coefficient sequences and their canonical generator families.

A one-sided sequence a_0, a_1, ... with sup_n |a_n| < infinity is the basic
object of study: it is the coefficient stream of a power series analytic on
the open unit disk.  This module provides

* :class:`OneSidedSequence` -- a deterministic, bounded, total map from
  nonnegative indices to complex values, with a certified bound;
* generator families (periodic patterns, sparse gap-power supports,
  Rudin-Shapiro, irrational-rotation samples, ramped gap sequences with hard
  or soft edges, explicit arrays);
* :class:`TwoSidedWindow` -- a finite two-sided excerpt b_{-W}..b_W used as a
  desk-scale stand-in for a right limit (a limit of index-shifted copies of
  the sequence along indices going to infinity);
* two-sided extensions for evaluating the outside series of a window;
* CSV import/export with the ``n,re,im`` schema.

All generators are pure: construction fixes every value, queries never
mutate, and repeated queries return identical results.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from ._util import fmt17

__all__ = [
    "SequenceError",
    "GeneratorSpec",
    "OneSidedSequence",
    "TwoSidedWindow",
    "TwoSidedSequence",
    "make_sequence",
    "periodic",
    "gap_powers",
    "rudin_shapiro",
    "rotation",
    "erdos",
    "explicit",
    "window",
    "snap_to_limit_points",
    "constant_extension",
    "periodic_extension",
    "window_extension",
    "write_sequence_csv",
    "read_sequence_csv",
    "write_window_csv",
    "read_window_csv",
    "default_eps",
]

#: Denominator cap used when screening rotation numbers for rationality.
_RATIONAL_DENOM_CAP = 10 ** 6
_RATIONAL_TOL = 1e-12

# Bound checks allow this much floating slack on |value| <= bound.
_BOUND_SLACK = 1e-9


class SequenceError(ValueError):
    """Invalid generator specification or sequence-domain error."""


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator family tag plus its parameters.

    ``family`` is one of ``periodic``, ``gap-powers``, ``rudin-shapiro``,
    ``rotation``, ``erdos``, ``explicit``, ``stochastic``.
    """

    family: str
    params: dict = field(default_factory=dict)


def periodic(pattern: Sequence[complex]) -> GeneratorSpec:
    """a_n = pattern[n mod p].  The pattern must be nonempty."""
    return GeneratorSpec("periodic", {"pattern": tuple(complex(v) for v in pattern)})


def gap_powers(exponents="factorials", fill: complex = 1.0) -> GeneratorSpec:
    """a_n = fill on a sparse exponent set, 0 elsewhere.

    ``exponents`` is ``"factorials"`` ({k! : k >= 1}), ``"squares"``
    ({k^2 : k >= 0}), an explicit iterable of nonnegative integers, or a
    zero-argument callable returning an ascending iterator (so horizons up
    to 1e9 never materialize arrays).
    """
    return GeneratorSpec("gap-powers", {"exponents": exponents, "fill": complex(fill)})


def rudin_shapiro() -> GeneratorSpec:
    """The +-1 sequence built from the paired polynomial recursion.

    a_n = (-1)^(number of occurrences of "11" in the binary expansion of n).
    """
    return GeneratorSpec("rudin-shapiro", {})


def rotation(q: float, theta: float = 0.0, boundary_fn="fractional-part") -> GeneratorSpec:
    """Samples of a boundary function along an irrational rotation.

    a_n = F(frac(n*q + theta)) where F maps [0,1) to a bounded value.
    ``boundary_fn`` is ``"fractional-part"`` (F(x) = x), ``"half-indicator"``
    (1 on [0, 1/2), else 0), or a pair ``(callable, sup_bound)``.

    Construction rejects q with a rational approximation p/q' (q' <= 1e6)
    within 1e-12.  The screen is conservative: quadratic irrationals whose
    continued-fraction denominators land close to the cap (e.g. sqrt(3))
    are rejected along with true rationals.
    """
    return GeneratorSpec(
        "rotation", {"q": float(q), "theta": float(theta), "boundary_fn": boundary_fn}
    )


def erdos(edge: str = "hard") -> GeneratorSpec:
    """Sequences vanishing on the union of blocks [j!, j!+j] for j >= 2.

    ``hard``: value 1 everywhere off the blocks (the value jumps at block
    edges).  ``soft``: each gap between blocks carries a symmetric
    piecewise-linear ramp 0 -> 1 -> 0 whose rise length is
    floor(sqrt(gap length)), so the slope decays and every long window
    looks nearly constant.
    """
    if edge not in ("hard", "soft"):
        raise SequenceError(f"erdos edge must be 'hard' or 'soft', got {edge!r}")
    return GeneratorSpec("erdos", {"edge": edge})


def explicit(values: Iterable[complex]) -> GeneratorSpec:
    """A finite explicit coefficient list."""
    return GeneratorSpec("explicit", {"values": tuple(complex(v) for v in values)})


# ---------------------------------------------------------------------------
# Core sequence type


class OneSidedSequence:
    """A bounded coefficient sequence with a certified sup bound.

    Values are queried with :meth:`eval` (single index) or :meth:`prefix`
    (the first ``count`` values as a numpy array, cached and grown on
    demand).  ``value_kind`` records whether values admit exact equality
    comparison (``exact-integer`` / ``exact-rational``) or need a tolerance
    (``float``); downstream searches pick their default matching tolerance
    from it.

    ``length`` is ``None`` for generators defined at every index and a
    finite count for explicit/CSV-backed sequences, whose analyses clamp
    their horizons accordingly.
    """

    def __init__(self, fn, bound, family, params=None, value_kind="float",
                 length=None, block_fn=None):
        self._fn = fn
        self._block_fn = block_fn
        self.bound = float(bound)
        self.family = family
        self.params = dict(params or {})
        self.value_kind = value_kind
        self.length = length
        self._cache = np.empty(0, dtype=complex)

    # -- queries ----------------------------------------------------------

    @property
    def exact(self) -> bool:
        return self.value_kind in ("exact-integer", "exact-rational")

    def eval(self, n: int) -> complex:
        if n < 0:
            raise SequenceError(f"index must be >= 0, got {n}")
        if self.length is not None and n >= self.length:
            raise SequenceError(
                f"index {n} beyond explicit sequence length {self.length}")
        if n < self._cache.shape[0]:
            return complex(self._cache[n])
        v = complex(self._fn(n))
        assert abs(v) <= self.bound * (1 + 1e-12) + _BOUND_SLACK, \
            f"|a_{n}| = {abs(v)} exceeds certified bound {self.bound}"
        return v

    def prefix(self, count: int) -> np.ndarray:
        """First ``count`` values as a complex array (cached)."""
        if self.length is not None and count > self.length:
            raise SequenceError(
                f"prefix({count}) beyond explicit sequence length {self.length}")
        if count > self._cache.shape[0]:
            if self._block_fn is not None:
                arr = np.asarray(self._block_fn(count), dtype=complex)
            else:
                arr = np.array([self._fn(n) for n in range(count)], dtype=complex)
            assert bool(np.all(np.abs(arr) <= self.bound * (1 + 1e-12) + _BOUND_SLACK)), \
                "generator exceeded its certified bound"
            self._cache = arr
        return self._cache[:count]

    def clamp_horizon(self, horizon: int) -> int:
        """Largest usable index not exceeding ``horizon``."""
        if self.length is not None:
            return min(horizon, self.length - 1)
        return horizon

    def window(self, center: int, radius: int) -> "TwoSidedWindow":
        return window(self, center, radius)

    def __repr__(self):
        return (f"OneSidedSequence(family={self.family!r}, bound={self.bound}, "
                f"value_kind={self.value_kind!r}, length={self.length})")


@dataclass(frozen=True)
class TwoSidedWindow:
    """A finite two-sided excerpt b_{-W}..b_W of a (candidate) right limit.

    ``provenance`` records where the window came from: a single center
    ``{"kind": "center", "n": n}`` (values are exact reads a_{n+k}) or a
    recurrence cluster ``{"kind": "cluster", "indices": (...)}`` whose
    members all match the stored values within ``eps``.
    """

    values: tuple
    radius: int
    provenance: dict
    eps: float = 0.0
    bound: float = 0.0

    def __post_init__(self):
        if len(self.values) != 2 * self.radius + 1:
            raise SequenceError(
                f"window of radius {self.radius} needs {2 * self.radius + 1} "
                f"values, got {len(self.values)}")

    def value(self, k: int) -> complex:
        if abs(k) > self.radius:
            raise SequenceError(f"offset {k} outside window radius {self.radius}")
        return self.values[k + self.radius]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex)


def window(seq: OneSidedSequence, center: int, radius: int) -> TwoSidedWindow:
    """Exact window a_{center-W}..a_{center+W}; requires center >= W."""
    if radius < 0:
        raise SequenceError("window radius must be >= 0")
    if center < radius:
        raise SequenceError(
            f"window center {center} smaller than radius {radius}")
    vals = tuple(seq.eval(center + k) for k in range(-radius, radius + 1))
    return TwoSidedWindow(vals, radius, {"kind": "center", "n": center},
                          eps=0.0, bound=seq.bound)


# ---------------------------------------------------------------------------
# Family construction


def _is_integral(v: complex) -> bool:
    return v.imag == 0.0 and float(v.real).is_integer()


def _exact_kind(values) -> str:
    return "exact-integer" if all(_is_integral(v) for v in values) else "exact-rational"


def _make_periodic(params) -> OneSidedSequence:
    pattern = tuple(complex(v) for v in params.get("pattern", ()))
    if not pattern:
        raise SequenceError("periodic pattern must be nonempty")
    p = len(pattern)
    arr = np.asarray(pattern, dtype=complex)
    bound = float(np.max(np.abs(arr))) if p else 0.0

    def fn(n):
        return pattern[n % p]

    def block(count):
        reps = count // p + 1
        return np.tile(arr, reps)[:count]

    return OneSidedSequence(fn, bound, "periodic", {"pattern": pattern},
                            value_kind=_exact_kind(pattern), block_fn=block)


def _factorials():
    f, k = 1, 1
    while True:
        yield f
        k += 1
        f *= k


def _squares():
    k = 0
    while True:
        yield k * k
        k += 1


class _ExponentSet:
    """Lazily grown ascending exponent set with O(1) membership for seen range."""

    def __init__(self, iterator_factory):
        self._it = iterator_factory()
        self._seen = set()
        self._limit = -1  # all exponents <= _limit are in _seen
        self._last = -1

    def grow_to(self, n: int):
        while self._limit < n:
            e = next(self._it, None)
            if e is None:
                self._limit = math.inf
                return
            if e < 0 or e <= self._last:
                raise SequenceError(
                    "exponent stream must be strictly ascending and nonnegative")
            self._last = e
            self._seen.add(e)
            self._limit = e

    def __contains__(self, n: int) -> bool:
        self.grow_to(n)
        return n in self._seen

    def upto(self, n: int):
        self.grow_to(n)
        return sorted(e for e in self._seen if e <= n)


def _exponent_factory(spec):
    if spec == "factorials":
        return _factorials
    if spec == "squares":
        return _squares
    if callable(spec):
        return spec
    try:
        values = sorted(set(int(e) for e in spec))
    except TypeError:
        raise SequenceError(f"malformed exponent set: {spec!r}") from None
    if any(e < 0 for e in values):
        raise SequenceError("exponents must be nonnegative integers")
    if not values:
        raise SequenceError("exponent set must be nonempty")
    return lambda: iter(values)


def _make_gap_powers(params) -> OneSidedSequence:
    fill = complex(params.get("fill", 1.0))
    exps = _ExponentSet(_exponent_factory(params.get("exponents", "factorials")))
    bound = max(abs(fill), 1.0)
    name = params.get("exponents")
    label = name if isinstance(name, str) else "custom"

    def fn(n):
        return fill if n in exps else 0.0

    def block(count):
        arr = np.zeros(count, dtype=complex)
        for e in exps.upto(count - 1):
            arr[e] = fill
        return arr

    kind = "exact-integer" if _is_integral(fill) else "exact-rational"
    seq = OneSidedSequence(fn, bound, "gap-powers",
                           {"exponents": label, "fill": fill},
                           value_kind=kind, block_fn=block)
    # sparse support handle: lets evaluators sum over the exponent set
    # without materializing coefficient arrays (horizons up to 1e9)
    seq.gap_support = lambda count: (exps.upto(count - 1), fill)
    return seq


def _rs_value(n: int) -> int:
    # parity of the count of adjacent "11" bit pairs
    return 1 if ((n & (n >> 1)).bit_count() & 1) == 0 else -1


def _make_rudin_shapiro(params) -> OneSidedSequence:
    def block(count):
        ns = np.arange(count, dtype=np.uint64)
        pairs = np.bitwise_count(ns & (ns >> np.uint64(1)))
        return np.where(pairs & 1 == 0, 1.0, -1.0).astype(complex)

    return OneSidedSequence(_rs_value, 1.0, "rudin-shapiro", {},
                            value_kind="exact-integer", block_fn=block)


def _check_irrational(q: float):
    approx = Fraction(q).limit_denominator(_RATIONAL_DENOM_CAP)
    if abs(q - float(approx)) < _RATIONAL_TOL:
        raise SequenceError(
            f"rotation number {q!r} is within {_RATIONAL_TOL} of "
            f"{approx.numerator}/{approx.denominator}; an irrational rotation "
            f"number is required")


def _frac_shift_exact(n: int, q: float, theta: float) -> float:
    """frac(n*q + theta) with the product n*q carried in exact integer
    arithmetic on the binary representations of q and theta.

    A naive double product loses the low bits that decide values next to
    the discontinuity of the boundary function; this path is exact up to
    the single final rounding, for any n.
    """
    qn, qd = q.as_integer_ratio()       # qd is a power of two
    tn, td = theta.as_integer_ratio()
    d = max(qd, td)
    x = (n * qn * (d // qd) + tn * (d // td)) % d
    return x / d


_BOUNDARY_FNS = {
    "fractional-part": (lambda x: x, 1.0),
    "half-indicator": (lambda x: 1.0 if x < 0.5 else 0.0, 1.0),
}


def _make_rotation(params) -> OneSidedSequence:
    q = float(params["q"])
    theta = float(params.get("theta", 0.0))
    _check_irrational(q)
    bf = params.get("boundary_fn", "fractional-part")
    if isinstance(bf, str):
        if bf not in _BOUNDARY_FNS:
            raise SequenceError(f"unknown boundary function {bf!r}")
        func, sup = _BOUNDARY_FNS[bf]
        label = bf
    else:
        func, sup = bf
        label = "custom"

    def fn(n):
        return func(_frac_shift_exact(n, q, theta))

    return OneSidedSequence(fn, float(sup), "rotation",
                            {"q": q, "theta": theta, "boundary_fn": label},
                            value_kind="float")


def _erdos_blocks(limit: int):
    """Blocks [j!, j!+j], j >= 2, with start < limit."""
    out = []
    f, j = 2, 2
    while f < limit:
        out.append((f, f + j))
        j += 1
        f *= j
    return out


def _erdos_gap_value(t: int, gap_len: int) -> float:
    rise = math.isqrt(gap_len)
    return min(t + 1.0, float(gap_len - t), rise + 1.0) / (rise + 1.0)


def _erdos_locate(n: int):
    """(in_block, gap_lo, gap_len) for index n."""
    f, j = 2, 2
    prev_end = -1
    while True:
        if n < f:
            return False, prev_end + 1, f - (prev_end + 1)
        if n <= f + j:
            return True, 0, 0
        prev_end = f + j
        j += 1
        f *= j


def _make_erdos(params) -> OneSidedSequence:
    edge = params.get("edge", "hard")
    hard = edge == "hard"

    def fn(n):
        in_block, gap_lo, gap_len = _erdos_locate(n)
        if in_block:
            return 0.0
        if hard:
            return 1.0
        return _erdos_gap_value(n - gap_lo, gap_len)

    def block(count):
        if hard:
            arr = np.ones(count, dtype=complex)
            for lo, hi in _erdos_blocks(count):
                arr[lo:min(hi, count - 1) + 1] = 0.0
            return arr
        arr = np.zeros(count, dtype=complex)
        prev_end = -1
        blocks = _erdos_blocks(count) + [(None, None)]
        for lo, hi in blocks:
            if lo is None:
                gap_lo, gap_hi = prev_end + 1, count - 1
                # true gap extends to the next block start
                f, j = 2, 2
                while f <= gap_lo:
                    j += 1
                    f *= j
                true_len = f - gap_lo
            else:
                gap_lo, gap_hi = prev_end + 1, lo - 1
                true_len = lo - gap_lo
                prev_end = hi
            if gap_hi < gap_lo:
                continue
            t = np.arange(gap_lo, gap_hi + 1, dtype=float) - gap_lo
            rise = math.isqrt(true_len)
            vals = np.minimum(np.minimum(t + 1.0, true_len - t), rise + 1.0) / (rise + 1.0)
            arr[gap_lo:gap_hi + 1] = vals
        return arr[:count]

    kind = "exact-integer" if hard else "float"
    return OneSidedSequence(fn, 1.0, "erdos", {"edge": edge},
                            value_kind=kind, block_fn=block)


def _make_explicit(params) -> OneSidedSequence:
    values = tuple(complex(v) for v in params.get("values", ()))
    if not values:
        raise SequenceError("explicit sequence needs at least one value")
    arr = np.asarray(values, dtype=complex)
    bound = float(np.max(np.abs(arr)))
    kind = params.get("value_kind") or _exact_kind(values)

    def fn(n):
        return values[n]

    def block(count):
        return arr[:count]

    return OneSidedSequence(fn, bound, params.get("family_label", "explicit"),
                            {"count": len(values)}, value_kind=kind,
                            length=len(values), block_fn=block)


def make_sequence(spec: GeneratorSpec) -> OneSidedSequence:
    """Build the sequence described by ``spec``.

    The certified bound is the family's known sup: max |pattern| for
    periodic, max(|fill|, 1) for gap powers, 1 for Rudin-Shapiro and the
    ramped-gap families, sup of the boundary function for rotations.
    """
    family = spec.family
    if family == "periodic":
        return _make_periodic(spec.params)
    if family == "gap-powers":
        return _make_gap_powers(spec.params)
    if family == "rudin-shapiro":
        return _make_rudin_shapiro(spec.params)
    if family == "rotation":
        return _make_rotation(spec.params)
    if family == "erdos":
        return _make_erdos(spec.params)
    if family == "explicit":
        return _make_explicit(spec.params)
    if family == "stochastic":
        from . import randomseries

        proc = spec.params.get("process")
        length = spec.params.get("length")
        if proc is None or length is None:
            raise SequenceError(
                "stochastic spec needs 'process' and 'length' parameters")
        return randomseries.sample_process(proc, length)
    raise SequenceError(f"unknown generator family {family!r}")


def default_eps(seq: OneSidedSequence) -> float:
    """Matching tolerance: 0 for exact value kinds, 0.05 for float."""
    return 0.0 if seq.exact else 0.05


# ---------------------------------------------------------------------------
# Snapping to a finite limit-point set


def snap_to_limit_points(seq: OneSidedSequence, points: Sequence[complex],
                         onset_tol: float, scan_horizon: int = 10_000) -> OneSidedSequence:
    """Replace each a_n by the nearest member of the finite set ``points``.

    A bounded sequence whose values accumulate only at finitely many points
    eventually stays within gamma = half the minimal pairwise distance of
    the nearest point; the returned sequence records in ``params`` the first
    index (within ``scan_horizon``) from which |a_n - snapped_n| <= gamma
    holds through the end of the scan, plus any indices where the two
    nearest points were closer than ``onset_tol`` apart in distance (ties,
    broken by enumeration order of ``points``).
    """
    pts = [complex(p) for p in points]
    if not pts:
        raise SequenceError("need at least one limit point")
    if len(pts) > 1:
        min_dist = min(abs(a - b) for i, a in enumerate(pts)
                       for b in pts[i + 1:])
        if min_dist <= 2 * onset_tol:
            raise SequenceError(
                f"limit points must be pairwise farther apart than "
                f"2*onset_tol = {2 * onset_tol}")
        gamma = 0.5 * min_dist
    else:
        gamma = math.inf

    horizon = seq.clamp_horizon(scan_horizon)
    raw = seq.prefix(horizon + 1)
    parr = np.asarray(pts, dtype=complex)
    dists = np.abs(raw[:, None] - parr[None, :])
    idx = np.argmin(dists, axis=1)
    snapped = parr[idx]

    ties = []
    if len(pts) > 1:
        part = np.partition(dists, 1, axis=1)
        close = np.nonzero(part[:, 1] - part[:, 0] <= onset_tol)[0]
        ties = [int(i) for i in close]

    dev = np.abs(raw - snapped)
    viol = np.nonzero(dev > gamma)[0]
    onset = int(viol[-1]) + 1 if viol.size else 0

    snapped_tuple = tuple(complex(v) for v in snapped)

    def fn(n):
        if n <= horizon:
            return snapped_tuple[n]
        v = seq.eval(n)
        return min(pts, key=lambda p: abs(v - p))

    bound = max(abs(p) for p in pts)
    return OneSidedSequence(
        fn, bound, "snapped",
        {"points": tuple(pts), "gamma": gamma, "onset_index": onset,
         "ties": tuple(ties), "scan_horizon": horizon, "source": seq.family},
        value_kind=_exact_kind(pts), length=seq.length)


# ---------------------------------------------------------------------------
# Two-sided extensions (for outside-the-disk evaluation)


@dataclass(frozen=True)
class TwoSidedSequence:
    """A bounded two-sided sequence n -> b_n, n in Z."""

    fn: Callable[[int], complex]
    bound: float
    description: str = "two-sided"

    def eval(self, n: int) -> complex:
        v = complex(self.fn(n))
        assert abs(v) <= self.bound * (1 + 1e-12) + _BOUND_SLACK
        return v


def constant_extension(c: complex) -> TwoSidedSequence:
    c = complex(c)
    return TwoSidedSequence(lambda n: c, abs(c), f"constant {c}")


def periodic_extension(pattern: Sequence[complex]) -> TwoSidedSequence:
    pat = tuple(complex(v) for v in pattern)
    if not pat:
        raise SequenceError("periodic pattern must be nonempty")
    p = len(pat)
    bound = max(abs(v) for v in pat)
    return TwoSidedSequence(lambda n: pat[n % p], bound, f"periodic({p})")


def window_extension(win: TwoSidedWindow) -> TwoSidedSequence:
    """Zero-padding beyond the window radius."""
    W = win.radius

    def fn(n):
        return win.value(n) if abs(n) <= W else 0.0

    return TwoSidedSequence(fn, max(abs(v) for v in win.values) if win.values else 0.0,
                            "zero-padded window")


# ---------------------------------------------------------------------------
# CSV import/export: header "n,re,im", index ascending from 0, no gaps.


def write_sequence_csv(dest, seq: OneSidedSequence, count: int) -> None:
    vals = seq.prefix(count)
    _write_rows(dest, range(count), vals)


def _write_rows(dest, indices, vals) -> None:
    own = isinstance(dest, (str, bytes))
    f = open(dest, "w", newline="") if own else dest
    try:
        w = csv.writer(f)
        w.writerow(["n", "re", "im"])
        for n, v in zip(indices, vals):
            w.writerow([n, fmt17(v.real), fmt17(v.imag)])
    finally:
        if own:
            f.close()


def read_sequence_csv(src) -> OneSidedSequence:
    """Read a one-sided sequence; validates ascending gap-free indices.

    Integer-valued files import as exact (so downstream analyses compare
    with zero tolerance, matching in-memory generation of exact families);
    anything else imports as float.
    """
    rows = _read_rows(src)
    values = []
    for i, (n, v) in enumerate(rows):
        if n != i:
            raise SequenceError(
                f"CSV indices must ascend from 0 without gaps; row {i} has n={n}")
        values.append(v)
    if not values:
        raise SequenceError("CSV contains no data rows")
    kind = "exact-integer" if all(_is_integral(v) for v in values) else "float"
    return _make_explicit({"values": values, "family_label": "csv",
                           "value_kind": kind})


def write_window_csv(dest, win: TwoSidedWindow) -> None:
    W = win.radius
    _write_rows(dest, range(-W, W + 1), win.values)


def read_window_csv(src) -> TwoSidedWindow:
    """Read a two-sided window; indices must run -W..W without gaps."""
    rows = _read_rows(src)
    if not rows:
        raise SequenceError("CSV contains no data rows")
    ns = [n for n, _ in rows]
    W = max(ns)
    if sorted(ns) != list(range(-W, W + 1)):
        raise SequenceError("window CSV must cover -W..W without gaps")
    vals = dict(rows)
    values = tuple(vals[k] for k in range(-W, W + 1))
    return TwoSidedWindow(values, W, {"kind": "csv"}, eps=0.0,
                          bound=max(abs(v) for v in values))


def _read_rows(src):
    own = isinstance(src, (str, bytes))
    f = open(src, "r", newline="") if own else src
    try:
        if isinstance(f, io.TextIOBase) or hasattr(f, "read"):
            r = csv.reader(f)
        else:  # pragma: no cover
            raise SequenceError("unreadable CSV source")
        header = next(r, None)
        if header is None or [h.strip() for h in header] != ["n", "re", "im"]:
            raise SequenceError(f"expected header 'n,re,im', got {header}")
        out = []
        for row in r:
            if not row:
                continue
            if len(row) != 3:
                raise SequenceError(f"malformed CSV row: {row}")
            out.append((int(row[0]), complex(float(row[1]), float(row[2]))))
        return out
    finally:
        if own:
            f.close()
