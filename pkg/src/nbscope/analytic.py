"""Certified numerical evaluation of bounded power series near the unit circle.

Everything here carries explicit error bounds.  A sequence bounded by A has

    |sum_{n >= N} a_n z^n|  <=  A |z|^N / (1 - |z|)        (|z| < 1)
    |sum_{m >= N} b_{-m} z^{-m}|  <=  A |z|^{-N} / (1 - |z|^{-1})   (|z| > 1)

so a tolerance dictates a truncation length, and every evaluation returns
its value together with the geometric tail bound actually incurred.

The arc scan integrates |f(r e^{i theta})| over an arc of the unit circle
at a ladder of radii.  A series that continues analytically across an arc
keeps these integrals bounded as r -> 1; unbounded growth on every arc is
the numerical signature this probe looks for.  The probe only corroborates:
conclusions are carried by discrete certificates, never by the scan.
"""

from __future__ import annotations

import cmath
import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import czt

from . import ratform
from ._util import fmt17, ipow, kahan_complex_sum, worker_count
from .sequences import (
    OneSidedSequence,
    SequenceError,
    TwoSidedSequence,
    TwoSidedWindow,
    periodic_extension,
)

__all__ = [
    "AnalyticError",
    "NumericCapError",
    "ArcSpec",
    "EvalResult",
    "ShiftPairResult",
    "BoundaryProbeReport",
    "ReflectionlessCheckResult",
    "DecayRuleResult",
    "TERM_CAP",
    "truncation_length",
    "eval_f",
    "eval_shift_pair",
    "eval_two_sided",
    "boundary_l1_scan",
    "periodic_reflectionless_check",
    "decay_rule_check",
]

#: Hard cap on the number of series terms in a single evaluation.
TERM_CAP = 10 ** 8

_INSIDE_MARGIN = 1e-9


class AnalyticError(ValueError):
    """Domain violation for an analytic-engine operation."""


class NumericCapError(RuntimeError):
    """The requested tolerance needs more than TERM_CAP series terms."""

    def __init__(self, required: int, message: str | None = None):
        self.required = required
        super().__init__(message or
                         f"evaluation needs {required} terms (cap {TERM_CAP})")


@dataclass(frozen=True)
class ArcSpec:
    """An arc alpha < theta < beta of the unit circle, in radians.

    Width must be positive and strictly below a full turn; use
    :meth:`full_circle` for the whole circle.
    """

    alpha: float
    beta: float
    full: bool = False

    def __post_init__(self):
        if self.full:
            return
        if not (self.alpha < self.beta):
            raise AnalyticError("arc needs alpha < beta")
        if self.beta - self.alpha >= 2 * math.pi:
            raise AnalyticError(
                "arc width must be < 2*pi; use ArcSpec.full_circle()")

    @classmethod
    def full_circle(cls) -> "ArcSpec":
        return cls(0.0, 2.0 * math.pi, full=True)

    @property
    def width(self) -> float:
        return 2.0 * math.pi if self.full else self.beta - self.alpha

    def contains_angle(self, theta: float) -> bool:
        """Whether e^{i theta} lies on the closed arc."""
        if self.full:
            return True
        span = self.beta - self.alpha
        rel = (theta - self.alpha) % (2.0 * math.pi)
        return rel <= span or rel >= 2.0 * math.pi  # tolerate wrap rounding

    def to_json_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "full": self.full}


@dataclass(frozen=True)
class EvalResult:
    """A computed value with its certified absolute error bound."""

    value: complex
    abs_error_bound: float
    terms_used: int


@dataclass(frozen=True)
class ShiftPairResult:
    """Result of evaluating the index-shift identity at one point.

    For shift N the inside part sums a_{n+N} z^n, the outside part is the
    exact finite sum of a_j z^{j-N} over j < N, and together they must
    reproduce z^{-N} f(z).  ``identity_residual`` is the observed defect,
    ``residual_allowance`` is twice the combined truncation bounds it is
    contractually held under.
    """

    fplus: EvalResult
    fminus: complex
    identity_residual: float
    residual_allowance: float  # 2 * (truncation bounds + certified rounding)
    shift: int


def truncation_length(bound: float, r: float, tol: float) -> int:
    """Least N with bound * r**N / (1-r) <= tol; 0 if no terms are needed."""
    if not (0.0 < r < 1.0):
        raise AnalyticError(f"radius must be in (0,1), got {r}")
    if tol <= 0.0:
        raise AnalyticError("tolerance must be positive")
    if bound <= 0.0 or tol >= bound / (1.0 - r):
        return 0
    # closed-form estimate, then settle on the exact least N in float arithmetic
    n = max(0, math.ceil(math.log(tol * (1.0 - r) / bound) / math.log(r)))
    while bound * r ** n / (1.0 - r) > tol:
        n += 1
    while n > 0 and bound * r ** (n - 1) / (1.0 - r) <= tol:
        n -= 1
    return n


# ---------------------------------------------------------------------------
# Series summation helpers


_CHUNK = 1 << 16


def _sum_series_with_mass(coeffs: np.ndarray, z: complex,
                          start_exponent: int = 0):
    """(sum, mass) of sum_i coeffs[i] * z^(start_exponent + i), with
    compensated chunk accumulation; mass = sum of |term| for rounding
    bounds.  Powers advance by sequential multiplication, so exact dyadic
    inputs (e.g. z = 1/2 with integer coefficients) stay exact."""
    n = len(coeffs)
    if n == 0:
        return 0j, 0.0
    partials = []
    mass = 0.0
    power = ipow(z, start_exponent)
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        steps = np.empty(hi - lo, dtype=complex)
        steps[0] = power
        if hi - lo > 1:
            steps[1:] = z
        pw = np.cumprod(steps)
        terms = coeffs[lo:hi] * pw
        partials.append(complex(np.sum(terms)))
        mass += float(np.sum(np.abs(terms)))
        power = complex(pw[-1]) * z
    return kahan_complex_sum(partials), mass


def _sum_series(coeffs: np.ndarray, z: complex, start_exponent: int = 0) -> complex:
    return _sum_series_with_mass(coeffs, z, start_exponent)[0]


def _coeffs_for(seq: OneSidedSequence, count: int) -> np.ndarray:
    if seq.length is not None:
        count = min(count, seq.length)
    return seq.prefix(count)


def _gap_support(seq: OneSidedSequence, count: int):
    """(exponents, fill) for a sparse gap-power family, else None."""
    support = getattr(seq, "gap_support", None)
    if support is None:
        return None
    exps, fill = support(count)
    return np.asarray(exps, dtype=np.int64), complex(fill)


def eval_f(seq: OneSidedSequence, z: complex, tol: float = 1e-10) -> EvalResult:
    """Evaluate f(z) = sum a_n z^n inside the disk to within ``tol``."""
    z = complex(z)
    r = abs(z)
    if r > 1.0 - _INSIDE_MARGIN:
        raise AnalyticError(
            f"|z| = {r} too close to the unit circle (need <= {1 - _INSIDE_MARGIN})")
    if r == 0.0:
        return EvalResult(seq.eval(0), 0.0, 1)
    n_terms = truncation_length(seq.bound, r, tol)
    if n_terms > TERM_CAP:
        raise NumericCapError(n_terms)
    if seq.length is not None and n_terms >= seq.length:
        # finite polynomial: no tail at all
        coeffs = seq.prefix(seq.length)
        return EvalResult(_sum_series(coeffs, z), 0.0, seq.length)
    bound = seq.bound * r ** n_terms / (1.0 - r)
    sparse = _gap_support(seq, n_terms)
    if sparse is not None:
        exps, fill = sparse
        val = kahan_complex_sum(fill * ipow(z, int(e)) for e in exps)
        return EvalResult(val, bound, n_terms)
    coeffs = _coeffs_for(seq, n_terms)
    return EvalResult(_sum_series(coeffs, z), bound, n_terms)


def eval_shift_pair(seq: OneSidedSequence, shift: int, z: complex,
                    tol: float = 1e-12) -> ShiftPairResult:
    """Evaluate the shifted inside/outside split and its identity residual.

    The truncations are matched: f(z) is summed over exactly the
    coefficients used by the head and the shifted inside part, so the two
    truncation tails cancel and the residual is pure floating-point noise
    (identically zero for integer coefficients at dyadic z).
    """
    if shift < 0:
        raise AnalyticError("shift must be >= 0")
    z = complex(z)
    r = abs(z)
    if r == 0.0:
        raise AnalyticError("shift identity needs z != 0")
    if r > 1.0 - _INSIDE_MARGIN:
        raise AnalyticError("the shifted inside series needs |z| < 1")
    m_terms = truncation_length(seq.bound, r, tol)
    if shift + m_terms > TERM_CAP:
        raise NumericCapError(shift + m_terms)
    if seq.length is not None and shift + m_terms > seq.length:
        if shift > seq.length:
            raise SequenceError(
                f"shift {shift} beyond explicit sequence length {seq.length}")
        m_terms = seq.length - shift

    all_coeffs = _coeffs_for(seq, shift + m_terms)
    head, tail = all_coeffs[:shift], all_coeffs[shift:]

    fplus_val, fplus_mass = _sum_series_with_mass(tail, z, 0)
    fminus_val, fminus_mass = _sum_series_with_mass(head, z, -shift)
    head_val, head_mass = _sum_series_with_mass(head, z, 0)
    tail_val, tail_mass = _sum_series_with_mass(tail, z, shift)
    f_val = head_val + tail_val

    lhs = fplus_val + fminus_val
    scale = ipow(z, -shift)
    rhs = scale * f_val
    residual = abs(lhs - rhs)

    if seq.length is not None and shift + m_terms >= seq.length:
        tail_bound = 0.0
    else:
        tail_bound = seq.bound * r ** m_terms / (1.0 - r)
    f_bound = tail_bound * r ** shift          # tail of f starts at shift+m
    # certified rounding: each term of a length-k power sum carries at most
    # (k+3) ulps of relative error, compensation keeps accumulation below
    # that; the z^-shift rescale and final combination add |value|-level ulps
    eps_m = float(np.finfo(float).eps)
    rounding = eps_m * (
        (m_terms + 3) * fplus_mass
        + (shift + 3) * fminus_mass
        + abs(scale) * (shift + m_terms + 3) * (head_mass + tail_mass)
        + 2.0 * (abs(lhs) + abs(rhs)))
    allowance = 2.0 * (tail_bound + r ** (-shift) * f_bound + rounding)

    return ShiftPairResult(
        fplus=EvalResult(fplus_val, tail_bound, m_terms),
        fminus=fminus_val,
        identity_residual=residual,
        residual_allowance=allowance,
        shift=shift,
    )


def eval_two_sided(source, z: complex, tol: float = 1e-10) -> EvalResult:
    """Evaluate the inside series (|z| < 1) or the outside series (|z| > 1)
    of a two-sided window or two-sided sequence.

    Windows are zero-padded beyond their radius, so their sums are exact.
    """
    z = complex(z)
    r = abs(z)
    if r == 1.0:
        raise AnalyticError("two-sided evaluation is undefined on |z| = 1")
    if isinstance(source, TwoSidedWindow):
        W = source.radius
        if r < 1.0:
            vals = np.asarray([source.value(k) for k in range(0, W + 1)], dtype=complex)
            return EvalResult(_sum_series(vals, z, 0), 0.0, W + 1)
        vals = np.asarray([source.value(-m) for m in range(1, W + 1)], dtype=complex)
        return EvalResult(_sum_series(vals, 1.0 / z, 1), 0.0, W)
    if not isinstance(source, TwoSidedSequence):
        raise AnalyticError(
            "source must be a TwoSidedWindow or TwoSidedSequence")
    if r < 1.0:
        if r > 1.0 - _INSIDE_MARGIN:
            raise AnalyticError("|z| too close to 1 from inside")
        n_terms = truncation_length(source.bound, r, tol)
        if n_terms > TERM_CAP:
            raise NumericCapError(n_terms)
        vals = np.asarray([source.eval(n) for n in range(n_terms)], dtype=complex)
        bound = source.bound * r ** n_terms / (1.0 - r)
        return EvalResult(_sum_series(vals, z, 0), bound, n_terms)
    rinv = 1.0 / r
    if rinv > 1.0 - _INSIDE_MARGIN:
        raise AnalyticError("|z| too close to 1 from outside")
    n_terms = truncation_length(source.bound, rinv, tol)
    if n_terms > TERM_CAP:
        raise NumericCapError(n_terms)
    vals = np.asarray([source.eval(-m) for m in range(1, n_terms + 1)], dtype=complex)
    bound = source.bound * rinv ** (n_terms + 1) / (1.0 - rinv)
    return EvalResult(_sum_series(vals, 1.0 / z, 1), bound, n_terms)


# ---------------------------------------------------------------------------
# Boundary L1 scan


@dataclass(frozen=True)
class GrowthFit:
    """Least-squares fit I(r) ~ intercept + slope * log(1/(1-r))."""

    slope: float
    intercept: float
    max_rel_residual: float


@dataclass
class BoundaryProbeReport:
    """Arc integrals of |f| at a ladder of radii with error bounds.

    ``integrals[i]`` approximates the mean of |f(r e^{i theta})| over the
    arc, normalized by 2*pi (so the full circle gives the plain angular
    average).  ``quad_errors`` come from Richardson comparison at half the
    node count, ``trunc_errors`` integrate the per-node truncation
    tolerance.  Radii whose truncation would exceed the term cap are
    flagged in ``skipped`` and carry NaN entries.
    """

    arc: ArcSpec
    radii: list
    integrals: list
    quad_errors: list
    trunc_errors: list
    skipped: list
    quad_points: int
    tol: float
    growth: GrowthFit | None = None
    notes: list = field(default_factory=list)

    def write_csv(self, dest) -> None:
        own = isinstance(dest, (str, bytes))
        f = open(dest, "w", newline="") if own else dest
        try:
            w = csv.writer(f)
            w.writerow(["r", "integral", "quad_err", "trunc_err"])
            for r, i, q, t in zip(self.radii, self.integrals,
                                  self.quad_errors, self.trunc_errors):
                w.writerow([fmt17(r), fmt17(i), fmt17(q), fmt17(t)])
        finally:
            if own:
                f.close()

    def to_json_dict(self) -> dict:
        def clean(xs):
            return [None if (isinstance(x, float) and math.isnan(x)) else x
                    for x in xs]

        return {
            "arc": self.arc.to_json_dict(),
            "radii": list(self.radii),
            "integrals": clean(self.integrals),
            "quad_errors": clean(self.quad_errors),
            "trunc_errors": clean(self.trunc_errors),
            "skipped": list(self.skipped),
            "quad_points": self.quad_points,
            "tol": self.tol,
            "growth_fit": None if self.growth is None else {
                "slope": self.growth.slope,
                "intercept": self.growth.intercept,
                "max_rel_residual": self.growth.max_rel_residual,
            },
            "notes": list(self.notes),
        }


def _nodes_eval(coeffs: np.ndarray, r: float, arc: ArcSpec, m: int) -> np.ndarray:
    """f(r e^{i theta_j}) at the midpoint nodes theta_j = alpha + (j+1/2)h.

    Uses the chirp z-transform, i.e. an exact (to rounding) evaluation of
    the truncated series at all nodes in O((N+M) log) time.
    """
    h = arc.width / m
    a = (1.0 / r) * cmath.exp(-1j * (arc.alpha + h / 2.0))
    w = cmath.exp(1j * h)
    return czt(coeffs, m=m, w=w, a=a)


def _nodes_eval_sparse(exps, fill, r, arc: ArcSpec, m: int) -> np.ndarray:
    """Direct sparse summation: sum_e fill * (r e^{i theta_j})^e."""
    h = arc.width / m
    theta = arc.alpha + (np.arange(m) + 0.5) * h
    out = np.zeros(m, dtype=complex)
    logr = math.log(r)
    for lo in range(0, len(exps), 64):
        chunk = exps[lo:lo + 64].astype(float)
        radial = np.exp(chunk * logr)
        phase = np.exp(1j * (chunk[:, None] * theta[None, :] % (2 * math.pi)))
        out += (radial[:, None] * phase).sum(axis=0)
    return fill * out


# gap families above this term count skip array materialization entirely
_SPARSE_NODE_CUTOFF = 1 << 20


def _scan_one_radius(seq, arc, r, m, tol):
    n_terms = truncation_length(seq.bound, r, tol)
    if n_terms > TERM_CAP:
        return None
    if seq.length is not None:
        n_terms = min(n_terms, seq.length)
        trunc = 0.0 if n_terms == seq.length else seq.bound * r ** n_terms / (1.0 - r)
    else:
        trunc = seq.bound * r ** n_terms / (1.0 - r)
    weight = arc.width / (2.0 * math.pi)

    sparse = (_gap_support(seq, n_terms)
              if n_terms > _SPARSE_NODE_CUTOFF else None)
    if sparse is None:
        coeffs = np.ascontiguousarray(seq.prefix(n_terms))

    def integral(nodes_m):
        if sparse is not None:
            vals = _nodes_eval_sparse(sparse[0], sparse[1], r, arc, nodes_m)
        else:
            vals = _nodes_eval(coeffs, r, arc, nodes_m)
        return float(np.mean(np.abs(vals))) * weight

    i_half = integral(m)
    i_full = integral(2 * m)
    # Richardson difference plus a rounding allowance for the transform
    # (at converged radii the difference is pure float noise)
    fp_noise = 1e-12 * max(1.0, abs(i_full)) * math.log2(2 * m + n_terms + 4)
    quad_err = abs(i_full - i_half) + fp_noise
    trunc_err = trunc * weight
    return i_full, quad_err, trunc_err


def boundary_l1_scan(seq: OneSidedSequence, arc: ArcSpec, radii,
                     quad_points: int = 1024, tol: float = 1e-6) -> BoundaryProbeReport:
    """Scan the arc integral of |f| over an ascending ladder of radii.

    Midpoint quadrature at ``quad_points`` nodes (and at double resolution
    for the Richardson error estimate); per-node series truncation within
    ``tol``.  The growth fit regresses I(r) on log(1/(1-r)).
    """
    radii = [float(r) for r in radii]
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise AnalyticError("radii must be strictly ascending")
    if not radii:
        raise AnalyticError("need at least one radius")
    if not (0.0 < radii[0] and radii[-1] <= 1.0 - 1e-6):
        raise AnalyticError("radii must lie in (0, 1 - 1e-6]")
    if quad_points < 64:
        raise AnalyticError("need at least 64 quadrature nodes")

    with ThreadPoolExecutor(max_workers=min(worker_count(), len(radii))) as ex:
        rows = list(ex.map(lambda r: _scan_one_radius(seq, arc, r, quad_points, tol),
                           radii))

    integrals, quad_errors, trunc_errors, skipped = [], [], [], []
    notes = []
    for r, row in zip(radii, rows):
        if row is None:
            integrals.append(math.nan)
            quad_errors.append(math.nan)
            trunc_errors.append(math.nan)
            skipped.append(True)
            notes.append(f"radius {r} skipped: truncation exceeds term cap")
        else:
            integrals.append(row[0])
            quad_errors.append(row[1])
            trunc_errors.append(row[2])
            skipped.append(False)

    growth = None
    kept = [(r, i) for r, i, s in zip(radii, integrals, skipped) if not s]
    if len(kept) >= 2:
        lx = np.array([math.log(1.0 / (1.0 - r)) for r, _ in kept])
        iy = np.array([i for _, i in kept])
        design = np.vstack([np.ones_like(lx), lx]).T
        coef, *_ = np.linalg.lstsq(design, iy, rcond=None)
        fit = design @ coef
        denom = np.where(np.abs(iy) > 0, np.abs(iy), 1.0)
        growth = GrowthFit(slope=float(coef[1]), intercept=float(coef[0]),
                           max_rel_residual=float(np.max(np.abs(fit - iy) / denom)))

    return BoundaryProbeReport(arc=arc, radii=radii, integrals=integrals,
                               quad_errors=quad_errors, trunc_errors=trunc_errors,
                               skipped=skipped, quad_points=quad_points, tol=tol,
                               growth=growth, notes=notes)


# ---------------------------------------------------------------------------
# Reflectionless checks


@dataclass(frozen=True)
class ReflectionlessCheckResult:
    passed: bool
    reason: str
    form: ratform.RationalForm
    max_confirmation_defect: float

    def to_json_dict(self):
        return {
            "passed": self.passed,
            "reason": self.reason,
            "rational_form": self.form.to_json_dict(),
            "max_confirmation_defect": self.max_confirmation_defect,
        }


def periodic_reflectionless_check(pattern, arc: ArcSpec, samples: int = 50,
                                  tol: float = 1e-10) -> ReflectionlessCheckResult:
    """Decide whether the periodic two-sided sequence is reflectionless on
    the arc.

    The inside series of a p-periodic sequence is P(z)/(1 - z^p); after
    cancelling shared roots of unity the check passes iff no surviving pole
    lies on the closed arc.  The algebra is then confirmed numerically: at
    ``samples`` points outside the disk near the arc, the reduced form must
    cancel the outside series within the truncation bound plus ``tol``.
    """
    pattern = [complex(v) for v in pattern]
    if not pattern:
        raise AnalyticError("pattern must be nonempty")
    form = ratform.reduce_eventually_periodic([], pattern)

    offending = [p for p in form.poles if arc.contains_angle(p.angle)]
    if offending:
        labels = ", ".join(p.label() for p in offending)
        return ReflectionlessCheckResult(
            False, f"surviving pole(s) on the closed arc: {labels}",
            form, math.nan)

    ext = periodic_extension(pattern)
    max_defect = 0.0
    for i in range(samples):
        phi = arc.alpha + (i + 0.5) * arc.width / samples
        rho = 1.1 + 0.8 * (i / max(1, samples - 1))
        zz = rho * cmath.exp(1j * phi)
        outside = eval_two_sided(ext, zz, tol=1e-12)
        defect = abs(form.value(zz) + outside.value)
        max_defect = max(max_defect, defect)
        if defect > outside.abs_error_bound + tol:
            return ReflectionlessCheckResult(
                False,
                f"outside-series confirmation failed at z = {zz!r}: "
                f"defect {defect} exceeds allowance",
                form, defect)

    return ReflectionlessCheckResult(True, "no surviving pole on the arc",
                                     form, max_defect)


@dataclass(frozen=True)
class DecayRuleResult:
    outcome: str                 # "not-reflectionless" | "consistent-with-zero"
    witness: int | None

    def to_json_dict(self):
        return {"outcome": self.outcome, "witness": self.witness}


def decay_rule_check(win: TwoSidedWindow, side: str, c: float, d: float,
                     delta: float) -> DecayRuleResult:
    """Decision rule for exponentially one-sided-decaying window values.

    A two-sided sequence that is reflectionless on some arc and decays
    exponentially on one side must vanish identically.  Contrapositively:
    once the claimed side verifies |b_n| <= c*e^(-d|n|), any window value
    of magnitude >= delta anywhere witnesses that the sequence cannot be
    reflectionless on any arc.
    """
    if side not in ("positive", "negative"):
        raise AnalyticError("side must be 'positive' or 'negative'")
    if c <= 0 or d <= 0:
        raise AnalyticError("decay constants must be positive")
    W = win.radius
    ks = range(1, W + 1) if side == "positive" else range(-W, 0)
    violations = [k for k in ks
                  if abs(win.value(k)) > c * math.exp(-d * abs(k)) * (1 + 1e-9) + 1e-300]
    if violations:
        raise AnalyticError(
            f"decay hypothesis fails on the {side} side at offsets {violations}")
    for k in range(-W, W + 1):
        if abs(win.value(k)) >= delta:
            return DecayRuleResult("not-reflectionless", k)
    return DecayRuleResult("consistent-with-zero", None)
