"""Certified evaluation, shift identity, two-sided sums, probe, checks."""

import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

import nbscope as nb
from nbscope.analytic import (
    AnalyticError,
    ArcSpec,
    NumericCapError,
    boundary_l1_scan,
    decay_rule_check,
    eval_two_sided,
    periodic_reflectionless_check,
    truncation_length,
)


# ---------------------------------------------------------------------------
# truncation length


def test_truncation_length_examples():
    assert truncation_length(1.0, 0.5, 1e-10) == 35
    assert truncation_length(1.0, 0.9, 1e-8) == 197
    assert truncation_length(1.0, 0.5, 3.0) == 0


@settings(max_examples=150, deadline=None)
@given(st.floats(0.1, 5.0), st.floats(0.05, 0.99), st.floats(1e-12, 1e-2))
def test_truncation_length_minimality(bound, r, tol):
    n = truncation_length(bound, r, tol)
    assert bound * r ** n / (1 - r) <= tol
    if n > 0:
        assert bound * r ** (n - 1) / (1 - r) > tol


# ---------------------------------------------------------------------------
# eval_f


def test_eval_geometric():
    seq = nb.make_sequence(nb.periodic([1]))
    res = nb.eval_f(seq, 0.5, tol=1e-10)
    assert abs(res.value - 2.0) <= res.abs_error_bound + 1e-12


def test_eval_gap_factorials_value():
    # oracle: high-precision sparse sum of 0.5^(k!)
    with mpmath.workdps(40):
        oracle = sum(mpmath.mpf(0.5) ** math.factorial(k) for k in range(1, 8))
    seq = nb.make_sequence(nb.gap_powers("factorials", 1))
    res = nb.eval_f(seq, 0.5, tol=1e-10)
    assert abs(res.value - float(oracle)) <= res.abs_error_bound
    assert res.value.real == pytest.approx(0.7656250596, abs=1e-9)


def test_eval_at_zero_and_domain():
    rs = nb.make_sequence(nb.rudin_shapiro())
    assert nb.eval_f(rs, 0.0).value == 1.0
    with pytest.raises(AnalyticError):
        nb.eval_f(rs, 1.0)
    with pytest.raises(NumericCapError) as exc:
        nb.eval_f(rs, 1 - 2e-9, tol=1e-300)
    assert exc.value.required > nb.analytic.TERM_CAP


def test_tail_bound_validity_against_extended_precision():
    # 200 random (sequence, z, N): the true tail (4N extra terms at 40
    # digits) never exceeds the geometric bound
    rng = np.random.default_rng(12)
    with mpmath.workdps(40):
        for _ in range(200):
            length = 160
            vals = rng.uniform(-1, 1, size=length) + 1j * rng.uniform(-1, 1, size=length)
            bound = float(np.max(np.abs(vals)))
            n0 = int(rng.integers(5, 32))
            r = float(rng.uniform(0.2, 0.8))
            phi = float(rng.uniform(0, 2 * math.pi))
            z = mpmath.mpf(r) * mpmath.exp(1j * phi)
            tail = mpmath.fsum(
                mpmath.mpc(vals[n]) * z ** n for n in range(n0, min(5 * n0, length)))
            assert abs(tail) <= bound * r ** n0 / (1 - r) + 1e-30


# ---------------------------------------------------------------------------
# shift identity


def test_shift_pair_geometric_example():
    seq = nb.make_sequence(nb.periodic([1]))
    res = nb.eval_shift_pair(seq, 3, 0.5, tol=1e-12)
    assert abs(res.fplus.value - 2.0) <= res.fplus.abs_error_bound + 1e-12
    assert res.fminus == 14.0
    assert res.identity_residual <= res.residual_allowance


def test_shift_zero_reduces_to_plain_eval():
    rs = nb.make_sequence(nb.rudin_shapiro())
    res = nb.eval_shift_pair(rs, 0, 0.4, tol=1e-12)
    assert res.fminus == 0.0
    plain = nb.eval_f(rs, 0.4, tol=1e-12)
    assert abs(res.fplus.value - plain.value) <= 1e-12


def test_shift_identity_extended_precision_oracle():
    rs = nb.make_sequence(nb.rudin_shapiro())
    res = nb.eval_shift_pair(rs, 8, 0.4j, tol=1e-12)
    assert res.identity_residual <= res.residual_allowance
    with mpmath.workdps(50):
        z = mpmath.mpc(0.4j)
        coeffs = rs.prefix(res.fplus.terms_used + 8)
        fplus = mpmath.fsum(mpmath.mpc(coeffs[8 + n]) * z ** n
                            for n in range(res.fplus.terms_used))
        assert abs(mpmath.mpc(res.fplus.value) - fplus) < 1e-13


def test_shift_identity_exact_for_integers_at_dyadic_points():
    rng = np.random.default_rng(3)
    for trial in range(10):
        vals = rng.integers(-3, 4, size=200)
        seq = nb.make_sequence(nb.explicit(vals))
        for shift in (0, 1, 5, 20):
            for z in (0.5, 0.25, -0.5):
                res = nb.eval_shift_pair(seq, shift, z)
                assert res.identity_residual == 0.0


def test_shift_rejects_zero():
    seq = nb.make_sequence(nb.periodic([1]))
    with pytest.raises(AnalyticError):
        nb.eval_shift_pair(seq, 3, 0.0)


# ---------------------------------------------------------------------------
# two-sided evaluation


def test_two_sided_constant():
    ext = nb.constant_extension(1.0)
    inside = eval_two_sided(ext, 0.5, tol=1e-12)
    assert abs(inside.value - 2.0) <= inside.abs_error_bound + 1e-12
    outside = eval_two_sided(ext, 2.0, tol=1e-12)
    assert abs(outside.value - 1.0) <= outside.abs_error_bound + 1e-12
    # the inside series continues to -1/(1-z); at z=2 that equals +1,
    # cancelling the outside sum
    assert abs(-1.0 / (1.0 - 2.0) - outside.value) <= outside.abs_error_bound + 1e-12


def test_two_sided_single_negative_entry():
    win = nb.TwoSidedWindow((1.0, 0.0, 0.0), 1, {"kind": "test"})
    res = eval_two_sided(win, 2.0)
    assert res.value == 0.5
    assert res.abs_error_bound == 0.0


def test_two_sided_rejects_unit_circle():
    ext = nb.constant_extension(1.0)
    with pytest.raises(AnalyticError):
        eval_two_sided(ext, cmath.exp(0.3j))


def test_outside_bound_holds():
    # |sum_{n<=-1} b_n z^n| <= A / (1 - 1/|z|) at random outside points
    rng = np.random.default_rng(4)
    pat = [1.0, -0.5, 0.25, 0.8]
    ext = nb.periodic_extension(pat)
    A = max(abs(v) for v in pat)
    for _ in range(100):
        r = float(rng.uniform(1.1, 3.0))
        phi = float(rng.uniform(0, 2 * math.pi))
        z = r * cmath.exp(1j * phi)
        res = eval_two_sided(ext, z, tol=1e-12)
        assert abs(res.value) <= A / (1 - 1 / r) + 1e-9


# ---------------------------------------------------------------------------
# boundary probe


def test_probe_consistency_and_monotone_growth():
    seq = nb.make_sequence(nb.periodic([1]))
    arc = ArcSpec.full_circle()
    radii = [0.9, 0.99, 0.999]
    rep = boundary_l1_scan(seq, arc, radii, quad_points=4096, tol=1e-8)
    assert all(b > a for a, b in zip(rep.integrals, rep.integrals[1:]))
    # doubling the node count moves each integral by less than its bound
    rep2 = boundary_l1_scan(seq, arc, radii, quad_points=8192, tol=1e-8)
    for i in range(len(radii)):
        assert abs(rep2.integrals[i] - rep.integrals[i]) <= rep.quad_errors[i]


def test_probe_matches_adaptive_oracle_away_from_pole():
    seq = nb.make_sequence(nb.periodic([1]))
    arc = ArcSpec(math.pi / 2, 3 * math.pi / 2)
    rep = boundary_l1_scan(seq, arc, [0.99], quad_points=2048, tol=1e-9)
    oracle, _ = quad(lambda t: 1.0 / abs(1 - 0.99 * cmath.exp(1j * t)),
                     math.pi / 2, 3 * math.pi / 2, limit=200)
    oracle /= 2 * math.pi
    assert abs(rep.integrals[0] - oracle) <= rep.quad_errors[0] + rep.trunc_errors[0]


def test_probe_rejects_bad_radii():
    seq = nb.make_sequence(nb.periodic([1]))
    with pytest.raises(AnalyticError):
        boundary_l1_scan(seq, ArcSpec.full_circle(), [0.99, 0.9])
    with pytest.raises(AnalyticError):
        boundary_l1_scan(seq, ArcSpec.full_circle(), [0.5], quad_points=32)


def test_probe_csv_format(tmp_path):
    seq = nb.make_sequence(nb.periodic([1]))
    rep = boundary_l1_scan(seq, ArcSpec.full_circle(), [0.5, 0.9],
                           quad_points=256, tol=1e-8)
    out = tmp_path / "probe.csv"
    rep.write_csv(str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "r,integral,quad_err,trunc_err"
    assert len(lines) == 3
    d = rep.to_json_dict()
    assert "growth_fit" in d and d["growth_fit"]["slope"] is not None


# ---------------------------------------------------------------------------
# arc spec


def test_arcspec_validation_and_membership():
    with pytest.raises(AnalyticError):
        ArcSpec(1.0, 1.0)
    with pytest.raises(AnalyticError):
        ArcSpec(0.0, 7.0)
    arc = ArcSpec(-0.5, 0.5)
    assert arc.contains_angle(0.0)
    assert arc.contains_angle(2 * math.pi)  # wraps to 0
    assert not arc.contains_angle(math.pi)
    assert ArcSpec.full_circle().contains_angle(1.234)


# ---------------------------------------------------------------------------
# periodic reflectionless check


def test_reflectionless_constant_pattern():
    res = periodic_reflectionless_check([1], ArcSpec(0.1, 2 * math.pi - 0.1))
    assert res.passed
    assert res.max_confirmation_defect <= 1e-10


def test_reflectionless_pole_survives():
    res = periodic_reflectionless_check([1, 0], ArcSpec(-0.5, 0.5))
    assert not res.passed
    assert "0/1" in res.reason


def test_reflectionless_cancellation():
    res = periodic_reflectionless_check([1, -1], ArcSpec(-0.5, 0.5))
    assert res.passed
    form = res.form
    assert [c.real for c in form.denominator] == [1.0, 1.0]  # 1 + z
    assert {(p.num, p.den) for p in form.poles} == {(1, 2)}


def _pole_oracle(pattern, arc):
    """Direct root-of-unity enumeration: evaluate the one-period polynomial
    at every p-th root; a root with nonzero value is a surviving pole."""
    p = len(pattern)
    scale = max(1.0, sum(abs(c) for c in pattern))
    for k in range(p):
        w = cmath.exp(2j * math.pi * k / p)
        val = sum(c * w ** j for j, c in enumerate(pattern))
        if abs(val) > 1e-9 * scale and arc.contains_angle(2 * math.pi * k / p):
            return False
    return True


def test_reflectionless_small_pattern_spotchecks():
    arc = ArcSpec(0.1, 2 * math.pi - 0.1)
    for pattern in ([1], [0], [1, -1], [1, 0], [1, 1, 0], [1, -1, 1, -1]):
        res = periodic_reflectionless_check(pattern, arc, samples=20)
        assert res.passed == _pole_oracle(pattern, arc), pattern


# ---------------------------------------------------------------------------
# decay rule


def test_decay_rule_examples():
    w1 = nb.TwoSidedWindow((1.0, 0.0, 0.0), 1, {"kind": "test"})
    assert decay_rule_check(w1, "positive", 1.0, 1.0, 0.5) == \
        nb.analytic.DecayRuleResult("not-reflectionless", -1)

    w2 = nb.TwoSidedWindow((0.0,) * 7, 3, {"kind": "test"})
    assert decay_rule_check(w2, "positive", 1.0, 1.0, 0.5) == \
        nb.analytic.DecayRuleResult("consistent-with-zero", None)

    vals = (0.0, 0.0, 0.0, 1.0, 0.5, 0.25, 0.125)
    w3 = nb.TwoSidedWindow(vals, 3, {"kind": "test"})
    assert decay_rule_check(w3, "positive", 1.0, math.log(2), 0.5) == \
        nb.analytic.DecayRuleResult("not-reflectionless", 0)


def test_decay_rule_rejects_violated_hypothesis():
    vals = (0.0, 0.0, 0.0, 0.0, 0.9, 0.9, 0.9)
    win = nb.TwoSidedWindow(vals, 3, {"kind": "test"})
    with pytest.raises(AnalyticError) as exc:
        decay_rule_check(win, "positive", 0.5, 1.0, 0.5)
    assert "offsets" in str(exc.value)


def test_probe_independent_of_worker_count(monkeypatch):
    seq = nb.make_sequence(nb.gap_powers("squares", 1))
    arc = ArcSpec(0.2, 1.7)
    radii = [0.5, 0.9, 0.99]
    monkeypatch.setenv("NBSCOPE_THREADS", "1")
    one = boundary_l1_scan(seq, arc, radii, quad_points=512, tol=1e-8)
    monkeypatch.setenv("NBSCOPE_THREADS", "4")
    four = boundary_l1_scan(seq, arc, radii, quad_points=512, tol=1e-8)
    assert one.integrals == four.integrals
    assert one.quad_errors == four.quad_errors
