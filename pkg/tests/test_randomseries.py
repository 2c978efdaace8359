"""Seeded processes, variance diagnostics, separation, Monte Carlo."""

import json
import math

import numpy as np
import pytest

import nbscope as nb
from nbscope.sequences import SequenceError


def test_seeded_reproducibility():
    spec = nb.iid_process([0, 1], [0.5, 0.5], seed=42)
    a = nb.sample_process(spec, 1000).prefix(1000)
    b = nb.sample_process(spec, 1000).prefix(1000)
    np.testing.assert_array_equal(a, b)


def test_different_seeds_diverge_early():
    a = nb.sample_process(nb.iid_process([0, 1], seed=42), 100).prefix(100)
    b = nb.sample_process(nb.iid_process([0, 1], seed=43), 100).prefix(100)
    # agreement of the whole block has probability 2^-100; flagged statistical
    assert not np.array_equal(a, b)


def test_path_respects_bound():
    spec = nb.iid_process([0.5, -1j, 1], seed=9)
    path = nb.sample_process(spec, 5000)
    assert float(np.max(np.abs(path.prefix(5000)))) <= spec.bound


def test_trial_streams_differ():
    spec = nb.iid_process([0, 1], seed=1)
    a = nb.sample_process(spec, 200, trial=0).prefix(200)
    b = nb.sample_process(spec, 200, trial=1).prefix(200)
    assert not np.array_equal(a, b)


def test_markov_process_path():
    spec = nb.markov_process([0, 1], [[0.9, 0.1], [0.5, 0.5]], seed=5)
    path = nb.sample_process(spec, 2000)
    vals = path.prefix(2000).real
    assert set(np.unique(vals)) <= {0.0, 1.0}
    # heavy self-loop at state 0 biases occupation toward 0
    assert vals.mean() < 0.5


def test_markov_validation():
    with pytest.raises(SequenceError):
        nb.markov_process([0, 1], [[0.9, 0.2], [0.5, 0.5]])


def test_variance_window_bernoulli():
    spec = nb.iid_process([0, 1], [0.5, 0.5], seed=10)
    for item in nb.variance_window(spec, [0, 3, 17], samples=400):
        assert abs(item.variance - 0.25) <= 3 * item.standard_error


def test_variance_window_constant_zero():
    spec = nb.iid_process([0.7], [1.0], seed=10)
    for item in nb.variance_window(spec, [0, 5], samples=120):
        assert item.variance == 0.0
        assert item.standard_error == 0.0


def test_variance_window_pm_one():
    spec = nb.iid_process([-1, 1], seed=2)
    for item in nb.variance_window(spec, [1, 2], samples=500):
        assert abs(item.variance - 1.0) <= 3 * item.standard_error + 1e-9


def test_separated_values_bernoulli():
    sep = nb.separated_values(
        (np.array([0, 1], dtype=complex), np.array([0.5, 0.5])), 4, 0.25)
    assert sep.z == 0 and sep.w == 1
    assert sep.separation == 1.0 >= math.sqrt(0.25 / 2)
    assert sep.prob_z >= 1.0 / sep.cover_size
    assert sep.prob_w >= sep.min_prob_w


def test_separated_values_constant_none():
    assert nb.separated_values(
        (np.array([1.0 + 0j]), np.array([1.0])), 4, 0.0) is None


def test_separated_values_pm_one():
    sep = nb.separated_values(
        (np.array([-1, 1], dtype=complex), np.array([0.5, 0.5])), 4, 1.0)
    assert (sep.z, sep.w) == (-1, 1)
    assert sep.separation == 2.0 >= math.sqrt(0.5)


def test_separated_values_from_samples():
    rng = np.random.default_rng(0)
    draws = rng.choice([0.0, 1.0], size=2000)
    sigma = float(np.var(draws))
    sep = nb.separated_values(draws.astype(complex), 4, sigma)
    # z takes the heavier empirical atom; together they recover {0, 1}
    got = sorted((abs(sep.z), abs(sep.w)))
    assert got[0] < 0.05 and abs(got[1] - 1) < 0.05
    assert sep.separation > 0.9
    assert sep.prob_z >= 1.0 / sep.cover_size


def test_experiment_finds_certificates():
    spec = nb.iid_process([0, 1], [0.5, 0.5], seed=42)
    rep = nb.certificate_rate_experiment(spec, trials=5, width=3,
                                         horizon=10_000, eps=0.0, delta=1.0)
    assert rep.found_count == 5
    assert rep.separation.separation == 1.0
    for tr in rep.results:
        assert tr.found and tr.pairs
        path = nb.sample_process(spec, 10_001, trial=tr.trial)
        for n, m in tr.pairs:
            assert nb.verify_pair(path, n, m, 3, 0.0, 1.0, tr.flank_side)


def test_experiment_refuses_constant_process():
    spec = nb.iid_process([1.0], [1.0], seed=1)
    with pytest.raises(SequenceError) as exc:
        nb.certificate_rate_experiment(spec, trials=2, width=3,
                                       horizon=1000, eps=0.0, delta=0.5)
    assert "unsatisfiable" in str(exc.value)


def test_experiment_refuses_oversized_delta():
    spec = nb.iid_process([0, 1], seed=1)
    with pytest.raises(SequenceError):
        nb.certificate_rate_experiment(spec, trials=2, width=3,
                                       horizon=1000, eps=0.0, delta=1.5)


def test_rotation_driven_constant_yields_nothing():
    spec = nb.rotation_process(math.sqrt(2) - 1, 0.0,
                               boundary_fn=(lambda x: 1.0, 1.0), seed=0)
    path = nb.sample_process(spec, 2000)
    assert nb.find_pair_certificate(path, 3, 1999, eps=0.05, delta=0.5,
                                    flank_side="backward") is None
    assert nb.find_pair_certificate(path, 3, 1999, eps=0.05, delta=0.5,
                                    flank_side="forward") is None


def test_report_bit_identical_reproduction():
    spec = nb.iid_process([0, 1], [0.5, 0.5], seed=7)
    r1 = nb.certificate_rate_experiment(spec, trials=4, width=3,
                                        horizon=4000, eps=0.0, delta=1.0)
    r2 = nb.certificate_rate_experiment(spec, trials=4, width=3,
                                        horizon=4000, eps=0.0, delta=1.0)
    assert json.dumps(r1.to_json_dict()) == json.dumps(r2.to_json_dict())


def test_experiment_independent_of_worker_count(monkeypatch):
    spec = nb.iid_process([0, 1], [0.5, 0.5], seed=3)
    monkeypatch.setenv("NBSCOPE_THREADS", "1")
    one = nb.certificate_rate_experiment(spec, trials=4, width=3,
                                         horizon=3000, eps=0.0, delta=1.0)
    monkeypatch.setenv("NBSCOPE_THREADS", "8")
    eight = nb.certificate_rate_experiment(spec, trials=4, width=3,
                                           horizon=3000, eps=0.0, delta=1.0)
    assert json.dumps(one.to_json_dict()) == json.dumps(eight.to_json_dict())
