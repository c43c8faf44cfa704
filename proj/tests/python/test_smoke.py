import math

import pytest

import relayarq as ra


def test_bessel_k1():
    assert ra.bessel_k1(1.0) == pytest.approx(0.6019072301972346, rel=1e-12)
    assert ra.xi_k1_factor(0.0) == 1.0
    assert ra.xi_k1_factor(4.0) == pytest.approx(0.27973176363304486, rel=1e-12)
    with pytest.raises(ValueError):
        ra.bessel_k1(-1.0)


def test_outage_and_states():
    eps = ra.outage_single(10.0, 1.0)
    assert eps == pytest.approx(1.0 - math.exp(-0.1), rel=1e-12)
    dist = ra.state_probs_df(0.5, 0.5, 0.5)
    assert sum(dist.probs) == pytest.approx(1.0, abs=1e-12)
    assert dist.probs == pytest.approx([0.5, 0.25, 0.125, 0.125])


def test_goodput_and_expected_time():
    assert ra.expected_time_af(0.5, 0.5) == 2.0
    assert ra.expected_time_df(0.5, 0.5, 0.5) == 2.0
    p = ra.ChannelParams(gamma=10.0, alpha=3.12, k=0.5)
    g = ra.goodput_df(p, 4.0)
    assert g.goodput == pytest.approx(4.0 / g.expected_time, rel=1e-15)
    assert 0.0 < g.goodput <= 4.0
    with pytest.raises(ValueError):
        ra.ChannelParams(gamma=10.0, alpha=3.12, k=1.5)


def test_simulation_determinism():
    cfg = ra.SimConfig()
    cfg.mode = ra.Mode.AF
    cfg.source = ra.OutageSource.FIXED_EPS
    eps = ra.OutageSet()
    eps.eps_sd = 0.5
    eps.eps_path2 = 0.5
    cfg.eps = eps
    cfg.rate = 2.0
    cfg.trials = 50000
    cfg.seed = 11
    first = ra.run_batch(cfg)
    cfg.threads = 2
    second = ra.run_batch(cfg)
    assert first.mean_slots == second.mean_slots
    assert first.std_error == second.std_error
    assert abs(first.mean_slots - 2.0) <= 3.0 * first.std_error


def test_optimizer():
    opt = ra.optimize_k(ra.Mode.AF, 10.0, 3.12, 4.0)
    assert opt.k_star == pytest.approx(0.5, abs=1e-4)
    joint = ra.optimize_joint(ra.Mode.DF, 10.0, 3.12)
    assert joint.best_goodput > 0.0
    assert 0.0 < joint.best_k < 1.0
