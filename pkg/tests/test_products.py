import math

import numpy as np
import pytest

from zetalab.errors import DomainError
from zetalab.primes import sieve
from zetalab.products import (MeanSquareReport, PhaseAssignment, factor_eval,
                              log_factor, log_factor_grid, mean_square_bound,
                              mean_square_tail_experiment, product_eval,
                              product_on_grid, residual_h, set_product_disc)

TABLE = sieve(100_000)


def zeta_series(sigma, n_terms=2_000_000):
    n = np.arange(1, n_terms + 1, dtype=float)
    return float(np.sum(n ** -sigma))


def test_factor_examples():
    assert factor_eval(2, 0.0, 2.0 + 0j) == pytest.approx(4.0 / 3.0)
    assert factor_eval(2, 0.5, 2.0 + 0j) == pytest.approx(0.8)
    assert factor_eval(2, 0.25, 1.0 + 0j) == pytest.approx(0.8 + 0.4j)


def test_factor_domain():
    with pytest.raises(DomainError):
        factor_eval(2, 0.0, -0.1 + 1j)


def test_product_zero_phases_matches_zeta2():
    pv = product_eval(PhaseAssignment.zeros(), 100_000, 2.0 + 0j, TABLE)
    oracle = zeta_series(2.0) + 1.0 / 2_000_000  # series + integral tail estimate
    assert abs(pv.value - oracle) <= 1.1e-5
    assert pv.tail_bound == pytest.approx(1e-5)
    assert abs(pv.value - oracle) <= pv.tail_bound + 5e-7


def test_product_half_phases_identity():
    # prod (1 + p^-2)^{-1} = zeta(4)/zeta(2), both sides by series oracle
    phases = PhaseAssignment.constant(TABLE.primes, 0.5)
    pv = product_eval(phases, 100_000, 2.0 + 0j, TABLE)
    rhs = zeta_series(4.0, 100_000) / zeta_series(2.0)
    assert abs(pv.value - rhs) <= 1e-5
    assert pv.value.real == pytest.approx(math.pi ** 2 / 15.0, abs=1e-5)


def test_product_empty():
    pv = product_eval(PhaseAssignment.zeros(), 1, 3.0 + 0j)
    assert pv.value == 1.0 + 0j


def test_product_nonvanishing_random_phases():
    rng = np.random.default_rng(2)
    for seed in range(5):
        phases = PhaseAssignment.random(TABLE.primes[:500], seed)
        s = complex(rng.uniform(0.05, 2.5), rng.uniform(-20, 20))
        v = product_on_grid(phases, int(TABLE.primes[499]), np.array([s]), TABLE)[0]
        assert np.isfinite(v) and v != 0


def test_phase_assignment_validation():
    with pytest.raises(DomainError):
        PhaseAssignment({4: 0.1})
    pa = PhaseAssignment({5: 1.25})
    assert pa.phase(5) == pytest.approx(0.25)
    assert pa.phase(7) == 0.0


def test_log_factor_examples():
    assert log_factor(2, 0.0, 0.25 + 0j).real == pytest.approx(math.log(0.5))
    assert log_factor(2, 0.5, 0.25 + 0j).real == pytest.approx(math.log(1.5))


def test_log_factor_branch_bounded():
    rng = np.random.default_rng(7)
    for _ in range(200):
        p = int(TABLE.primes[rng.integers(0, 1000)])
        th = float(rng.uniform())
        s = complex(rng.uniform(-0.7, 2.0), rng.uniform(-30, 30))
        u = log_factor(p, th, s)
        assert abs(u.imag) < math.pi / 2


def test_exp_log_branch_coherence():
    # exp(sum log factors) equals 1/product of the same factors
    primes = TABLE.primes[:50]
    rng = np.random.default_rng(9)
    theta = rng.uniform(size=primes.size)
    s_disc = complex(0.1, 0.4)
    u_sum = log_factor_grid(primes, theta, np.array([s_disc])).sum()
    prod = np.prod([factor_eval(int(p), float(t), s_disc + 0.75)
                    for p, t in zip(primes, theta)])
    assert abs(np.exp(u_sum) - 1.0 / prod) < 1e-12


def test_second_order_remainder_bound():
    # |u_p - eta_p| = O(p^{2r - 3/2}) on the disc |s| <= r
    r = 0.2
    rng = np.random.default_rng(13)
    primes = TABLE.primes[TABLE.primes <= 10_000]
    for p in primes[:: max(1, primes.size // 150)]:
        th = float(rng.uniform())
        ang = rng.uniform(0, 2 * math.pi)
        s = r * complex(math.cos(ang), math.sin(ang))
        u = log_factor(int(p), th, s)
        eta = -np.exp(2j * np.pi * th) * float(p) ** (-s - 0.75)
        assert abs(u - eta) <= 2.0 * float(p) ** (2 * r - 1.5)


def test_residual_h_full_anchor_is_zero():
    phases = PhaseAssignment.zeros()
    anchor = TABLE.primes[TABLE.primes <= 100]
    assert residual_h(phases, anchor, 100, 0.5 + 0j, TABLE) == 0.0


def test_residual_h_single_prime_geometric():
    theta2 = 0.3
    phases = PhaseAssignment({2: theta2})
    h = residual_h(phases, [], 2, 0.25 + 0j, TABLE)
    z = np.exp(2j * np.pi * theta2) * 2.0 ** (-1.0)  # exponent s + 3/4 = 1
    geo = z / (1 - z)
    assert abs(h - geo) < 1e-14


def test_residual_h_dirichlet_series_oracle():
    # anchor everything except {7, 11}; h is a Dirichlet series over 7-11-smooth n
    prime_limit = 100
    primes = TABLE.primes[TABLE.primes <= prime_limit]
    free = [7, 11]
    anchor = [int(p) for p in primes if int(p) not in free]
    rng = np.random.default_rng(21)
    phases = PhaseAssignment({p: float(rng.uniform()) for p in free})
    s_disc = complex(0.3, 0.7)
    h = residual_h(phases, anchor, prime_limit, s_disc, TABLE)
    # brute-force coefficient sum over smooth numbers 7^a 11^b <= 1e15
    total = 0.0 + 0.0j
    a = 0
    while 7 ** a <= 10 ** 15:
        b = 0
        while 7 ** a * 11 ** b <= 10 ** 15:
            if a or b:
                n = 7 ** a * 11 ** b
                coef = np.exp(2j * np.pi * (a * phases.phase(7) + b * phases.phase(11)))
                total += coef * n ** complex(-s_disc.real - 0.75, -s_disc.imag)
            b += 1
        a += 1
    assert abs(h - total) < 1e-10


def test_residual_h_anchor_validation():
    with pytest.raises(DomainError):
        residual_h(PhaseAssignment.zeros(), [101], 100, 0.5 + 0j, TABLE)


def test_set_product_matches_product_on_grid():
    primes = TABLE.primes[:30]
    theta = np.linspace(0, 0.9, 30)
    s = np.array([0.1 + 0.2j, -0.05 - 0.3j])
    a = set_product_disc(primes, theta, s)
    pa = PhaseAssignment({int(p): float(t) for p, t in zip(primes, theta)})
    b = product_on_grid(pa, int(primes[-1]), s + 0.75, TABLE)
    assert np.max(np.abs(a - b)) < 1e-12


def test_mean_square_bound_value():
    # frozen from the closed formula at (r, delta, y) = (0.1, 0.05, 100)
    assert mean_square_bound(0.1, 0.05, 100.0) == pytest.approx(0.2814053765, abs=1e-9)


def test_mean_square_bound_monotone_in_y():
    b1 = mean_square_bound(0.1, 0.05, 100.0)
    b4 = mean_square_bound(0.1, 0.05, 400.0)
    assert b4 == pytest.approx(b1 * 4.0 ** (-0.5 + 2 * 0.1 + 2 * 0.05))
    assert b4 < b1


def test_mean_square_bound_domain():
    with pytest.raises(DomainError):
        mean_square_bound(0.2, 0.06, 100.0)
    with pytest.raises(DomainError):
        mean_square_bound(0.1, 0.05, 1.0)


def test_mean_square_experiment_small():
    rep = mean_square_tail_experiment(0.1, 0.05, 100.0, samples=200, seed=4)
    assert isinstance(rep, MeanSquareReport)
    assert rep.estimate >= 0
    assert rep.ok  # estimate <= bound + 3 stderr
    assert rep.bound == pytest.approx(0.2814053765, abs=1e-9)


def test_mean_square_experiment_reproducible():
    a = mean_square_tail_experiment(0.1, 0.05, 100.0, samples=50, seed=9)
    b = mean_square_tail_experiment(0.1, 0.05, 100.0, samples=50, seed=9)
    assert a.estimate == b.estimate and a.stderr == b.stderr
