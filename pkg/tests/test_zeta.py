import math

import numpy as np
import pytest

from zetalab.errors import DomainError, PoleError
from zetalab.zeta import sup_on_disc, zeta_em, zeta_many

# Stieltjes constants gamma_0..gamma_10 (published values) for the Laurent
# expansion zeta(s) = 1/(s-1) + sum (-1)^n gamma_n (s-1)^n / n!
STIELTJES = [
    0.5772156649015329,
    -0.07281584548367673,
    -0.009690363192872318,
    0.002053834420303346,
    0.002325370065467300,
    0.0007933238173010627,
    -0.0002387693454301996,
    -0.0005272895670577510,
    -0.0003521233538030395,
    -3.4394774418088048e-05,
    0.0002053328149090648,
]


def zeta_series_oracle(sigma, n_terms=2_000_000):
    """Partial sums of sum n^-sigma with integral tail bracket (sigma > 1)."""
    n = np.arange(1, n_terms + 1, dtype=float)
    partial = float(np.sum(n ** -sigma))
    tail_lo = (n_terms + 1) ** (1 - sigma) / (sigma - 1)
    tail_hi = n_terms ** (1 - sigma) / (sigma - 1)
    return partial + tail_lo, partial + tail_hi


def zeta_stieltjes_oracle(s):
    """Laurent expansion about s = 1; accurate for |s-1| < 1."""
    out = 1.0 / (s - 1.0)
    for n, g in enumerate(STIELTJES):
        out += (-1) ** n * g * (s - 1.0) ** n / math.factorial(n)
    return out


def test_zeta_2():
    lo, hi = zeta_series_oracle(2.0)
    zv = zeta_em(2.0 + 0j, 1e-8)
    assert lo - 1e-9 <= zv.value.real <= hi + 1e-9
    assert abs(zv.value.imag) < 1e-12
    assert zv.error_estimate <= 1e-8
    assert zv.value.real == pytest.approx(1.644934067, abs=2e-9)


def test_zeta_4():
    zv = zeta_em(4.0 + 0j, 1e-8)
    lo, hi = zeta_series_oracle(4.0, 200_000)
    assert lo - 1e-10 <= zv.value.real <= hi + 1e-10
    assert zv.value.real == pytest.approx(1.0823232, abs=1e-6)


def test_zeta_three_quarters_vs_stieltjes():
    zv = zeta_em(0.75 + 0j, 1e-6)
    assert zv.value.real == pytest.approx(zeta_stieltjes_oracle(0.75), abs=1e-4)
    assert zv.value.real == pytest.approx(-3.44129, abs=1e-4)


def test_pole_and_domain_errors():
    with pytest.raises(PoleError):
        zeta_em(1.0 + 0j)
    with pytest.raises(DomainError):
        zeta_em(-0.5 + 3j)
    with pytest.raises(DomainError):
        zeta_em(2.0 + 2000j)


def test_conjugate_symmetry():
    rng = np.random.default_rng(3)
    for _ in range(10):
        s = complex(rng.uniform(0.3, 3.0), rng.uniform(-40.0, 40.0))
        if abs(s - 1.0) < 0.1:
            continue
        a = zeta_em(s).value
        b = zeta_em(s.conjugate()).value
        assert abs(b - a.conjugate()) < 1e-10


def test_partial_sum_tail_bound():
    # for sigma > 1: |zeta(s) - sum_{n<=N} n^-s| <= N^{1-sigma}/(sigma-1)
    for sigma in (1.5, 2.0, 3.0):
        for t in (0.0, 7.3):
            s = complex(sigma, t)
            zv = zeta_em(s, 1e-10).value
            n = np.arange(1, 5001, dtype=float)
            partial = np.sum(np.exp(-s * np.log(n)))
            bound = 5000.0 ** (1 - sigma) / (sigma - 1)
            assert abs(zv - partial) <= bound * (1 + 1e-9)


def test_zeta_many_matches_scalar():
    pts = np.array([2.0 + 0j, 0.75 + 14j, 1.5 - 3j])
    vals, errs = zeta_many(pts, 1e-10)
    for p, v in zip(pts, vals):
        assert abs(v - zeta_em(complex(p)).value) < 1e-10
    assert np.all(errs <= 1e-10)


def test_sup_on_disc_degenerate():
    assert sup_on_disc(2.0 + 0j, 0.0) == pytest.approx(abs(zeta_em(2.0 + 0j).value))


def test_sup_on_disc_boundary_dominates_interior():
    # maximum-modulus: boundary max must exceed |zeta| at interior samples
    sup = sup_on_disc(0.75 + 0j, 0.2, 256)
    rng = np.random.default_rng(5)
    for _ in range(20):
        rad = 0.19 * math.sqrt(rng.uniform())
        ang = rng.uniform(0, 2 * math.pi)
        s = 0.75 + rad * complex(math.cos(ang), math.sin(ang))
        assert abs(zeta_em(s).value) <= sup + 1e-9


def test_sup_on_disc_grid_stability():
    a = sup_on_disc(0.75 + 0j, 0.2, 512)
    b = sup_on_disc(0.75 + 0j, 0.2, 1024)
    assert abs(a - b) < 1e-6


def test_sup_on_disc_domain_errors():
    with pytest.raises(DomainError):
        sup_on_disc(0.1 + 0j, 0.2)
    with pytest.raises(DomainError):
        sup_on_disc(1.1 + 0j, 0.2)
