import numpy as np
import pytest

from zetalab.census import (CensusReport, Circle, Contour, Rectangle,
                            rouche_margin, strip_scan, winding_count)
from zetalab.errors import DomainError
from zetalab.primes import sieve
from zetalab.products import PhaseAssignment, product_on_grid
from zetalab.zeta import zeta_many


def shifted(fn, center):
    """Evaluator of fn(s - center) so test zeros can sit in sigma > 0."""
    def wrapped(z):
        return fn(np.asarray(z, dtype=complex) - center)
    return wrapped


CENTER = 3.0 + 0.0j  # park test contours far from the pole and sigma <= 0


def unit_contour(samples=256):
    return Contour(Circle(CENTER, 1.0), samples)


def test_winding_identity():
    rep = winding_count(shifted(lambda z: z, CENTER), unit_contour())
    assert isinstance(rep, CensusReport)
    assert rep.winding == 1
    assert rep.min_modulus == pytest.approx(1.0, rel=1e-6)


def test_winding_two_zeros():
    f = shifted(lambda z: (z - 0.1) * (z + 0.2j), CENTER)
    assert winding_count(f, unit_contour()).winding == 2


def test_winding_no_zeros():
    f = shifted(lambda z: np.exp(z) + 3.0, CENTER)
    assert winding_count(f, unit_contour()).winding == 0


def test_winding_zeta_first_zero_rectangle():
    contour = Contour(Rectangle(complex(0.3, 14.0), complex(0.7, 14.3)), 256)
    f = lambda z: zeta_many(z)[0]
    coarse = winding_count(f, contour)
    fine = winding_count(f, Contour(contour.shape, 512))
    assert coarse.winding == fine.winding == 1


def test_winding_through_zero_raises():
    f = shifted(lambda z: z - 1.0, CENTER)  # zero exactly on the contour grid
    with pytest.raises(DomainError):
        winding_count(f, unit_contour(64))


def test_winding_adaptive_refinement():
    # zero just inside the contour between two coarse samples forces refinement
    w = 0.97 * np.exp(1j * np.pi / 64)
    f = shifted(lambda z: z - w, CENTER)
    rep = winding_count(f, unit_contour(64))
    assert rep.winding == 1
    assert rep.refined
    assert rep.samples_used > 64
    assert rep.arg_residual < 0.01


def test_contour_validation():
    with pytest.raises(DomainError):
        Contour(Circle(CENTER, 1.0), 32)  # too few samples
    with pytest.raises(DomainError):
        Contour(Circle(0.5 + 0j, 1.0), 64)  # leaves sigma > 0
    with pytest.raises(DomainError):
        Contour(Circle(1.2 + 0j, 0.5), 64)  # contains the pole
    with pytest.raises(DomainError):
        Contour(Rectangle(complex(0.5, -1), complex(2, 1)), 64)  # pole inside


def test_rouche_margin_self():
    g = shifted(lambda z: z, CENTER)
    m = rouche_margin(g, g, unit_contour())
    assert m == pytest.approx(1.0, rel=1e-6)


def test_rouche_margin_shift():
    g = shifted(lambda z: z, CENTER)
    f = shifted(lambda z: z + 0.1, CENTER)
    assert rouche_margin(f, g, unit_contour(1024)) == pytest.approx(0.9, rel=1e-4)


def test_rouche_zeta_vs_product():
    table = sieve(10_000)
    contour = Contour(Circle(2.0 + 0j, 0.5), 256)
    zeta_fn = lambda z: zeta_many(z)[0]
    prod_fn = lambda z: product_on_grid(PhaseAssignment.zeros(), 10_000, z, table)
    margin = rouche_margin(prod_fn, zeta_fn, contour)
    assert margin > 0
    assert winding_count(zeta_fn, contour).winding == 0
    assert winding_count(prod_fn, contour).winding == 0


def test_winding_sample_doubling_stable():
    f = lambda z: zeta_many(z)[0]
    for samples in (64, 128, 256):
        c = Contour(Circle(0.75 + 10j, 0.2), samples)
        assert winding_count(f, c).winding == 0


def test_census_conjugate_symmetry():
    f = lambda z: zeta_many(z)[0]
    up = winding_count(f, Contour(Circle(0.75 + 5j, 0.2), 128))
    dn = winding_count(f, Contour(Circle(0.75 - 5j, 0.2), 128))
    assert up.winding == dn.winding
    assert up.min_modulus == pytest.approx(dn.min_modulus, rel=1e-9)


def test_strip_scan_rows():
    rows = strip_scan([0.0, 5.0], 0.2, y=20.0, pool_limit=2000, samples=128,
                      approx_kwargs={"max_terms": 600, "outer_iters": 2,
                                     "circle_samples": 512, "sup_samples": 128})
    assert len(rows) == 2
    for row in rows:
        assert row.error == ""
        assert row.count_zeta == 0  # no zeros near the real axis in these discs
        assert row.count_product == 0
        assert row.m > 0
        assert row.transfer_ok
