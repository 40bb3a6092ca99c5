"""Complex-plane sampling and quadrature helpers.

Circles are sampled at equispaced angles (spectral accuracy for analytic
integrands); disc integrals use a polar tensor rule, Gauss-Legendre in the
radius and trapezoid in the angle.  The disc rule is exact for polynomial
integrands of radial degree < 2*n_rad and angular harmonics < n_ang, which
is what makes it usable as an independent oracle for closed-form formulas.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

Evaluator = Callable[[np.ndarray], np.ndarray]


def circle_points(center: complex, radius: float, n: int) -> np.ndarray:
    ang = 2.0 * np.pi * np.arange(n) / n
    return center + radius * np.exp(1j * ang)


def power_series_coeffs(fn: Evaluator, radius: float, degree: int,
                        samples: int = 1024) -> np.ndarray:
    """Taylor coefficients a_0..a_degree of fn about 0 from FFT on |s|=radius.

    fn must be analytic on the closed disc of the given radius.
    """
    if samples <= 2 * degree:
        raise ValueError("need more circle samples than twice the degree")
    z = circle_points(0.0 + 0.0j, radius, samples)
    vals = np.asarray(fn(z), dtype=complex)
    c = np.fft.fft(vals) / samples
    n = np.arange(degree + 1)
    return c[: degree + 1] / radius ** n


def disc_nodes(radius: float, n_rad: int, n_ang: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights integrating f over the disc |s| <= radius (dsigma dt)."""
    x, w = np.polynomial.legendre.leggauss(n_rad)
    r = 0.5 * radius * (x + 1.0)
    wr = 0.5 * radius * w * r  # polar Jacobian folded into the weight
    ang = 2.0 * np.pi * np.arange(n_ang) / n_ang
    pts = (r[:, None] * np.exp(1j * ang)[None, :]).ravel()
    wts = np.repeat(wr, n_ang) * (2.0 * np.pi / n_ang)
    return pts, wts


def disc_integral(fn: Evaluator, radius: float, n_rad: int = 32,
                  n_ang: int = 64) -> complex:
    pts, wts = disc_nodes(radius, n_rad, n_ang)
    return complex(np.sum(np.asarray(fn(pts), dtype=complex) * wts))


def sup_on_circle(fn: Evaluator, center: complex, radius: float, n: int,
                  refine: bool = True) -> float:
    """max |fn| over the circle, with parabolic refinement of the grid peak."""
    ang = 2.0 * np.pi * np.arange(n) / n
    vals = np.abs(np.asarray(fn(center + radius * np.exp(1j * ang))))
    k = int(np.argmax(vals))
    best = float(vals[k])
    if not refine or n < 3:
        return best
    ym, y0, yp = vals[(k - 1) % n], vals[k], vals[(k + 1) % n]
    den = ym - 2.0 * y0 + yp
    if den < 0.0:  # genuine local max of the sampled parabola
        delta = 0.5 * (ym - yp) / den
        if abs(delta) <= 1.0:
            a = ang[k] + delta * (2.0 * np.pi / n)
            v = float(np.abs(np.asarray(fn(np.array([center + radius * np.exp(1j * a)])))[0]))
            best = max(best, v)
    return best
