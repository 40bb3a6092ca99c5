"""Hilbert-space machinery on the disc: closed-form norms and pairings.

Elements are truncated power series on |s| < R treated as a REAL Hilbert
space under Re of the area inner product.  The pairing kernel

    Delta(x) = integral of e^{-x(s+3/4)} * conj(phi(s)) over the disc
             = pi R^2 e^{-3x/4} F(xR),   F(u) = sum beta_n u^n / n!,

with beta_n = (-1)^n R^n conj(alpha_n) / (n+1), turns inner products against
phase-twisted prime waves e^{2*pi*i*theta} p^{-s-3/4} into closed forms; all
closed forms here are backed by an independent polar quadrature oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .grids import disc_nodes
from .primes import PrimeTable, nth_prime
from .randgen import make_rng

DEFAULT_DEGREE = 64


@dataclass(frozen=True)
class HardyElement:
    radius: float
    coeffs: np.ndarray  # complex, alpha_0..alpha_N

    def __post_init__(self):
        if self.radius <= 0.0:
            raise DomainError("radius must be positive")
        object.__setattr__(self, "coeffs",
                           np.atleast_1d(np.asarray(self.coeffs, dtype=complex)))

    @property
    def degree(self) -> int:
        return int(self.coeffs.size - 1)

    def __call__(self, s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=complex)
        out = np.zeros(s.shape, dtype=complex)
        for a in self.coeffs[::-1]:
            out = out * s + a
        return out

    def to_json(self) -> dict:
        return {"radius": self.radius,
                "coeffs": [[float(a.real), float(a.imag)] for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "HardyElement":
        return cls(float(obj["radius"]),
                   np.array([complex(re, im) for re, im in obj["coeffs"]]))


@dataclass(frozen=True)
class BetaVector:
    entries: np.ndarray


def zero_element(radius: float, degree: int = 0) -> HardyElement:
    return HardyElement(radius, np.zeros(degree + 1, dtype=complex))


def monomial(n: int, radius: float) -> HardyElement:
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    return HardyElement(radius, c)


def norm_sq(f: HardyElement) -> float:
    """pi * sum |alpha_n|^2 R^{2n+2} / (n+1)."""
    n = np.arange(f.coeffs.size)
    return float(math.pi * np.sum(np.abs(f.coeffs) ** 2
                                  * f.radius ** (2 * n + 2) / (n + 1)))


def inner(f: HardyElement, g: HardyElement) -> float:
    """Real inner product Re of the area integral of f * conj(g)."""
    if abs(f.radius - g.radius) > 1e-15:
        raise DomainError("inner product requires equal radii")
    m = min(f.coeffs.size, g.coeffs.size)
    n = np.arange(m)
    prods = f.coeffs[:m] * np.conj(g.coeffs[:m])
    return float(math.pi * np.sum(prods.real * f.radius ** (2 * n + 2) / (n + 1)))


def add(f: HardyElement, g: HardyElement, scale: complex = 1.0) -> HardyElement:
    if abs(f.radius - g.radius) > 1e-15:
        raise DomainError("radius mismatch")
    m = max(f.coeffs.size, g.coeffs.size)
    c = np.zeros(m, dtype=complex)
    c[: f.coeffs.size] += f.coeffs
    c[: g.coeffs.size] += scale * np.asarray(g.coeffs)
    return HardyElement(f.radius, c)


def normalized(f: HardyElement) -> HardyElement:
    nrm = math.sqrt(norm_sq(f))
    if nrm == 0.0:
        raise DomainError("cannot normalize the zero element")
    return HardyElement(f.radius, f.coeffs / nrm)


def random_element(seed: int, degree: int, radius: float,
                   unit: bool = True, stream: int = 0) -> HardyElement:
    """Random element with N(0,1) real/imag coefficients, optionally unit norm."""
    rng = make_rng(seed, stream)
    c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
    f = HardyElement(radius, c)
    return normalized(f) if unit else f


def beta_coeffs(f: HardyElement) -> BetaVector:
    """beta_n = (-1)^n R^n conj(alpha_n) / (n+1); |beta_n| <= 1 at unit norm."""
    n = np.arange(f.coeffs.size)
    return BetaVector((-1.0) ** n * f.radius ** n * np.conj(f.coeffs) / (n + 1))


def entire_F(beta: BetaVector, u: float) -> complex:
    """F(u) = sum beta_m u^m / m! (finite vector, exact evaluation)."""
    m = np.arange(beta.entries.size)
    fact = np.array([math.factorial(int(k)) for k in m], dtype=float)
    return complex(np.sum(beta.entries * np.power(float(u), m) / fact))


def exp_series_tail(u: float, cut: int) -> float:
    """Bound on sum_{m > cut} |u|^m / m!, certified for |u| < cut + 2."""
    a = abs(u)
    if a >= cut + 2:
        return float(math.exp(a))
    lead = a ** (cut + 1) / math.factorial(cut + 1)
    return float(lead / (1.0 - a / (cut + 2)))


def delta_x(f: HardyElement, x: float) -> complex:
    """Closed form pi R^2 e^{-3x/4} F(xR) of the pairing kernel."""
    if x < 0.0:
        raise DomainError("x must be nonnegative")
    beta = beta_coeffs(f)
    return complex(math.pi * f.radius ** 2 * math.exp(-0.75 * x)
                   * entire_F(beta, x * f.radius))


def delta_many(f: HardyElement, x: np.ndarray) -> np.ndarray:
    """Vectorized closed-form Delta over an array of x >= 0."""
    x = np.asarray(x, dtype=float)
    beta = beta_coeffs(f).entries
    m = np.arange(beta.size)
    fact = np.array([math.factorial(int(k)) for k in m], dtype=float)
    fu = np.power.outer(x * f.radius, m) @ (beta / fact)
    return math.pi * f.radius ** 2 * np.exp(-0.75 * x) * fu


def delta_x_integral(f: HardyElement, x: float, n_rad: int = 48,
                     n_ang: int = 96) -> complex:
    """Quadrature oracle for the defining integral of Delta(x)."""
    pts, wts = disc_nodes(f.radius, n_rad, n_ang)
    vals = np.exp(-x * (pts + 0.75)) * np.conj(f(pts))
    return complex(np.sum(vals * wts))


def inner_integral(f: HardyElement, g: HardyElement, n_rad: int = 48,
                   n_ang: int = 96) -> float:
    """Quadrature oracle for the inner product."""
    pts, wts = disc_nodes(f.radius, n_rad, n_ang)
    return float(np.sum((f(pts) * np.conj(g(pts))).real * wts))


def wave_element(p: int, theta: float, radius: float,
                 degree: int = DEFAULT_DEGREE) -> HardyElement:
    """The prime wave e^{2*pi*i*theta} p^{-s-3/4} as a truncated power series."""
    n = np.arange(degree + 1)
    fact = np.array([math.factorial(int(k)) for k in n], dtype=float)
    c = np.exp(2j * np.pi * theta) * p ** (-0.75) * (-math.log(p)) ** n / fact
    return HardyElement(radius, c)


def wave_norm_sq(p: int, radius: float, degree: int = DEFAULT_DEGREE) -> float:
    """Closed-form squared norm of the prime wave (truncated series)."""
    n = np.arange(degree + 1)
    fact = np.array([math.factorial(int(k)) for k in n], dtype=float)
    return float(math.pi * p ** (-1.5)
                 * np.sum((math.log(p) ** n / fact) ** 2
                          * radius ** (2 * n + 2) / (n + 1)))


def eta_inner(k: int, theta: float, f: HardyElement,
              table: PrimeTable | None = None) -> float:
    """Pairing of the k-th prime wave with f via the Delta closed form:
    Re[e^{2*pi*i*theta} Delta(log p_k)].  Maximized over theta at
    theta = frac(-arg Delta(log p_k) / 2*pi), where it equals |Delta|."""
    p = nth_prime(k, table)
    return float((np.exp(2j * np.pi * theta) * delta_x(f, math.log(p))).real)


@dataclass(frozen=True)
class PeakScan:
    u: np.ndarray        # qualifying grid points
    margin: np.ndarray   # |F(u)| - e^{-(1+2 delta) u} at those points
    grid_size: int


def peak_scan(f: HardyElement, delta: float, u_max: float,
              step: float) -> PeakScan:
    """Grid points u in (0, u_max] with |F(u)| > e^{-(1+2*delta)u}."""
    if not (0.0 < delta < 1.0):
        raise DomainError("need 0 < delta < 1")
    if step <= 0.0 or u_max <= 0.0:
        raise DomainError("need positive step and u_max")
    u = np.arange(step, u_max + 0.5 * step, step)
    beta = beta_coeffs(f).entries
    m = np.arange(beta.size)
    fact = np.array([math.factorial(int(k)) for k in m], dtype=float)
    fu = np.abs(np.power.outer(u, m) @ (beta / fact))
    thresh = np.exp(-(1.0 + 2.0 * delta) * u)
    mask = fu > thresh
    return PeakScan(u[mask], (fu - thresh)[mask], u.size)
