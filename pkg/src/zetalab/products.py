"""Phase-twisted finite Euler products and their residuals.

A phase assignment maps primes to phases theta_p in [0,1); the associated
product is prod_p (1 - e^{2*pi*i*theta_p} p^{-s})^{-1}.  Products over large
prime sets are evaluated in log-space and exponentiated once, which keeps
them exactly nonvanishing and free of under/overflow drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .grids import disc_nodes
from .primes import PrimeTable, is_prime, sieve
from .randgen import make_rng

_LOGSPACE_THRESHOLD = 10_000


def _as_phase(x: float) -> float:
    return float(x) % 1.0


@dataclass(frozen=True)
class PhaseAssignment:
    """Finite map prime -> phase in [0,1); primes not present default to 0."""

    entries: dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for p, th in self.entries.items():
            if not is_prime(int(p)):
                raise DomainError(f"phase key {p} is not prime")
            clean[int(p)] = _as_phase(th)
        object.__setattr__(self, "entries", clean)

    def phase(self, p: int) -> float:
        return self.entries.get(int(p), 0.0)

    def phases_for(self, primes: np.ndarray) -> np.ndarray:
        return np.array([self.entries.get(int(p), 0.0) for p in primes])

    @classmethod
    def zeros(cls) -> "PhaseAssignment":
        return cls({})

    @classmethod
    def constant(cls, primes, theta: float) -> "PhaseAssignment":
        return cls({int(p): theta for p in primes})

    @classmethod
    def random(cls, primes, seed: int, stream: int = 0) -> "PhaseAssignment":
        rng = make_rng(seed, stream)
        return cls({int(p): float(t) for p, t in zip(primes, rng.random(len(primes)))})

    def merged(self, other: "PhaseAssignment") -> "PhaseAssignment":
        d = dict(self.entries)
        d.update(other.entries)
        return PhaseAssignment(d)


@dataclass(frozen=True)
class ProductValue:
    s: complex
    value: complex
    prime_limit: int
    tail_bound: float | None  # certified only when Re(s) > 1


def factor_eval(p: int, theta: float, s: complex) -> complex:
    """(1 - e^{2*pi*i*theta} p^{-s})^{-1}; finite and nonzero for Re(s) > 0."""
    if s.real <= 0.0:
        raise DomainError("factor evaluation requires Re(s) > 0")
    z = np.exp(2j * np.pi * _as_phase(theta)) * p ** (-s)
    return 1.0 / (1.0 - z)


def product_on_grid(phases: PhaseAssignment, prime_limit: int, s: np.ndarray,
                    table: PrimeTable | None = None) -> np.ndarray:
    """Product over primes <= prime_limit at each point of s (vectorized)."""
    s = np.asarray(s, dtype=complex)
    if np.any(s.real <= 0.0):
        raise DomainError("product evaluation requires Re(s) > 0")
    if prime_limit < 2:
        return np.ones(s.shape, dtype=complex)
    if table is None or table.limit < prime_limit:
        table = sieve(prime_limit)
    primes = table.primes[table.primes <= prime_limit]
    if primes.size == 0:
        return np.ones(s.shape, dtype=complex)
    theta = phases.phases_for(primes)
    tw = np.exp(2j * np.pi * theta)
    log_p = np.log(primes.astype(float))
    if primes.size <= _LOGSPACE_THRESHOLD:
        out = np.ones(s.shape, dtype=complex)
        for k in range(primes.size):
            out /= 1.0 - tw[k] * np.exp(-s * log_p[k])
        return out
    # log-space: fixed ascending order, one exponentiation at the end
    acc = np.zeros(s.shape, dtype=complex)
    step = max(1, int(2_000_000 / max(1, s.size)))
    for lo in range(0, primes.size, step):
        z = tw[lo : lo + step] * np.exp(-np.multiply.outer(s, log_p[lo : lo + step]))
        acc -= np.log1p(-z).sum(axis=-1)
    return np.exp(acc)


def product_eval(phases: PhaseAssignment, prime_limit: int, s: complex,
                 table: PrimeTable | None = None) -> ProductValue:
    """Finite Euler product over primes <= prime_limit.

    For Re(s) > 1 the attached tail bound prime_limit^{1-sigma}/(sigma-1)
    dominates |product - zeta(s)| when all phases vanish (the omitted
    integers all exceed prime_limit).
    """
    val = complex(product_on_grid(phases, prime_limit, np.array([s]), table)[0])
    tail = None
    if s.real > 1.0 and prime_limit >= 2:
        tail = prime_limit ** (1.0 - s.real) / (s.real - 1.0)
    return ProductValue(complex(s), val, int(prime_limit), tail)


def log_factor(p: int, theta: float, s_disc: complex) -> complex:
    """Principal-branch log(1 - e^{2*pi*i*theta} p^{-s_disc-3/4}).

    Since |p^{-s-3/4}| < 1 on Re(s_disc) > -3/4 the argument stays in the
    right half plane and the imaginary part lands in (-pi/2, pi/2).
    """
    if s_disc.real <= -0.75:
        raise DomainError("log factor requires Re(s) > -3/4")
    z = np.exp(2j * np.pi * _as_phase(theta)) * p ** (-s_disc - 0.75)
    return complex(np.log1p(-z))


def log_factor_grid(primes: np.ndarray, theta: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Matrix u_p(s) = log(1 - e^{2 pi i theta_p} p^{-s-3/4}), shape (s, primes)."""
    s = np.asarray(s, dtype=complex)
    tw = np.exp(2j * np.pi * np.asarray(theta, dtype=float))
    z = tw[None, :] * np.exp(-np.multiply.outer(s + 0.75, np.log(np.asarray(primes, dtype=float))))
    return np.log1p(-z)


def set_product_disc(primes: np.ndarray, thetas: np.ndarray,
                     s_disc: np.ndarray) -> np.ndarray:
    """Product over an explicit prime set at exponent s + 3/4 (the zeta_M form),
    evaluated in log-space."""
    s = np.atleast_1d(np.asarray(s_disc, dtype=complex))
    primes = np.asarray(primes, dtype=np.int64)
    if primes.size == 0:
        return np.ones(s.shape, dtype=complex)
    out = np.zeros(s.shape, dtype=complex)
    step = max(1, int(2_000_000 / max(1, s.size)))
    for lo in range(0, primes.size, step):
        out -= log_factor_grid(primes[lo : lo + step],
                               np.asarray(thetas)[lo : lo + step], s).sum(axis=1)
    return np.exp(out)


def residual_h(phases: PhaseAssignment, anchor: np.ndarray | list[int],
               prime_limit: int, s_disc: complex,
               table: PrimeTable | None = None) -> complex:
    """Residual of the product outside the anchored prime set.

    h = [prod over primes <= prime_limit] * [prod over anchored (1 - ...)] - 1,
    a Dirichlet series over integers > 1 composed of the free primes only.
    """
    if table is None or table.limit < prime_limit:
        table = sieve(max(prime_limit, 2))
    primes = table.primes[table.primes <= prime_limit]
    anchor_set = {int(p) for p in anchor}
    if not anchor_set.issubset({int(p) for p in primes}):
        raise DomainError("anchored primes must all lie below prime_limit")
    if s_disc.real + 0.75 <= 0.5:
        raise DomainError("residual needs Re(s+3/4) > 1/2")
    free = np.array([p for p in primes if int(p) not in anchor_set], dtype=np.int64)
    if free.size == 0:
        return 0.0 + 0.0j
    theta = phases.phases_for(free)
    u = log_factor_grid(free, theta, np.array([s_disc]))
    return complex(np.expm1(-u.sum(axis=1))[0])


@dataclass(frozen=True)
class MeanSquareReport:
    r: float
    delta: float
    y: float
    free_limit: int
    samples: int
    seed: int
    estimate: float
    stderr: float
    bound: float
    ok: bool


def mean_square_bound(r: float, delta: float, y: float) -> float:
    """4*pi*(r+delta)^2/(1-4r-4delta) * y^(-1/2+2r+2delta)."""
    if not (r > 0 and delta > 0 and r + delta < 0.25):
        raise DomainError("need 0 < r, delta and r + delta < 1/4")
    if y < 2:
        raise DomainError("need y >= 2")
    return 4.0 * math.pi * (r + delta) ** 2 / (1.0 - 4.0 * r - 4.0 * delta) \
        * y ** (-0.5 + 2.0 * r + 2.0 * delta)


def mean_square_tail_experiment(r: float, delta: float, y: float,
                                samples: int = 1000, seed: int = 0,
                                free_factor: float = 4.0,
                                n_rad: int = 12, n_ang: int = 24) -> MeanSquareReport:
    """Monte Carlo mean of the squared disc integral of the free-prime
    residual over uniformly random phases, against the closed-form bound.

    Anchored primes are those <= y (phase 0); the free block is (y, free_factor*y].
    """
    bound = mean_square_bound(r, delta, y)  # validates r, delta, y
    free_limit = int(free_factor * y)
    table = sieve(free_limit)
    free = table.primes[(table.primes > y) & (table.primes <= free_limit)]
    pts, wts = disc_nodes(r + delta, n_rad, n_ang)
    pre = np.exp(-np.multiply.outer(pts + 0.75, np.log(free.astype(float))))  # (nodes, free)
    rng = make_rng(seed)
    vals = np.empty(samples)
    for i in range(samples):
        tw = np.exp(2j * np.pi * rng.random(free.size))
        h = np.expm1(-np.log1p(-tw[None, :] * pre).sum(axis=1))
        vals[i] = float(np.sum(wts * np.abs(h) ** 2))
    est = float(np.mean(vals))
    stderr = float(np.std(vals, ddof=1) / math.sqrt(samples)) if samples > 1 else 0.0
    return MeanSquareReport(r, delta, y, free_limit, samples, seed,
                            est, stderr, bound, est <= bound + 3.0 * stderr)
