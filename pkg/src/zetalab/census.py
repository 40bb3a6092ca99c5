"""Argument-principle zero counting and Rouché margin transfer.

Winding numbers accumulate principal-branch argument increments along the
sampled contour, bisecting any segment whose increment reaches pi/2, so no
derivative evaluations are needed and branch jumps cannot slip through.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, PrecisionError

Evaluator = Callable[[np.ndarray], np.ndarray]

_MIN_SAMPLES = 64
_ZERO_TOL = 1e-12
_MAX_POINTS = 1 << 20


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float


@dataclass(frozen=True)
class Rectangle:
    lo: complex  # bottom-left corner
    hi: complex  # top-right corner


@dataclass(frozen=True)
class Contour:
    shape: Circle | Rectangle
    samples: int = 256

    def __post_init__(self):
        if self.samples < _MIN_SAMPLES:
            raise DomainError(f"need at least {_MIN_SAMPLES} contour samples")
        sh = self.shape
        if isinstance(sh, Circle):
            if sh.radius <= 0.0:
                raise DomainError("circle radius must be positive")
            if sh.center.real - sh.radius <= 0.0:
                raise DomainError("contour must lie in sigma > 0")
            if abs(sh.center - 1.0) <= sh.radius:
                raise DomainError("contour region must avoid s = 1")
        else:
            if not (sh.lo.real < sh.hi.real and sh.lo.imag < sh.hi.imag):
                raise DomainError("degenerate rectangle")
            if sh.lo.real <= 0.0:
                raise DomainError("contour must lie in sigma > 0")
            if (sh.lo.real <= 1.0 <= sh.hi.real
                    and sh.lo.imag <= 0.0 <= sh.hi.imag):
                raise DomainError("contour region must avoid s = 1")

    def points(self, params: np.ndarray) -> np.ndarray:
        """Map params in [0,1) to contour points, counterclockwise."""
        u = np.mod(np.asarray(params, dtype=float), 1.0)
        sh = self.shape
        if isinstance(sh, Circle):
            return sh.center + sh.radius * np.exp(2j * np.pi * u)
        w = sh.hi.real - sh.lo.real
        h = sh.hi.imag - sh.lo.imag
        per = 2.0 * (w + h)
        d = u * per
        pts = np.empty(u.shape, dtype=complex)
        m = d < w
        pts[m] = sh.lo + d[m]
        m2 = (d >= w) & (d < w + h)
        pts[m2] = complex(sh.hi.real, sh.lo.imag) + 1j * (d[m2] - w)
        m3 = (d >= w + h) & (d < 2 * w + h)
        pts[m3] = sh.hi - (d[m3] - w - h)
        m4 = d >= 2 * w + h
        pts[m4] = complex(sh.lo.real, sh.hi.imag) - 1j * (d[m4] - 2 * w - h)
        return pts


@dataclass(frozen=True)
class CensusReport:
    winding: int
    min_modulus: float
    rouche_margin: float | None
    refined: bool
    samples_used: int
    arg_residual: float  # |total variation/2pi - winding| before rounding


def _arg_increments(vals: np.ndarray) -> np.ndarray:
    """Principal-branch argument steps along the closed loop."""
    nxt = np.roll(vals, -1)
    return np.angle(nxt / vals)


def winding_count(f: Evaluator, contour: Contour) -> CensusReport:
    """Zero count inside the contour by accumulated argument, refining until
    every consecutive argument increment is below pi/2."""
    params = np.arange(contour.samples) / contour.samples
    vals = np.asarray(f(contour.points(params)), dtype=complex)
    refined = False
    while True:
        mn = float(np.min(np.abs(vals)))
        if mn < _ZERO_TOL:
            raise DomainError("contour passes through a zero (|f| < 1e-12)")
        inc = _arg_increments(vals)
        bad = np.abs(inc) >= 0.5 * np.pi
        if not np.any(bad):
            break
        if params.size * 2 > _MAX_POINTS:
            raise PrecisionError("argument increments stay >= pi/2 after refinement cap")
        refined = True
        idx = np.flatnonzero(bad)
        nxt_params = np.where(idx + 1 < params.size, params[(idx + 1) % params.size], 1.0)
        mids = 0.5 * (params[idx] + nxt_params)
        mid_vals = np.asarray(f(contour.points(mids)), dtype=complex)
        params = np.concatenate([params, mids])
        vals = np.concatenate([vals, mid_vals])
        order = np.argsort(params)
        params, vals = params[order], vals[order]
    total = float(np.sum(_arg_increments(vals))) / (2.0 * np.pi)
    winding = int(round(total))
    residual = abs(total - winding)
    if residual >= 0.01:
        raise PrecisionError(f"winding total {total} too far from an integer")
    return CensusReport(winding, mn, None, refined, params.size, residual)


def rouche_margin(f: Evaluator, g: Evaluator, contour: Contour) -> float:
    """min over contour samples of |g| - |f - g|; positive values certify an
    equal zero count for f and g inside."""
    pts = contour.points(np.arange(contour.samples) / contour.samples)
    fv = np.asarray(f(pts), dtype=complex)
    gv = np.asarray(g(pts), dtype=complex)
    return float(np.min(np.abs(gv) - np.abs(fv - gv)))


@dataclass(frozen=True)
class ScanRow:
    t: float
    r: float
    m: float                    # min |zeta| on the contour
    margin: float               # Rouche margin min(|zeta| - |zeta - F|)
    count_zeta: int
    count_product: int
    crit_quarter: bool          # max|zeta - F| <= 0.25 m
    transfer_ok: bool           # margin > 0 implies equal counts (and holds)
    sup_error: float
    stage_count: int
    seed: int
    error: str = ""

    def as_csv_row(self) -> dict:
        return {"t": self.t, "r": self.r, "m": self.m, "margin": self.margin,
                "count_zeta": self.count_zeta, "count_product": self.count_product,
                "stage_count": self.stage_count, "seed": self.seed,
                "crit_quarter": int(self.crit_quarter),
                "transfer_ok": int(self.transfer_ok),
                "sup_error": self.sup_error, "error": self.error}


def strip_scan(t_values, r: float, *, y: float = 50.0, pool_limit: int = 10_000,
               samples: int = 256, seed: int = 0,
               approx_kwargs: dict | None = None) -> list[ScanRow]:
    """Per-height Rouché transfer: approximate zeta(3/4+s+it) on |s| <= r by a
    finite product, measure min |zeta| on the circle, test the 0.25m criterion
    and compare both winding counts.  Failures are reported per row."""
    from .approx import approximate_on_disc  # local import to keep census importable alone
    from .products import set_product_disc
    from .zeta import zeta_many

    if not 0.0 < r < 0.25:
        raise DomainError("need 0 < r < 1/4")
    akw = dict(approx_kwargs or {})
    rows: list[ScanRow] = []
    for t in t_values:
        t = float(t)
        contour = Contour(Circle(0.75 + 1j * t, r), samples)

        def zeta_fn(w: np.ndarray) -> np.ndarray:
            return zeta_many(np.asarray(w, dtype=complex))[0]

        def target(z: np.ndarray) -> np.ndarray:
            return zeta_many(np.asarray(z, dtype=complex) + 0.75 + 1j * t)[0]

        try:
            pts = contour.points(np.arange(samples) / samples)
            zv = zeta_fn(pts)
            m = float(np.min(np.abs(zv)))
            res = approximate_on_disc(target, r, y, 0.25 * m,
                                      pool_limit=pool_limit, **akw)
            primes = np.array(res.prime_set, dtype=np.int64)
            theta = res.phases.phases_for(primes)

            def product_fn(w: np.ndarray) -> np.ndarray:
                return set_product_disc(primes, theta,
                                        np.asarray(w, dtype=complex) - 0.75 - 1j * t)

            fv = product_fn(pts)
            margin = float(np.min(np.abs(zv) - np.abs(zv - fv)))
            crit = bool(np.max(np.abs(zv - fv)) <= 0.25 * m)
            count_zeta = winding_count(zeta_fn, contour).winding
            count_product = winding_count(product_fn, contour).winding
            transfer_ok = (margin <= 0.0) or (count_zeta == count_product)
            rows.append(ScanRow(t, r, m, margin, count_zeta, count_product,
                                crit, transfer_ok, float(res.sup_error), 1, seed))
        except (DomainError, PrecisionError) as exc:
            rows.append(ScanRow(t, r, math.nan, math.nan, 0, 0, False, False,
                                math.nan, 0, seed, error=str(exc)))
    return rows
