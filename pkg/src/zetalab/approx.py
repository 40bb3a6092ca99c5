"""Constructive approximation by phase-twisted finite Euler products.

The greedy rearrangement works in the Hardy space: the dictionary consists
of prime waves atom_p(theta) = e^{2*pi*i*theta} p^{-s-3/4} with a continuous
phase, and each step picks the prime and phase minimizing the residual norm.
The optimal phase has the closed form theta = frac(-arg Delta_rho(log p)/2pi)
where Delta_rho is the residual's pairing kernel, so a full selection step
is one matrix-vector product over the candidate pool.

Writing u_p = log(1 - e^{2*pi*i*theta_p} p^{-s-3/4}), the wave is the
first-order term of -u_p; fitting sum of waves to

    phi = log g - sum_{p<=y} u_p + sum_{selected} (u_p + atom_p)

and exponentiating yields the product-form approximation of the target, the
second sum being the curvature correction refreshed over outer iterations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, PrecisionError
from .grids import circle_points, disc_nodes, sup_on_circle
from .hardy import DEFAULT_DEGREE, HardyElement
from .primes import PrimeTable, sieve
from .products import PhaseAssignment, log_factor_grid, product_on_grid, set_product_disc
from .randgen import make_rng
from .zeta import sup_on_disc, zeta_many

Evaluator = Callable[[np.ndarray], np.ndarray]


# ----------------------------------------------------------------- greedy --

class WavePool:
    """Per-prime tables for greedy selection at a fixed radius and degree."""

    def __init__(self, primes: np.ndarray, radius: float, degree: int):
        self.primes = np.asarray(primes, dtype=np.int64)
        self.radius = float(radius)
        self.degree = int(degree)
        ln = np.log(self.primes.astype(float))
        n = np.arange(degree + 1)
        fact = np.concatenate([[1.0], np.cumprod(np.arange(1, degree + 1, dtype=float))])
        pm34 = self.primes.astype(float) ** -0.75
        scaled = np.power.outer(ln, n) / fact                      # (ln p)^n / n!
        self.delta_w = pm34[:, None] * scaled * radius ** n        # Delta row basis
        self.atom_base = pm34[:, None] * scaled * (-1.0) ** n      # atom coeffs sans phase
        rad_w = radius ** (2 * n + 2) / (n + 1)
        self.norms = math.pi * pm34 ** 2 * (scaled ** 2 @ rad_w)   # ||atom_p||^2


def _beta_of(coeffs: np.ndarray, radius: float) -> np.ndarray:
    n = np.arange(coeffs.size)
    return (-1.0) ** n * radius ** n * np.conj(coeffs) / (n + 1)


def _norm_sq(coeffs: np.ndarray, radius: float) -> float:
    n = np.arange(coeffs.size)
    return float(math.pi * np.sum(np.abs(coeffs) ** 2 * radius ** (2 * n + 2) / (n + 1)))


def optimal_phase(delta_value: complex) -> float:
    """Phase maximizing Re[e^{2 pi i theta} * delta_value]."""
    return float(-np.angle(delta_value) / (2.0 * np.pi)) % 1.0


@dataclass
class ApproximationResult:
    prime_set: list[int]
    phases: PhaseAssignment
    sup_error: float | None
    residual_norm_trace: list[float]
    converged: bool
    reason: str
    ok: bool | None = None
    eps: float | None = None
    y: float | None = None
    radius_work: float | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "prime_set": [int(p) for p in self.prime_set],
            "phases": {str(p): th for p, th in sorted(self.phases.entries.items())},
            "sup_error": self.sup_error,
            "residual_norm_trace": [float(v) for v in self.residual_norm_trace],
            "converged": self.converged,
            "reason": self.reason,
            "ok": self.ok,
            "eps": self.eps,
            "y": self.y,
            "radius_work": self.radius_work,
            "details": self.details,
        }


def _lm_phase_polish(target_coeffs: np.ndarray, atoms: np.ndarray,
                     omegas: np.ndarray, radius: float,
                     iters: int = 150) -> tuple[np.ndarray, float]:
    """Joint phase optimization of a fixed atom selection by Levenberg-
    Marquardt on min over omega of ||target - sum e^{i omega_j} atom_j||.

    Coordinate sweeps zigzag on this selection's nearly singular Gram; the
    damped Newton step converges where sweeps stall.  Only improving steps
    are accepted, so the residual norm never increases."""
    n = np.arange(target_coeffs.size)
    sqw = np.sqrt(math.pi * radius ** (2 * n + 2) / (n + 1))
    vt = atoms * sqw[None, :]
    tw = target_coeffs * sqw
    cur = tw - (np.exp(1j * omegas) @ vt)
    fcur = float(np.vdot(cur, cur).real)
    lam = 1e-3
    m = omegas.size
    data_dim = 2 * tw.size
    dual = m > data_dim  # Woodbury form once parameters outnumber data dims
    eye = np.eye(data_dim if dual else m)
    slow = 0
    for _ in range(iters):
        jc = (-1j * np.exp(1j * omegas))[:, None] * vt  # d residual / d omega_j
        jmat = np.concatenate([jc.real, jc.imag], axis=1)
        r = np.concatenate([cur.real, cur.imag])
        grad = jmat @ r
        try:
            if dual:
                inner_solve = np.linalg.solve(jmat.T @ jmat + lam * eye,
                                              jmat.T @ grad)
                step = -(grad - jmat @ inner_solve) / lam
            else:
                step = np.linalg.solve(jmat @ jmat.T + lam * eye, -grad)
        except np.linalg.LinAlgError:
            break
        cand = omegas + step
        new = tw - (np.exp(1j * cand) @ vt)
        fnew = float(np.vdot(new, new).real)
        if fnew < fcur:
            slow = slow + 1 if fnew > fcur * (1.0 - 1e-9) else 0
            omegas, cur, fcur = cand, new, fnew
            lam = max(lam * 0.3, 1e-14)
        else:
            lam *= 5.0
            if lam > 1e12:
                break
        if fcur < 1e-30 or slow >= 8:
            break
    return omegas, math.sqrt(max(fcur, 0.0))


def _lm_budget(n_sel: int) -> int:
    if n_sel <= 64:
        return 3000
    if n_sel <= 400:
        return 600
    return 250


def greedy_rearrange(target: HardyElement, pool: PrimeTable, start_index: int = 0,
                     max_terms: int = 500, tol: float = 1e-9, *,
                     sweeps: int = 2, lm_cap: int = 4000, lm_iters: int | None = None,
                     stall_window: int = 50, stall_rel: float = 1e-12,
                     degree: int | None = None) -> ApproximationResult:
    """Steepest-descent term selection over the prime pool.

    Stops at the norm tolerance, the term budget, or a stagnation report
    (relative norm decrease below stall_rel over stall_window steps).  A
    final joint phase polish (Levenberg-Marquardt, selections up to lm_cap
    atoms) finishes what coordinate sweeps leave; the residual trace is
    nonincreasing throughout.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    primes = pool.primes[start_index:]
    if primes.size == 0:
        raise DomainError("empty prime pool")
    degree = max(target.degree, DEFAULT_DEGREE) if degree is None else degree
    degree = max(degree, target.degree)
    wp = WavePool(primes, target.radius, degree)
    radius = target.radius
    pref = math.pi * radius ** 2

    rho = np.zeros(degree + 1, dtype=complex)
    rho[: target.coeffs.size] = target.coeffs
    used = np.zeros(primes.size, dtype=bool)
    sel_idx: list[int] = []
    sel_theta: list[float] = []
    trace = [math.sqrt(_norm_sq(rho, radius))]
    reason = "max_terms"
    rad_w = math.pi * radius ** (2 * np.arange(degree + 1) + 2) / (np.arange(degree + 1) + 1)
    grid_ph = np.exp(2j * np.pi * np.arange(16) / 16)

    def sweep_once() -> None:
        for j, idx in enumerate(sel_idx):
            rho[:] += np.exp(2j * np.pi * sel_theta[j]) * wp.atom_base[idx]
            dv = pref * (wp.delta_w[idx] @ _beta_of(rho, radius))
            th = optimal_phase(dv)
            rho[:] -= np.exp(2j * np.pi * th) * wp.atom_base[idx]
            sel_theta[j] = th

    def pair_move(dv: np.ndarray) -> bool:
        """Joint add of two adjacent free primes; escapes the cone stall where
        no single wave has positive gain.  Returns True if a pair was taken."""
        free = np.flatnonzero(~used)
        if free.size < 2:
            return False
        i1, i2 = free[:-1], free[1:]
        d1, d2 = dv[i1], dv[i2]
        cross = (wp.atom_base[i1] * wp.atom_base[i2]) @ rad_w  # real pairing
        nsum = wp.norms[i1] + wp.norms[i2]
        f = (2.0 * np.real(np.multiply.outer(d1, grid_ph))[:, :, None]
             + 2.0 * np.real(np.multiply.outer(d2, grid_ph))[:, None, :]
             - 2.0 * np.real(cross[:, None, None]
                             * np.multiply.outer(np.conj(grid_ph), grid_ph)[None, :, :])
             - nsum[:, None, None])
        flat = f.reshape(f.shape[0], -1)
        arg = flat.argmax(axis=1)
        best = flat[np.arange(flat.shape[0]), arg]
        j = int(np.argmax(best))
        ai, bi = np.unravel_index(arg[j], (16, 16))
        alpha = 2.0 * np.pi * ai / 16
        beta = 2.0 * np.pi * bi / 16
        dd1, dd2, gg = d1[j], d2[j], cross[j]
        for _ in range(40):  # alternating exact 1-D phase solves
            alpha = -np.angle(dd1 - np.exp(-1j * beta) * gg)
            beta = -np.angle(dd2 - np.exp(-1j * alpha) * np.conj(gg))
        gain = (2.0 * np.real(np.exp(1j * alpha) * dd1)
                + 2.0 * np.real(np.exp(1j * beta) * dd2)
                - 2.0 * np.real(np.exp(1j * (alpha - beta)) * gg) - nsum[j])
        if gain <= 1e-18:
            return False
        for q, om in ((int(i1[j]), alpha), (int(i2[j]), beta)):
            rho[:] -= np.exp(1j * om) * wp.atom_base[q]
            used[q] = True
            sel_idx.append(q)
            sel_theta.append(float(om / (2.0 * np.pi)) % 1.0)
        return True

    while len(sel_idx) < max_terms:
        if trace[-1] <= tol:
            reason = "tol"
            break
        dv = pref * (wp.delta_w @ _beta_of(rho, radius))
        gains = 2.0 * np.abs(dv) - wp.norms
        gains[used] = -np.inf
        k = int(np.argmax(gains))
        if gains[k] > 0.0:
            th = optimal_phase(dv[k])
            rho[:] -= np.exp(2j * np.pi * th) * wp.atom_base[k]
            used[k] = True
            sel_idx.append(k)
            sel_theta.append(th)
        elif not pair_move(dv):
            reason = "no_descent"
            break
        if len(sel_idx) <= 256:
            for _ in range(sweeps):
                sweep_once()
        trace.append(math.sqrt(_norm_sq(rho, radius)))
        if len(trace) > stall_window:
            prev = trace[-stall_window - 1]
            if prev > 0.0 and (prev - trace[-1]) < stall_rel * prev:
                reason = "stagnation"
                break

    if sel_idx and len(sel_idx) <= lm_cap and trace[-1] > 0.0:
        tgt = np.zeros(degree + 1, dtype=complex)
        tgt[: target.coeffs.size] = target.coeffs
        omegas = 2.0 * np.pi * np.asarray(sel_theta)
        budget = _lm_budget(len(sel_idx)) if lm_iters is None else lm_iters
        omegas, _ = _lm_phase_polish(tgt, wp.atom_base[sel_idx], omegas, radius,
                                     iters=budget)
        new_rho = tgt - (np.exp(1j * omegas) @ wp.atom_base[sel_idx])
        new_norm = math.sqrt(_norm_sq(new_rho, radius))
        if new_norm < trace[-1]:
            rho = new_rho
            sel_theta = [float(w / (2.0 * np.pi)) % 1.0 for w in omegas]
            trace.append(new_norm)

    if trace[-1] <= tol:
        reason = "tol"
    converged = reason == "tol"
    sel_primes = wp.primes[sel_idx]
    phases = PhaseAssignment({int(p): float(t) for p, t in zip(sel_primes, sel_theta)})
    resid = HardyElement(radius, rho)
    sup_err = sup_on_circle(resid, 0.0 + 0.0j, 0.5 * radius, 256)
    return ApproximationResult(
        prime_set=sorted(int(p) for p in sel_primes),
        phases=phases,
        sup_error=sup_err,
        residual_norm_trace=trace,
        converged=converged,
        reason=reason,
        radius_work=radius,
        details={"residual_norm": trace[-1], "terms": len(sel_idx),
                 "sup_grid_radius": 0.5 * radius},
    )


# ------------------------------------------------------------ disc target --

def working_radius(r: float) -> float:
    """Hardy radius strictly between r and 1/4."""
    return min(2.0 * r, 0.5 * (r + 0.25))


def _assert_nonvanishing(g: Evaluator, radius: float) -> None:
    n = 512
    while True:
        vals = np.asarray(g(circle_points(0.0 + 0.0j, radius, n)), dtype=complex)
        if float(np.min(np.abs(vals))) <= 1e-300:
            raise DomainError("target vanishes on the disc boundary")
        inc = np.angle(np.roll(vals, -1) / vals)
        if float(np.max(np.abs(inc))) < 0.5 * np.pi:
            wind = int(round(float(np.sum(inc)) / (2.0 * np.pi)))
            if wind != 0:
                raise DomainError("target has zeros inside the disc (winding != 0)")
            return
        n *= 2
        if n > 16384:
            raise PrecisionError("cannot certify nonvanishing of the target")


def approximate_on_disc(g: Evaluator, r: float, y: float, eps: float, *,
                        pool_limit: int = 100_000,
                        prescribed: dict[int, float] | None = None,
                        degree: int = DEFAULT_DEGREE, circle_samples: int = 2048,
                        outer_iters: int = 12, max_terms: int = 4000,
                        sweeps: int = 2, sup_samples: int = 512,
                        tol_floor: float = 1e-12,
                        table: PrimeTable | None = None) -> ApproximationResult:
    """Approximate an analytic nonvanishing target on |s| <= r by a finite
    phase-twisted product at exponent s + 3/4.

    Phases for primes <= y are prescribed (default 0) and never modified by
    the search; the result reports the measured boundary sup error and an
    honest ok flag instead of raising when the budget falls short.
    """
    if not 0.0 < r < 0.25:
        raise DomainError("need 0 < r < 1/4")
    if eps <= 0.0 or y < 2.0:
        raise DomainError("need eps > 0 and y >= 2")
    if table is None or table.limit < pool_limit:
        table = sieve(pool_limit)
    radius = working_radius(r)

    _assert_nonvanishing(g, r)
    _assert_nonvanishing(g, radius)

    z = circle_points(0.0 + 0.0j, radius, circle_samples)
    gv = np.asarray(g(z), dtype=complex)
    lg = np.log(np.abs(gv)) + 1j * np.unwrap(np.angle(gv))

    anchors = table.primes[table.primes <= y]
    if prescribed is None:
        prescribed = {int(p): 0.0 for p in anchors}
    else:
        if any(int(p) > y for p in prescribed):
            raise DomainError("prescribed phases are only for primes <= y")
        prescribed = {int(p): prescribed.get(int(p), 0.0) for p in anchors}
    # log zeta_M = -sum u_p, so stripping the anchored block ADDS its u-sum
    pres_pa = PhaseAssignment(dict(prescribed))
    if anchors.size:
        theta0 = pres_pa.phases_for(anchors)
        phi_vals = lg + log_factor_grid(anchors, theta0, z).sum(axis=1)
    else:
        phi_vals = lg.astype(complex)

    start_index = int(np.searchsorted(table.primes, y, side="right"))
    max_g = float(np.max(np.abs(np.asarray(g(circle_points(0j, r, 256)), dtype=complex))))
    sup_log_goal = 0.4 * eps / max(max_g, 1e-30)
    tol_norm = max(tol_floor, sup_log_goal * math.sqrt(math.pi) * (radius - r) * 0.5)

    idx_n = np.arange(degree + 1)
    res = None
    phi_corr = phi_vals
    outer_tol = 0.25 * eps / max(max_g, 1e-30)
    for it in range(outer_iters):
        c = np.fft.fft(phi_corr) / circle_samples
        coeffs = c[: degree + 1] / radius ** idx_n
        phi_el = HardyElement(radius, coeffs)
        res = greedy_rearrange(phi_el, table, start_index, max_terms, tol_norm,
                               sweeps=sweeps, degree=degree)
        sel = np.array(res.prime_set, dtype=np.int64)
        if sel.size == 0:
            break
        # curvature correction nu_p = u_p + atom_p refreshed for the selection
        th = res.phases.phases_for(sel)
        w = np.exp(2j * np.pi * th)[None, :] \
            * np.exp(-np.multiply.outer(z + 0.75, np.log(sel.astype(float))))
        phi_next = phi_vals + (np.log1p(-w) + w).sum(axis=1)
        shift = float(np.max(np.abs(phi_next - phi_corr)))
        phi_corr = phi_next
        if it >= 1 and shift < outer_tol:
            break

    sel = np.array(res.prime_set, dtype=np.int64)
    full_primes = np.concatenate([anchors, sel]).astype(np.int64)
    full_phases = pres_pa.merged(res.phases)
    order = np.argsort(full_primes)
    full_primes = full_primes[order]
    theta_full = full_phases.phases_for(full_primes)

    def err_fn(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=complex)
        return np.asarray(g(s), dtype=complex) - set_product_disc(full_primes, theta_full, s)

    e_coarse = sup_on_circle(err_fn, 0.0 + 0.0j, r, sup_samples)
    e_fine = sup_on_circle(err_fn, 0.0 + 0.0j, r, 2 * sup_samples)
    sup_error = max(e_coarse, e_fine)

    return ApproximationResult(
        prime_set=[int(p) for p in full_primes],
        phases=full_phases,
        sup_error=sup_error,
        residual_norm_trace=res.residual_norm_trace,
        converged=res.converged,
        reason=res.reason,
        ok=bool(sup_error <= eps),
        eps=eps,
        y=float(y),
        radius_work=radius,
        details={"sup_coarse": e_coarse, "sup_fine": e_fine,
                 "grid_agreement": abs(e_fine - e_coarse),
                 "selected": [int(p) for p in sel],
                 "residual_norm": res.details.get("residual_norm")},
    )


# --------------------------------------------------------------- doubling --

def spec_c_delta(delta: float) -> float:
    """The constant sqrt(2)/(delta*sqrt(2*pi)) gating the initial scale."""
    return math.sqrt(2.0) / (delta * math.sqrt(2.0 * math.pi))


@dataclass
class Stage:
    k: int
    y_k: float
    m_k: int
    prime_count: int
    approx_sup: float
    stage_error: float
    bound: float
    ok: bool
    restart_pick: int


@dataclass
class DoublingSchedule:
    y0: float
    r: float
    delta: float
    eps: float
    seed: int
    restarts: int
    a_sup: float
    min_eps: float
    stages: list[Stage]
    phase_maps: list[PhaseAssignment]
    limits: list[int]

    def to_json(self) -> dict:
        return {
            "y0": self.y0, "r": self.r, "delta": self.delta, "eps": self.eps,
            "seed": self.seed, "restarts": self.restarts, "a_sup": self.a_sup,
            "min_eps": self.min_eps,
            "stages": [vars(st) for st in self.stages],
            "limits": self.limits,
            "phase_maps": [{str(p): th for p, th in sorted(pm.entries.items())}
                           for pm in self.phase_maps],
        }

    def stage_rows(self) -> list[dict]:
        return [{"stage": st.k, "y_k": st.y_k, "m_k": st.m_k,
                 "stage_error": st.stage_error, "bound": st.bound}
                for st in self.stages]


def doubling_bound(k: int, r: float, delta: float, eps: float) -> float:
    return 2.0 ** (1.0 + k * (r + delta - 0.25)) * eps


def minimal_eps(y0: float, r: float, delta: float, grid: int = 512) -> float:
    """Smallest eps compatible with the initial-scale gate
    (A+1) c(delta) y0^(r+delta-1/4) <= eps, A = max |zeta(3/4+s)| on the disc."""
    a_sup = sup_on_disc(0.75 + 0.0j, r, grid)
    return (a_sup + 1.0) * spec_c_delta(delta) * y0 ** (r + delta - 0.25)


def doubling_scheme(y0: float, stages: int, eps: float, r: float, delta: float,
                    restarts: int = 8, seed: int = 0, *,
                    pool_limit: int | None = None, grid: int = 256,
                    approx_kwargs: dict | None = None) -> DoublingSchedule:
    """Stagewise extension y_k = 2^k y0 of the phase vector with stage bounds
    2^(1+k(r+delta-1/4)) eps (asserted with a safety factor of 2).

    Random phase candidates on the free primes realize the mean-value step:
    best of `restarts` seeded draws plus the all-zero candidate.
    """
    if not (r > 0.0 and delta > 0.0 and r + delta < 0.25):
        raise DomainError("need r, delta > 0 with r + delta < 1/4")
    if y0 < 2.0:
        raise DomainError("need y0 >= 2")
    a_sup = sup_on_disc(0.75 + 0.0j, r, 512)
    min_eps = (a_sup + 1.0) * spec_c_delta(delta) * y0 ** (r + delta - 0.25)
    if eps < min_eps:
        raise DomainError(
            f"eps = {eps:.6g} below the initial-scale gate {min_eps:.6g}; "
            f"raise eps or y0")
    if pool_limit is None:
        pool_limit = int(max(100_000, 32 * y0 * 2 ** stages))
    table = sieve(pool_limit)
    akw = dict(approx_kwargs or {})

    def target(z: np.ndarray) -> np.ndarray:
        return zeta_many(np.asarray(z, dtype=complex) + 0.75)[0]

    s_pts = circle_points(0.0 + 0.0j, r, grid)
    zeta_on_c = target(s_pts)

    out_stages: list[Stage] = []
    phase_maps: list[PhaseAssignment] = []
    limits: list[int] = []
    for k in range(stages + 1):
        y_k = y0 * 2.0 ** k
        eps_k = eps / 2.0 ** k
        res = approximate_on_disc(target, r, y_k, eps_k, pool_limit=pool_limit,
                                  table=table, **akw)
        m_k = max(res.prime_set)
        in_m = np.isin(table.primes, np.array(res.prime_set, dtype=np.int64))
        free = table.primes[(table.primes <= m_k) & (~in_m)]
        best_err, best_pick, best_map = math.inf, -1, None
        for j in range(restarts):
            if j == 0:
                cand = PhaseAssignment.zeros()
            else:
                cand = PhaseAssignment.random(free, seed, stream=(k + 1) * 1000 + j)
            full = res.phases.merged(cand) if j else res.phases
            f_vals = product_on_grid(full, m_k, s_pts + 0.75, table)
            err = float(np.max(np.abs(zeta_on_c - f_vals)))
            if err < best_err:
                best_err, best_pick, best_map = err, j, full
        bound = doubling_bound(k, r, delta, eps)
        out_stages.append(Stage(k, y_k, m_k, int(np.count_nonzero(table.primes <= m_k)),
                                float(res.sup_error), best_err, bound,
                                bool(best_err <= 2.0 * bound), best_pick))
        phase_maps.append(best_map)
        limits.append(m_k)
    return DoublingSchedule(y0, r, delta, eps, seed, restarts, a_sup, min_eps,
                            out_stages, phase_maps, limits)


@dataclass(frozen=True)
class SeriesDiagnostic:
    t: float
    terms: tuple[float, ...]
    partial_sums: tuple[float, ...]


def series_convergence_diagnostic(schedule: DoublingSchedule, t: float,
                                  n_rad: int = 16, n_ang: int = 32,
                                  table: PrimeTable | None = None) -> SeriesDiagnostic:
    """Consecutive-stage L1 disc integrals of |F_l - F_{l-1}| at height t,
    with the F_0 = 0 convention, plus their partial sums."""
    pts, wts = disc_nodes(schedule.r, n_rad, n_ang)
    w = pts + 0.75 + 1j * t
    if table is None:
        table = sieve(max(schedule.limits))
    prev = np.zeros(w.shape, dtype=complex)
    terms = []
    for pm, m_k in zip(schedule.phase_maps, schedule.limits):
        cur = product_on_grid(pm, m_k, w, table)
        terms.append(float(np.sum(wts * np.abs(cur - prev))))
        prev = cur
    sums = np.cumsum(terms)
    return SeriesDiagnostic(t, tuple(terms), tuple(float(x) for x in sums))
