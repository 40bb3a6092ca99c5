"""The infinite-dimensional unit cube, truncated: Tikhonov metric,
fractional-part curves along prime log-frequencies, finite permutations,
exact weighted-box volumes, and hitting-measure Monte Carlo.

Weighted box volumes use the inclusion-exclusion formula

    vol = (1/(N! prod a_n)) * sum_{S} (-1)^{|S|} ((u - sum_{n in S} a_n)_+)^N,

with a_n = e^{1-n}.  In double precision the alternating sum cancels down
to magnitude N! * prod a_n ~ e^{-N^2/2}, far below the rounding noise of the
individual terms, so the sum is evaluated exactly in fixed-point integers
(256 fractional bits) and rounded once at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError
from .primes import SIEVE_CAP, frequencies
from .randgen import make_rng

_VOLUME_MAX_DIM = 21
_SCALE_BITS = 256


@dataclass(frozen=True)
class CubePoint:
    dim: int
    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.size != self.dim:
            raise DomainError("coordinate count must equal the declared dimension")
        if np.any((c < 0.0) | (c >= 1.0)):
            raise DomainError("coordinates must lie in [0, 1)")
        object.__setattr__(self, "coords", c)


@dataclass(frozen=True)
class TikhonovSphere:
    center: CubePoint
    radius: float

    def __post_init__(self):
        if self.radius <= 0.0:
            raise DomainError("sphere radius must be positive")


@dataclass(frozen=True)
class FinitePermutation:
    """Bijection of {1..m} extended by the identity beyond m."""

    images: tuple[int, ...]

    def __post_init__(self):
        m = len(self.images)
        if sorted(self.images) != list(range(1, m + 1)):
            raise DomainError("images must be a bijection of 1..m")

    @property
    def support(self) -> int:
        return len(self.images)

    def apply_index(self, n: int) -> int:
        return self.images[n - 1] if n <= len(self.images) else n

    def compose(self, other: "FinitePermutation") -> "FinitePermutation":
        """Composition matching the cube action: (a.compose(b))(x) = a(b(x))."""
        m = max(self.support, other.support)
        return FinitePermutation(tuple(
            other.apply_index(self.apply_index(n)) for n in range(1, m + 1)))


def _weights(n: int) -> np.ndarray:
    return np.exp(1.0 - np.arange(1, n + 1, dtype=float))


def tikhonov_dist(x: CubePoint, y: CubePoint) -> tuple[float, float]:
    """Truncated Tikhonov distance and the certified truncation tail e^{1-N}."""
    if x.dim != y.dim:
        raise DomainError("dimension mismatch")
    d = float(np.sum(_weights(x.dim) * np.abs(x.coords - y.coords)))
    return d, math.exp(1.0 - x.dim)


def curve_point(t: float, n_dims: int, lambdas: np.ndarray | None = None) -> CubePoint:
    """Fractional-part curve ({t lambda_1}, ..., {t lambda_N})."""
    if n_dims < 1:
        raise DomainError("need at least one dimension")
    lam = frequencies(n_dims) if lambdas is None else np.asarray(lambdas, dtype=float)[:n_dims]
    return CubePoint(n_dims, np.mod(t * lam, 1.0))


def apply_permutation(sigma: FinitePermutation, x: CubePoint) -> CubePoint:
    """Coordinate reindexing (sigma x)_n = x_{sigma(n)}."""
    if sigma.support > x.dim:
        raise DomainError("permutation support exceeds point dimension")
    idx = np.array([sigma.apply_index(n) - 1 for n in range(1, x.dim + 1)])
    return CubePoint(x.dim, x.coords[idx])


def weighted_box_volume(u: float, n_dims: int) -> float:
    """Exact vol{x in [0,1]^N : sum e^{1-n} x_n <= u} by inclusion-exclusion
    over subset sums, evaluated in fixed-point integer arithmetic."""
    if not 1 <= n_dims <= _VOLUME_MAX_DIM:
        raise CapacityError(f"inclusion-exclusion limited to 1 <= N <= {_VOLUME_MAX_DIM}")
    weights = [math.exp(1 - n) for n in range(1, n_dims + 1)]
    total = sum(weights)
    if u <= 0.0:
        return 0.0
    if u >= total:
        return 1.0
    one = 1 << _SCALE_BITS
    a_int = [round(w * one) for w in weights]
    u_int = round(u * one)

    acc = 0

    def descend(i: int, partial: int, sign: int) -> None:
        nonlocal acc
        if partial >= u_int:
            return  # every deeper subset sum is larger still
        if i == n_dims:
            acc += sign * (u_int - partial) ** n_dims
            return
        descend(i + 1, partial, sign)
        descend(i + 1, partial + a_int[i], -sign)

    descend(0, 0, 1)
    denom = math.factorial(n_dims)
    for ai in a_int:
        denom *= ai
    return float(Fraction(acc, denom))


@dataclass(frozen=True)
class ContinuityMargin:
    r: float
    eps: float
    n_dims: int
    difference: float  # mu_N(r) - mu_N(r - eps)
    bound: float       # eps * 2^N
    margin: float      # bound - difference


def volume_continuity_check(r: float, eps: float, n_dims: int) -> ContinuityMargin:
    """Margin of the Lipschitz-type bound mu_N(r) - mu_N(r-eps) <= eps 2^N."""
    if eps < 0.0:
        raise DomainError("eps must be nonnegative")
    diff = weighted_box_volume(r, n_dims) - weighted_box_volume(r - eps, n_dims)
    bound = eps * 2.0 ** n_dims
    return ContinuityMargin(r, eps, n_dims, diff, bound, bound - diff)


@dataclass(frozen=True)
class CConstant:
    terms: int
    partial: float            # prod_{m<=terms} (1 + 2/m^2)
    tail_factor_bound: float  # exp(sum_{m>terms} 2/m^2) upper bound
    estimate: float           # partial * exp(tail estimate)


def c_constant(terms: int) -> CConstant:
    """Partial product of prod (1 + 2 m^{-2}) with a certified tail factor."""
    if terms < 1:
        raise DomainError("need at least one term")
    m = np.arange(1, terms + 1, dtype=float)
    partial = float(np.exp(np.sum(np.log1p(2.0 / m**2))))
    # sum_{m > M} 1/m^2 in [1/(M+1), 1/M]; Euler-Maclaurin estimate for the middle
    tail_upper = 2.0 / terms
    tail_est = 2.0 * (1.0 / terms - 1.0 / (2.0 * terms**2) + 1.0 / (6.0 * terms**3))
    return CConstant(terms, partial, float(math.exp(tail_upper)),
                     float(partial * math.exp(tail_est)))


@dataclass(frozen=True)
class HittingReport:
    n_dims: int
    t_samples: int
    volume_samples: int
    seed: int
    hit_estimate: float
    hit_stderr: float
    sphere_volumes: tuple[float, ...]
    sphere_volume_stderrs: tuple[float, ...]
    c_estimate: float
    bound: float  # 6 c * sum of sphere volume estimates
    ok: bool


def _union_hits(points: np.ndarray, spheres: list[TikhonovSphere],
                weights: np.ndarray) -> np.ndarray:
    hit = np.zeros(points.shape[0], dtype=bool)
    for sp in spheres:
        d = np.abs(points - sp.center.coords[None, :]) @ weights
        hit |= d < sp.radius
    return hit


def hitting_measure_mc(spheres: list[TikhonovSphere], n_dims: int,
                       t_samples: int, seed: int,
                       volume_samples: int | None = None,
                       lambdas: np.ndarray | None = None,
                       permutation: FinitePermutation | None = None) -> HittingReport:
    """Monte Carlo measure of {t in [0,1] : curve point in union of spheres},
    compared against 6c times the summed sphere volumes (both MC estimates).

    With `permutation` given, the curve coordinates and all sphere centers
    are jointly reindexed before the distance test.
    """
    if n_dims > 200:
        raise CapacityError("dimension capped at 200")
    if t_samples < 1000:
        raise DomainError("need at least 1000 curve samples")
    for sp in spheres:
        if sp.center.dim != n_dims:
            raise DomainError("sphere dimension mismatch")
    if permutation is not None:
        spheres = [TikhonovSphere(apply_permutation(permutation, sp.center), sp.radius)
                   for sp in spheres]
    lam = frequencies(n_dims) if lambdas is None else np.asarray(lambdas, dtype=float)[:n_dims]
    if permutation is not None:
        idx = np.array([permutation.apply_index(n) - 1 for n in range(1, n_dims + 1)])
        lam = lam[idx]
    weights = _weights(n_dims)
    rng = make_rng(seed)
    t = rng.random(t_samples)
    pts = np.mod(np.multiply.outer(t, lam), 1.0)
    hit = _union_hits(pts, spheres, weights) if spheres else np.zeros(t_samples, dtype=bool)
    est = float(np.mean(hit))
    stderr = float(math.sqrt(max(est * (1.0 - est), 1e-12) / t_samples))

    v_samples = volume_samples or t_samples
    vols, verrs = [], []
    for k, sp in enumerate(spheres):
        vr = make_rng(seed, stream=k + 1)
        x = vr.random((v_samples, n_dims))
        inside = (np.abs(x - sp.center.coords[None, :]) @ weights) < sp.radius
        v = float(np.mean(inside))
        vols.append(v)
        verrs.append(float(math.sqrt(max(v * (1.0 - v), 1e-12) / v_samples)))
    c_est = c_constant(10_000).estimate
    bound = 6.0 * c_est * sum(vols)
    slack = 3.0 * (stderr + 6.0 * c_est * math.sqrt(sum(e * e for e in verrs)))
    return HittingReport(n_dims, t_samples, v_samples, seed, est, stderr,
                         tuple(vols), tuple(verrs), c_est, bound,
                         est <= bound + slack)


def load_spheres(obj: dict) -> tuple[int, list[TikhonovSphere]]:
    """Sphere family from {dim, spheres: [{center: [...], radius}]}."""
    dim = int(obj["dim"])
    out = []
    for rec in obj["spheres"]:
        center = np.asarray(rec["center"], dtype=float)
        if center.size < dim:
            center = np.concatenate([center, np.zeros(dim - center.size)])
        out.append(TikhonovSphere(CubePoint(dim, center[:dim]), float(rec["radius"])))
    return dim, out


@dataclass(frozen=True)
class DiscrepancyReport:
    t_count: int
    n_dims: int
    t_max: float
    per_coord: np.ndarray
    pairwise: dict[tuple[int, int], float]


def star_discrepancy_1d(x: np.ndarray) -> float:
    """Exact 1-D star discrepancy of a point set in [0,1)."""
    xs = np.sort(np.asarray(x, dtype=float))
    n = xs.size
    i = np.arange(1, n + 1)
    return float(max(np.max(xs - (i - 1) / n), np.max(i / n - xs)))


def star_discrepancy_2d(x: np.ndarray, y: np.ndarray, grid: int = 64) -> float:
    """Grid-resolution estimate of the 2-D star discrepancy (anchored boxes
    with corners on a (grid x grid) lattice)."""
    edges = np.linspace(0.0, 1.0, grid + 1)
    hist, _, _ = np.histogram2d(x, y, bins=[edges, edges])
    cdf = np.cumsum(np.cumsum(hist, axis=0), axis=1) / x.size
    gx, gy = np.meshgrid(edges[1:], edges[1:], indexing="ij")
    return float(np.max(np.abs(cdf - gx * gy)))


def discrepancy(t_count: int, n_dims: int, t_max: float = 1000.0,
                lambdas: np.ndarray | None = None,
                pairs: tuple[tuple[int, int], ...] = ((1, 2), (2, 3))) -> DiscrepancyReport:
    """Equidistribution diagnostic: star discrepancies of ({t_j lambda_n})_j
    on the deterministic grid t_j = j * t_max / t_count."""
    if t_count < 100:
        raise DomainError("need at least 100 samples")
    lam = frequencies(n_dims) if lambdas is None else np.asarray(lambdas, dtype=float)[:n_dims]
    t = np.arange(1, t_count + 1, dtype=float) * (t_max / t_count)
    pts = np.mod(np.multiply.outer(t, lam), 1.0)
    per_coord = np.array([star_discrepancy_1d(pts[:, k]) for k in range(n_dims)])
    pw = {}
    for (i, j) in pairs:
        if 1 <= i <= n_dims and 1 <= j <= n_dims and i != j:
            pw[(i, j)] = star_discrepancy_2d(pts[:, i - 1], pts[:, j - 1])
    return DiscrepancyReport(t_count, n_dims, t_max, per_coord, pw)


@dataclass(frozen=True)
class MeasureSchedule:
    delta: float
    indices: tuple[int, ...]   # 1-based indices into the frequency sequence
    values: tuple[float, ...]  # the selected lambda values


def measure_schedule(delta: float, k: int,
                     lambdas: np.ndarray | None = None) -> MeasureSchedule:
    """Index selection lambda_{n_1} > 1, lambda_{n_{j+1}} > (4/delta) lambda_{n_j}.

    With the prime frequencies the required growth is p -> p^(4/delta), so any
    second index already exceeds every sievable prime; real-prime schedules
    with k >= 2 raise CapacityError, synthetic sequences are walked as given.
    """
    if not 0.0 < delta < 0.1:
        raise DomainError("need 0 < delta < 0.1")
    if k < 1:
        raise DomainError("need k >= 1")
    if lambdas is None:
        lam_max = math.log(SIEVE_CAP) / (2.0 * math.pi)
        picked_vals, picked_idx = [], []
        need = 1.0
        lam = frequencies(2000)
        for j, v in enumerate(lam, start=1):
            if v > need:
                picked_idx.append(j)
                picked_vals.append(float(v))
                if len(picked_vals) == k:
                    break
                need = 4.0 * v / delta
                if need > lam_max:
                    raise CapacityError(
                        f"schedule step {len(picked_vals) + 1} needs lambda > "
                        f"{need:.3g}, i.e. a prime beyond the sieve cap")
        else:
            raise CapacityError("frequency prefix exhausted")
        return MeasureSchedule(delta, tuple(picked_idx), tuple(picked_vals))
    lam = np.asarray(lambdas, dtype=float)
    picked_vals, picked_idx = [], []
    need = 1.0
    for j, v in enumerate(lam, start=1):
        if v > need:
            picked_idx.append(j)
            picked_vals.append(float(v))
            if len(picked_vals) == k:
                return MeasureSchedule(delta, tuple(picked_idx), tuple(picked_vals))
            need = 4.0 * v / delta
    raise CapacityError("sequence exhausted before reaching k qualifying terms")


def box_hit_measure(lambdas: np.ndarray, alphas: np.ndarray, delta: float) -> float:
    """Exact Lebesgue measure of {t in [0,1] : |{t lambda_j} - alpha_j| <= delta/2
    for all j}, by explicit interval intersection."""
    lam = np.asarray(lambdas, dtype=float)
    alp = np.asarray(alphas, dtype=float)
    if lam.size != alp.size:
        raise DomainError("need one alpha per lambda")
    if not 0.0 < delta < 1.0:
        raise DomainError("need 0 < delta < 1")
    current = [(0.0, 1.0)]
    for lam_j, a in zip(lam, alp):
        pieces = []
        for ell in range(-1, int(math.ceil(lam_j)) + 2):
            lo = (ell + a - 0.5 * delta) / lam_j
            hi = (ell + a + 0.5 * delta) / lam_j
            for (c_lo, c_hi) in current:
                s_lo, s_hi = max(lo, c_lo), min(hi, c_hi)
                if s_hi > s_lo:
                    pieces.append((s_lo, s_hi))
        if not pieces:
            return 0.0
        pieces.sort()
        merged = [pieces[0]]
        for lo, hi in pieces[1:]:
            if lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        current = merged
    return float(sum(hi - lo for lo, hi in current))
