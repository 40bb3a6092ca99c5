"""Prime generation, log-frequencies and prime-count diagnostics.

The sieve is a segmented Eratosthenes; tables are immutable numpy arrays
safe to share across workers.  Frequencies lambda_n = log(p_n) / (2*pi)
drive the fractional-part curves in the cube module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError

SIEVE_CAP = 200_000_000
_SEGMENT = 1 << 22


@dataclass(frozen=True)
class PrimeTable:
    limit: int
    primes: np.ndarray  # ascending int64

    def __len__(self) -> int:
        return int(self.primes.size)

    def count(self) -> int:
        return int(self.primes.size)


@dataclass(frozen=True)
class Frequency:
    index: int
    value: float


@dataclass(frozen=True)
class LogIntervalCount:
    alpha: float
    beta: float
    count: int
    ratio: float  # count / (beta * e^alpha / alpha)


def _simple_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve(limit: int) -> PrimeTable:
    """All primes <= limit, ascending."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_CAP:
        raise CapacityError(f"sieve limit {limit} exceeds cap {SIEVE_CAP}")
    if limit <= _SEGMENT:
        return PrimeTable(limit, _simple_sieve(limit))
    base = _simple_sieve(math.isqrt(limit))
    chunks = [base[base <= limit]]
    lo = int(base[-1]) + 1 if base.size else 2
    lo = max(lo, math.isqrt(limit) + 1)
    while lo <= limit:
        hi = min(lo + _SEGMENT - 1, limit)
        flags = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            flags[start - lo :: p] = False
        chunks.append((np.flatnonzero(flags) + lo).astype(np.int64))
        lo = hi + 1
    return PrimeTable(limit, np.concatenate(chunks))


def is_prime(n: int) -> bool:
    """Trial division; used for table re-checks and phase-map validation."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def nth_prime(n: int, table: PrimeTable | None = None) -> int:
    """The n-th prime, 1-indexed (p_1 = 2)."""
    if n < 1:
        raise DomainError("prime index must be >= 1")
    if table is not None and len(table) >= n:
        return int(table.primes[n - 1])
    bound = 15 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 10
    t = sieve(bound)
    while len(t) < n:
        bound *= 2
        t = sieve(bound)
    return int(t.primes[n - 1])


def frequency(n: int, table: PrimeTable | None = None) -> Frequency:
    """lambda_n = log(p_n) / (2*pi)."""
    p = nth_prime(n, table)
    return Frequency(n, math.log(p) / (2.0 * math.pi))


def frequencies(count: int, table: PrimeTable | None = None) -> np.ndarray:
    """Vector (lambda_1, ..., lambda_count)."""
    if count < 1:
        raise DomainError("count must be >= 1")
    if table is None or len(table) < count:
        bound = 15 if count < 6 else int(count * (math.log(count) + math.log(math.log(count)))) + 10
        table = sieve(bound)
        while len(table) < count:
            bound *= 2
            table = sieve(bound)
    return np.log(table.primes[:count].astype(float)) / (2.0 * np.pi)


def primes_in_log_interval(alpha: float, beta: float) -> LogIntervalCount:
    """Count primes p with e^alpha <= p <= e^(alpha+beta), and the ratio
    of the count to the crude density floor beta * e^alpha / alpha."""
    if beta <= 0.0:
        raise DomainError("beta must be positive")
    hi_f = math.exp(alpha + beta)
    if hi_f > SIEVE_CAP:
        raise CapacityError(f"e^(alpha+beta) = {hi_f:.3g} exceeds sieve cap")
    lo = math.ceil(math.exp(alpha))
    hi = math.floor(hi_f)
    if hi < 2:
        return LogIntervalCount(alpha, beta, 0, 0.0)
    t = sieve(max(hi, 2))
    cnt = int(np.count_nonzero((t.primes >= lo) & (t.primes <= hi)))
    floor = beta * math.exp(alpha) / alpha if alpha > 0 else math.inf
    ratio = cnt / floor if floor not in (0.0, math.inf) else 0.0
    return LogIntervalCount(alpha, beta, cnt, ratio)


_INDEP_MAX_PRIMES = 8
_INDEP_MAX_BOUND = 20
_INDEP_TOL = 1e-12


def _half_sums(logs: np.ndarray, bound: int) -> tuple[np.ndarray, np.ndarray]:
    """All integer combinations sum(k_i * logs_i), |k_i| <= bound, with the
    coefficient vectors; built by Cartesian accumulation."""
    sums = np.zeros(1)
    vecs = np.zeros((1, 0), dtype=np.int64)
    ks = np.arange(-bound, bound + 1, dtype=np.int64)
    for lg in logs:
        sums = (sums[:, None] + ks[None, :] * lg).ravel()
        vecs = np.concatenate(
            [np.repeat(vecs, ks.size, axis=0),
             np.tile(ks, vecs.shape[0])[:, None]], axis=1)
    return sums, vecs


def _relation_search(n_primes: int, bound: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Meet-in-the-middle scan of |sum k_i log p_i|; returns (vectors, values)
    for ALL vectors within _INDEP_TOL plus the global nonzero minimum."""
    t = sieve(200)
    logs = np.log(t.primes[:n_primes].astype(float))
    n_left = (n_primes + 1) // 2
    s_left, v_left = _half_sums(logs[:n_left], bound)
    s_right, v_right = _half_sums(logs[n_left:], bound)
    order = np.argsort(s_right)
    s_sorted = s_right[order]

    hits = []
    best_val = math.inf
    best_vec = None
    lo = np.searchsorted(s_sorted, -s_left - _INDEP_TOL, side="left")
    hi = np.searchsorted(s_sorted, -s_left + _INDEP_TOL, side="right")
    # nearest neighbour on the sorted side for the near-miss report
    pos = np.clip(np.searchsorted(s_sorted, -s_left), 0, s_sorted.size - 1)
    for shift in (0, -1):
        q = np.clip(pos + shift, 0, s_sorted.size - 1)
        gaps = np.abs(s_left + s_sorted[q])
        nz = _nonzero_mask(v_left, v_right[order[q]])
        gaps = np.where(nz, gaps, math.inf)
        j = int(np.argmin(gaps))
        if gaps[j] < best_val:
            best_val = float(gaps[j])
            best_vec = np.concatenate([v_left[j], v_right[order[q[j]]]])
    for i in np.flatnonzero(hi > lo):
        for j in range(lo[i], hi[i]):
            vec = np.concatenate([v_left[i], v_right[order[j]]])
            if np.any(vec):
                hits.append(vec)
    hit_arr = np.array(hits, dtype=np.int64).reshape(len(hits), n_primes)
    return hit_arr, best_vec, np.float64(best_val)


def _nonzero_mask(v_left: np.ndarray, v_right: np.ndarray) -> np.ndarray:
    return (np.any(v_left != 0, axis=1)) | (np.any(v_right != 0, axis=1))


def verify_log_independence(n_primes: int, bound: int) -> list[np.ndarray]:
    """Exhaustively search nonzero integer vectors k, |k_i| <= bound, with
    |sum k_i log p_i| < 1e-12.  Unique factorization forbids exact relations,
    so the returned list must be empty; anything else is a float-noise alarm.
    """
    if n_primes < 1 or bound < 1:
        raise DomainError("need n_primes >= 1 and bound >= 1")
    if n_primes > _INDEP_MAX_PRIMES or bound > _INDEP_MAX_BOUND:
        raise CapacityError(
            f"exhaustive search limited to n_primes <= {_INDEP_MAX_PRIMES}, "
            f"bound <= {_INDEP_MAX_BOUND}")
    hits, _, _ = _relation_search(n_primes, bound)
    return [hits[i] for i in range(hits.shape[0])]


def nearest_relation(n_primes: int, bound: int) -> tuple[np.ndarray, float]:
    """Best near-miss: the nonzero vector minimizing |sum k_i log p_i|."""
    if n_primes > _INDEP_MAX_PRIMES or bound > _INDEP_MAX_BOUND:
        raise CapacityError("search space too large")
    _, vec, val = _relation_search(n_primes, bound)
    return vec, float(val)
