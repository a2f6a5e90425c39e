"""Divisor counts in short intervals and the reverse window sieve.

tau_interval(m, [a, b]) counts divisors of a single m.  The scans go the other
way: for every d in a fixed window they walk the multiples of d up to a limit
and accumulate per-m counts, which yields max_m tau(m; window) for all m at
once at a cost of roughly sum_d (m_limit / d) marks, independent of how large
the window endpoints are.  Square scans use the window [2N, 2N+2k] with
m <= 3Nk, cube scans [3N^2, 3N^2+9Nk] with m <= 7N^2*k: these are exactly the
window/limit pairs produced by factoring differences of adjacent squares and
cubes, so per-m counts bound the representation functions of those sets.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import DivisorRange, divisors_in_range

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class WindowScanReport:
    """Result of one reverse-sieve scan.

    histogram maps each attained tau value (>= 1) to the number of m <= m_limit
    attaining it; untouched m have tau 0 and are not recorded.
    """

    n: int
    k: int
    m_limit: int
    window: DivisorRange
    max_tau: int
    argmax_m: int | None
    histogram: dict[int, int]


@dataclass(frozen=True)
class RuzsaEntry:
    n: int
    count: int
    running_max: int


def tau_interval(m: int, rng: DivisorRange | tuple[int, int]) -> int:
    """Number of divisors of m in the closed interval."""
    if m < 1:
        raise ValueError(f"tau_interval expects m >= 1, got {m}")
    return len(divisors_in_range(m, rng))


def _chunk_counts_numpy(d_lo: int, d_hi: int, m_limit: int) -> tuple[np.ndarray, np.ndarray]:
    parts = [
        np.arange(d, m_limit + 1, d, dtype=np.int64)
        for d in range(d_lo, min(d_hi, m_limit) + 1)
    ]
    if not parts:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy()
    marks = np.concatenate(parts)
    marks.sort()
    change = np.flatnonzero(marks[1:] != marks[:-1])
    starts = np.concatenate(([0], change + 1))
    values = marks[starts]
    counts = np.diff(np.concatenate((starts, [marks.size])))
    return values, counts


def _chunk_counts_dict(d_lo: int, d_hi: int, m_limit: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for d in range(d_lo, min(d_hi, m_limit) + 1):
        for m in range(d, m_limit + 1, d):
            counts[m] = counts.get(m, 0) + 1
    return counts


def _scan_chunk(args: tuple[int, int, int]) -> tuple[np.ndarray, np.ndarray]:
    d_lo, d_hi, m_limit = args
    return _chunk_counts_numpy(d_lo, d_hi, m_limit)


def _merge_counts(
    pieces: list[tuple[np.ndarray, np.ndarray]],
) -> tuple[np.ndarray, np.ndarray]:
    values = np.concatenate([p[0] for p in pieces])
    counts = np.concatenate([p[1] for p in pieces])
    if values.size == 0:
        return values, counts
    order = np.argsort(values, kind="stable")
    values = values[order]
    counts = counts[order]
    change = np.flatnonzero(values[1:] != values[:-1])
    starts = np.concatenate(([0], change + 1))
    merged_values = values[starts]
    merged_counts = np.add.reduceat(counts, starts)
    return merged_values, merged_counts


def _sieve_counts(window: DivisorRange, m_limit: int, workers: int) -> tuple[np.ndarray, np.ndarray]:
    if m_limit >= _INT64_SAFE:
        counts = _chunk_counts_dict(window.lo, window.hi, m_limit)
        ms = sorted(counts)
        return (
            np.array(ms, dtype=object),
            np.array([counts[m] for m in ms], dtype=object),
        )
    if workers <= 1 or window.hi - window.lo < 2 * workers:
        return _chunk_counts_numpy(window.lo, window.hi, m_limit)
    edges = np.linspace(window.lo, window.hi + 1, workers + 1).astype(int)
    chunks = [
        (int(edges[i]), int(edges[i + 1]) - 1, m_limit)
        for i in range(workers)
        if edges[i] < edges[i + 1]
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pieces = list(pool.map(_scan_chunk, chunks))
    return _merge_counts(pieces)


def window_multiple_counts(
    window: DivisorRange | tuple[int, int], m_limit: int, workers: int = 1
) -> dict[int, int]:
    """Per-m divisor counts: {m: tau(m; window)} for every touched m <= m_limit."""
    if not isinstance(window, DivisorRange):
        window = DivisorRange(*window)
    values, counts = _sieve_counts(window, m_limit, workers)
    return {int(m): int(c) for m, c in zip(values, counts)}


def _assemble_report(n: int, k: int, m_limit: int, window: DivisorRange, workers: int) -> WindowScanReport:
    values, counts = _sieve_counts(window, m_limit, workers)
    if len(values) == 0:
        return WindowScanReport(n, k, m_limit, window, 0, None, {})
    max_tau = int(counts.max())
    first = int(np.flatnonzero(counts == max_tau)[0])
    argmax_m = int(values[first])
    hist_vals, hist_counts = np.unique(np.asarray(counts, dtype=np.int64), return_counts=True)
    histogram = {int(t): int(c) for t, c in zip(hist_vals, hist_counts)}
    # cross-check the reported maximum against the direct divisor count
    direct = tau_interval(argmax_m, window)
    if direct != max_tau:
        raise RuntimeError(
            f"sieve reported tau={max_tau} at m={argmax_m} but direct count is {direct}"
        )
    return WindowScanReport(n, k, m_limit, window, max_tau, argmax_m, histogram)


def square_window_scan(n: int, k: int, workers: int = 1) -> WindowScanReport:
    """Scan m <= 3*n*k for divisors in [2n, 2n+2k].

    Every difference of two squares from {s^2 : n <= s <= n+k} factors with one
    factor in this window, so max_tau bounds the representation counts there.
    """
    if n < 1 or k < 1:
        raise ValueError("square_window_scan expects n >= 1 and k >= 1")
    if k > n:
        raise ValueError(f"square_window_scan requires k <= n, got k={k} > n={n}")
    return _assemble_report(n, k, 3 * n * k, DivisorRange(2 * n, 2 * n + 2 * k), workers)


def cube_window_scan(n: int, k: int, workers: int = 1) -> WindowScanReport:
    """Scan m <= 7*n^2*k for divisors in [3n^2, 3n^2+9nk] (cube analogue)."""
    if n < 1 or k < 1:
        raise ValueError("cube_window_scan expects n >= 1 and k >= 1")
    if k > n:
        raise ValueError(f"cube_window_scan requires k <= n, got k={k} > n={n}")
    nn = n * n
    return _assemble_report(n, k, 7 * nn * k, DivisorRange(3 * nn, 3 * nn + 9 * n * k), workers)


def ruzsa_scan(n_lo: int, n_hi: int, eps: float) -> list[RuzsaEntry]:
    """Count divisors of each N in [sqrt(N), sqrt(N) + N^(1/2 - eps)].

    Emits one entry per N with a running maximum.  The interval's lower end is
    the exact ceiling of sqrt(N); the width N^(1/2-eps) is evaluated in
    floating point, which is fine for an empirical probe.
    """
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie in (0, 1/2), got {eps}")
    if n_lo < 1 or n_lo > n_hi:
        raise ValueError("ruzsa_scan expects 1 <= n_lo <= n_hi")
    out: list[RuzsaEntry] = []
    running = 0
    for n in range(n_lo, n_hi + 1):
        s = math.isqrt(n)
        lo = s if s * s == n else s + 1
        hi = math.floor(math.sqrt(n) + n ** (0.5 - eps))
        count = tau_interval(n, DivisorRange(lo, hi)) if lo <= hi else 0
        running = max(running, count)
        out.append(RuzsaEntry(n=n, count=count, running_max=running))
    return out


def square_representations(m: int, n: int, k: int) -> list[tuple[int, int]]:
    """All pairs (n1, n2) of squares of integers in [n, n+k] with n1 - n2 = m.

    Recovered from the divisors of m in [2n, 2n+2k]: writing m = e * d with
    d = 2n + s1 + s2 and e = s1 - s2 forces s1 = (d - 2n + e) / 2 and
    s2 = (d - 2n - e) / 2, accepted only when both are integers in [0, k].
    Parity rejection is exact integer arithmetic.
    """
    if m < 1:
        raise ValueError(f"square_representations expects m >= 1, got {m}")
    if n < 1 or k < 1 or k > n:
        raise ValueError("square_representations expects 1 <= k <= n")
    pairs: list[tuple[int, int]] = []
    for d in divisors_in_range(m, DivisorRange(2 * n, 2 * n + 2 * k)):
        e = m // d
        t = d - 2 * n  # s1 + s2
        if e > t or (t + e) % 2 != 0:
            continue
        s1 = (t + e) // 2
        s2 = (t - e) // 2
        if 0 <= s2 and s1 <= k:
            pairs.append(((n + s1) ** 2, (n + s2) ** 2))
    return pairs
