"""Representation counts, additive energy, and exact L2/L4 norms of
trigonometric polynomials f(x) = sum a_n e(n x) with e(x) = exp(2*pi*i*x).

Counting is exact integer work; norms are floating point.  The L4 norm has two
independent routes: the autocorrelation identity ||f||_4^4 = sum |c_m|^2 and an
equally-spaced quadrature rule that is exact for the bandwidth of |f|^4, which
makes each one an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

# pair tables go through int64 numpy only when frequencies cannot overflow
_INT64_SAFE = 1 << 61
_PAIR_TABLE_LIMIT = 3000
_QUADRATURE_POINT_LIMIT = 1 << 26

RUDIN_REL_TOL = 1e-9


def frequency_set(values: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a strictly increasing tuple; rejects duplicates."""
    elems = tuple(sorted(int(v) for v in values))
    if not elems:
        raise ValueError("frequency set must be nonempty")
    for x, y in zip(elems, elems[1:]):
        if x == y:
            raise ValueError(f"duplicate frequency {x}")
    return elems


class TrigPolynomial:
    """Finite frequency-to-coefficient map; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, complex]):
        self.terms: dict[int, complex] = {}
        for n, a in terms.items():
            a = complex(a)
            if a != 0:
                self.terms[int(n)] = a

    @classmethod
    def unit(cls, freqs: Iterable[int]) -> "TrigPolynomial":
        return cls({n: 1.0 for n in frequency_set(freqs)})

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)


def unit_polynomial(freqs: Iterable[int]) -> TrigPolynomial:
    """Polynomial with coefficient 1 on every given frequency."""
    return TrigPolynomial.unit(freqs)


@dataclass(frozen=True)
class Autocorrelation:
    """Fourier coefficients c_m of |f|^2, keyed by frequency difference m."""

    coeffs: dict[int, complex]


@dataclass(frozen=True)
class RudinCertificate:
    """Explicit fourth-moment bound ||f||_4^4 <= (1 + max_{m>0} r(m)) * ||f||_2^4."""

    lhs: float
    rhs: float
    max_r: int
    holds: bool


def _int64_ok(sorted_freqs: tuple[int, ...]) -> bool:
    return (
        len(sorted_freqs) <= _PAIR_TABLE_LIMIT
        and abs(sorted_freqs[0]) < _INT64_SAFE
        and abs(sorted_freqs[-1]) < _INT64_SAFE
    )


def representation_counts(freqs: Iterable[int]) -> dict[int, int]:
    """r(m) = number of ordered pairs (n1, n2) with n1 - n2 = m, all m."""
    a = frequency_set(freqs)
    counts: dict[int, int] = {0: len(a)}
    for i, x in enumerate(a):
        for y in a[i + 1 :]:
            m = y - x
            counts[m] = counts.get(m, 0) + 1
            counts[-m] = counts.get(-m, 0) + 1
    return counts


def _energy_dict(a: tuple[int, ...]) -> int:
    pos: dict[int, int] = {}
    for i, x in enumerate(a):
        for y in a[i + 1 :]:
            m = y - x
            pos[m] = pos.get(m, 0) + 1
    return len(a) ** 2 + 2 * sum(c * c for c in pos.values())


def _energy_numpy(a: tuple[int, ...]) -> int:
    arr = np.array(a, dtype=np.int64)
    diffs = np.subtract.outer(arr, arr).ravel()
    diffs.sort()
    change = np.flatnonzero(diffs[1:] != diffs[:-1])
    starts = np.concatenate(([0], change + 1, [diffs.size]))
    counts = np.diff(starts)
    return int(np.dot(counts, counts))


def additive_energy(freqs: Iterable[int]) -> int:
    """Number of quadruples (a1, b1, a2, b2) in A^4 with a1 + b1 = a2 + b2.

    Equals sum over m of r(m)^2; always at least 2|A|^2 - |A|, with equality
    exactly on Sidon sets.
    """
    a = frequency_set(freqs)
    if len(a) == 1:
        return 1
    if len(a) <= 6000 and abs(a[0]) < _INT64_SAFE and abs(a[-1]) < _INT64_SAFE:
        return _energy_numpy(a)
    return _energy_dict(a)


def trivial_energy(size: int) -> int:
    """Energy contributed by the trivial quadruples {a1,b1} == {a2,b2}."""
    return 2 * size * size - size


def autocorrelation(f: TrigPolynomial) -> Autocorrelation:
    """c_m = sum over n1 - n2 = m of a_{n1} * conj(a_{n2})."""
    if not f.terms:
        raise ValueError("autocorrelation of the empty polynomial")
    items = sorted(f.terms.items())
    coeffs: dict[int, complex] = {}
    for n1, a1 in items:
        for n2, a2 in items:
            m = n1 - n2
            coeffs[m] = coeffs.get(m, 0j) + a1 * a2.conjugate()
    return Autocorrelation(coeffs)


def l2_norm_sq(f: TrigPolynomial) -> float:
    """Squared L2 norm: sum |a_n|^2."""
    return sum(abs(f.terms[n]) ** 2 for n in sorted(f.terms))


def _l4_pairs_numpy(freqs: list[int], coefs: list[complex]) -> float:
    n = np.array(freqs, dtype=np.int64)
    a = np.array(coefs, dtype=np.complex128)
    diffs = np.subtract.outer(n, n).ravel()
    prods = np.multiply.outer(a, np.conj(a)).ravel()
    order = np.argsort(diffs, kind="stable")
    diffs = diffs[order]
    prods = prods[order]
    boundaries = np.flatnonzero(diffs[1:] != diffs[:-1]) + 1
    starts = np.concatenate(([0], boundaries))
    sums = np.add.reduceat(prods, starts)
    return float(np.sum(sums.real**2 + sums.imag**2))


def l4_norm_4(f: TrigPolynomial) -> float:
    """Fourth power of the L4 norm, via ||f||_4^4 = sum_m |c_m|^2."""
    if not f.terms:
        return 0.0
    support = f.support()
    if len(support) >= 2 and _int64_ok(support):
        return _l4_pairs_numpy(list(support), [f.terms[n] for n in support])
    acf = autocorrelation(f)
    return sum(abs(acf.coeffs[m]) ** 2 for m in sorted(acf.coeffs))


def l4_quadrature_oracle(f: TrigPolynomial) -> float:
    """Mean of |f|^4 over Q = 2*(2*D) + 3 equally spaced points, D the
    frequency spread of f.

    |f|^4 is a trigonometric polynomial of bandwidth 2D, so the rule is exact
    up to floating error.  Independent of the autocorrelation route: the values
    come from pointwise samples of f.  Frequencies are translated by the
    minimum (which leaves |f| unchanged) and reduced mod Q exactly, so huge
    frequencies lose no precision.
    """
    if not f.terms:
        raise ValueError("quadrature oracle of the empty polynomial")
    support = f.support()
    base = support[0]
    spread = support[-1] - base
    q = 2 * (2 * spread) + 3
    if q > _QUADRATURE_POINT_LIMIT:
        raise ValueError(f"frequency spread {spread} needs {q} quadrature points; too wide")
    buf = np.zeros(q, dtype=np.complex128)
    for n in support:
        buf[(n - base) % q] += f.terms[n]
    samples = np.fft.ifft(buf)
    samples *= q
    mag2 = samples.real**2 + samples.imag**2
    return float(np.mean(mag2 * mag2))


def max_positive_representation(freqs: Iterable[int]) -> int:
    """max over m > 0 of r(m); zero for a singleton set."""
    a = frequency_set(freqs)
    if len(a) == 1:
        return 0
    if _int64_ok(a):
        arr = np.array(a, dtype=np.int64)
        i, j = np.triu_indices(len(a), k=1)
        diffs = arr[j] - arr[i]
        diffs.sort()
        change = np.flatnonzero(diffs[1:] != diffs[:-1])
        starts = np.concatenate(([0], change + 1, [diffs.size]))
        return int(np.diff(starts).max())
    pos: dict[int, int] = {}
    for i, x in enumerate(a):
        for y in a[i + 1 :]:
            m = y - x
            pos[m] = pos.get(m, 0) + 1
    return max(pos.values())


def rudin_certificate(f: TrigPolynomial) -> RudinCertificate:
    """Certify ||f||_4^4 <= (1 + max_{m>0} r(m)) * ||f||_2^4 on supp(f).

    This is a theorem for every polynomial, so holds=False signals a bug, not
    a discovery.
    """
    if not f.terms:
        raise ValueError("certificate of the empty polynomial")
    max_r = max_positive_representation(f.support())
    lhs = l4_norm_4(f)
    l2sq = l2_norm_sq(f)
    rhs = (1 + max_r) * l2sq * l2sq
    return RudinCertificate(lhs=lhs, rhs=rhs, max_r=max_r, holds=lhs <= rhs * (1 + RUDIN_REL_TOL))
