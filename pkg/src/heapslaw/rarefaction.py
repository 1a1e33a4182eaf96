"""Exact mean and variance of vocabulary growth over all shufflings.

For a text of ``N`` tokens whose types have occurrence counts
``m_1..m_V``, the number of distinct types ``v(n)`` seen in the first
``n`` tokens of a uniformly random ordering is the classic rarefaction
statistic (sampling ``n`` items without replacement from a finite
multiset). Everything here is driven by the survival probability

    B_N(m, n) = C(N-m, n) / C(N, n)

i.e. the probability that a type occurring ``m`` times is entirely
absent from a sample of size ``n`` (with binomial coefficients treated
as zero when the lower index exceeds the upper). Then

    mean(n)     = sum_types (1 - B(m_r, n))
    variance(n) = sum_r B(m_r,n)(1 - B(m_r,n))
                  + 2 sum_{r>s} [B(m_r+m_s,n) - B(m_r,n) B(m_s,n)]

Both are evaluated in spectrum-collapsed form (grouping types by their
multiplicity), which turns the O(V^2) pair sum into sums over distinct
multiplicities and distinct pairwise multiplicity sums.

Numerics: B is never computed through log-gamma differences here, which
lose too much absolute precision at corpus scale. Instead single-step
recurrences in either index give products of factors <= 1:

    B(k+1, n) = B(k, n) * (N-n-k) / (N-k)        (k-recurrence)
    B(m, n+1) = B(m, n) * (N-m-n) / (N-n)        (n-recurrence)

and the complement D = 1 - B is accumulated additively alongside
(``D(k+1,n) = D(k,n) + B(k,n) * n/(N-k)``), avoiding cancellation where
B is close to one. The variance combines the two representations so
that the heavy cancellations always happen between small quantities:
the endpoint identities variance(1) = variance(N) = 0 then hold to well
below the 1e-9 clamp window even for N in the hundreds of thousands.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DomainError, NumericsError
from .text import MultiplicitySpectrum

#: Negative variance beyond this is a bug, not rounding; see variance_curve.
NEGATIVE_VARIANCE_FLOOR = -1e-9


@dataclass(frozen=True)
class SampleGrid:
    """Strictly increasing evaluation points n in [1, N], always
    containing both 1 and N."""

    points: tuple[int, ...]
    mode: str  # "full", "count:K", or "explicit"

    def __post_init__(self) -> None:
        pts = self.points
        if not pts or pts[0] < 1:
            raise DomainError("grid points must start at n >= 1")
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise DomainError("grid points must be strictly increasing")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def N(self) -> int:
        return self.points[-1]

    @property
    def is_full(self) -> bool:
        return self.mode == "full"

    @classmethod
    def full(cls, N: int) -> "SampleGrid":
        if N < 1:
            raise DomainError("N must be >= 1")
        return cls(points=tuple(range(1, N + 1)), mode="full")

    @classmethod
    def count(cls, N: int, k: int) -> "SampleGrid":
        """About ``k`` points uniformly spaced in n, endpoints included."""
        if N < 1 or k < 2:
            raise DomainError("need N >= 1 and k >= 2")
        if k >= N:
            return cls.full(N)
        pts = np.unique(np.round(np.linspace(1, N, k)).astype(np.int64))
        return cls(points=tuple(int(p) for p in pts), mode=f"count:{k}")

    @classmethod
    def explicit(cls, N: int, points: Sequence[int]) -> "SampleGrid":
        """An explicit point set; 1 and N are added if absent."""
        if N < 1:
            raise DomainError("N must be >= 1")
        pts = sorted(set(int(p) for p in points) | {1, N})
        if pts[0] < 1 or pts[-1] > N:
            raise DomainError("explicit grid points must lie in [1, N]")
        return cls(points=tuple(pts), mode="explicit")


@dataclass(frozen=True, eq=False)
class EnsembleCurve:
    """Shuffled-ensemble mean and variance of v(n) on a grid."""

    grid: SampleGrid
    mean: np.ndarray
    variance: np.ndarray

    def __post_init__(self) -> None:
        if len(self.mean) != len(self.grid) or len(self.variance) != len(self.grid):
            raise DomainError("curve arrays must match the grid length")

    @property
    def sd(self) -> np.ndarray:
        return np.sqrt(self.variance)


def binomial_tail_ratio(N: int, m: int, n: int) -> float:
    """Survival probability B_N(m, n) = C(N-m, n) / C(N, n).

    Exactly zero when n > N - m. Evaluated as a product over
    min(m, n) factors (the ratio is symmetric in m and n), each < 1, so
    the absolute error stays below 1e-12 for any N up to 1e6.
    """
    if not (1 <= m <= N) or not (0 <= n <= N):
        raise DomainError(f"need 1 <= m <= N and 0 <= n <= N, got N={N} m={m} n={n}")
    if n == 0:
        return 1.0
    if n > N - m:
        return 0.0
    small, large = (m, n) if m <= n else (n, m)
    prod = 1.0
    for j in range(small):
        prod *= (N - large - j) / (N - j)
        if prod == 0.0:
            break
    return prod


def _survival_rows(N: int, n: int, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    """B(k, n) and D(k, n) = 1 - B(k, n) for k = 0..kmax at one n.

    Beyond k = N - n the exact values 0 and 1 are filled in directly,
    which keeps the top end of the curve identities exact.
    """
    L = min(kmax, N - n)
    B = np.empty(kmax + 1)
    D = np.empty(kmax + 1)
    B[0] = 1.0
    D[0] = 0.0
    if L > 0:
        j = np.arange(L, dtype=np.float64)
        den = N - j
        np.cumprod((N - n - j) / den, out=B[1 : L + 1])
        np.cumsum(B[:L] * (n / den), out=D[1 : L + 1])
    B[L + 1 :] = 0.0
    D[L + 1 :] = 1.0
    return B, D


def _check_grid(spec: MultiplicitySpectrum, grid: SampleGrid) -> None:
    if grid.points[0] < 1 or grid.points[-1] > spec.N:
        raise DomainError(
            f"grid range [{grid.points[0]}, {grid.points[-1]}] outside [1, {spec.N}]"
        )


def mean_curve(spec: MultiplicitySpectrum, grid: SampleGrid) -> np.ndarray:
    """Ensemble-average vocabulary size at each grid point.

    Per point this is O(m_max) through the k-recurrence; on the full
    grid an n-recurrence per distinct multiplicity is used instead,
    which is O(N * M) with M distinct multiplicities.
    """
    _check_grid(spec, grid)
    m_vals = spec.multiplicities
    counts = spec.counts.astype(np.float64)
    N = spec.N
    m_max = int(m_vals[-1])

    if len(grid) * m_max > N * len(m_vals):
        # n-recurrence: one row per distinct multiplicity, all n at once.
        j = np.arange(N, dtype=np.float64)
        den = N - j
        vbar_full = np.zeros(N)
        for m_i, c_i in zip(m_vals, counts):
            row = np.cumprod((den - m_i) / den)  # B(m_i, n), n = 1..N
            vbar_full += c_i * (1.0 - row)
        idx = np.asarray(grid.points, dtype=np.int64) - 1
        return vbar_full[idx]

    out = np.empty(len(grid))
    for g, n in enumerate(grid.points):
        _, D = _survival_rows(N, n, m_max)
        out[g] = counts @ D[m_vals]
    return out


def _pair_weights(spec: MultiplicitySpectrum) -> np.ndarray:
    """Aggregated pair weights W indexed by the multiplicity sum k.

    W[k] counts the unordered type pairs whose multiplicities add to k:
    c_i * c_j for distinct values, c_i (c_i - 1) / 2 within one value.
    Sum of all W equals V (V - 1) / 2.
    """
    m = spec.multiplicities
    c = spec.counts.astype(np.float64)
    iu = np.triu_indices(len(m), k=1)
    cross_sums = (m[:, None] + m[None, :])[iu]
    cross_w = (c[:, None] * c[None, :])[iu]
    W = np.bincount(cross_sums, weights=cross_w, minlength=2 * int(m[-1]) + 1)
    np.add.at(W, 2 * m, c * (c - 1) / 2.0)
    return W


def variance_curve(spec: MultiplicitySpectrum, grid: SampleGrid) -> np.ndarray:
    """Ensemble variance of the vocabulary size at each grid point.

    The pair sum runs over distinct multiplicity pairs with the
    aggregated weights from :func:`_pair_weights`; per grid point the
    cost is O(2 * m_max). Depending on whether the mean seen-fraction
    is below or above one half, the sum is assembled from the
    complement (D) or survival (B) representation, keeping cancellation
    between small terms. Results in [-1e-9, 0) clamp to zero; anything
    more negative raises :class:`NumericsError`.
    """
    _check_grid(spec, grid)
    m_vals = spec.multiplicities
    counts = spec.counts.astype(np.float64)
    N = spec.N
    V = float(spec.V)
    W = _pair_weights(spec)
    kmax = len(W) - 1

    out = np.empty(len(grid))
    for g, n in enumerate(grid.points):
        B, D = _survival_rows(N, n, kmax)
        Bi = B[m_vals]
        Di = D[m_vals]
        diag = counts @ (Bi * Di)
        S1D = counts @ Di
        S1B = counts @ Bi
        if S1D <= S1B:
            S2D = counts @ (Di * Di)
            pair = 2.0 * (V - 1.0) * S1D - 2.0 * (W @ D) - S1D * S1D + S2D
        else:
            S2B = counts @ (Bi * Bi)
            pair = 2.0 * (W @ B) - S1B * S1B + S2B
        out[g] = diag + pair

    bad = out < NEGATIVE_VARIANCE_FLOOR
    if np.any(bad):
        worst = float(out[bad].min())
        raise NumericsError(
            f"variance {worst:.3e} below {NEGATIVE_VARIANCE_FLOOR:.0e} floor"
        )
    np.clip(out, 0.0, None, out=out)
    return out


def ensemble_curve(spec: MultiplicitySpectrum, grid: SampleGrid) -> EnsembleCurve:
    """Mean and variance curves bundled on a common grid."""
    return EnsembleCurve(
        grid=grid,
        mean=mean_curve(spec, grid),
        variance=variance_curve(spec, grid),
    )


def write_curve_csv(
    path: str | Path,
    grid: SampleGrid,
    mean: np.ndarray,
    variance: np.ndarray,
) -> None:
    """CSV serialization with columns n, mean, variance."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "mean", "variance"])
        for n, mu, var in zip(grid.points, mean, variance):
            writer.writerow([n, repr(float(mu)), repr(float(var))])


def read_curve_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read back the (n, mean, variance) CSV written by write_curve_csv."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["n", "mean", "variance"]:
            raise DomainError(f"unexpected curve CSV header: {header}")
        rows = [(int(a), float(b), float(c)) for a, b, c in reader]
    n = np.array([r[0] for r in rows], dtype=np.int64)
    mean = np.array([r[1] for r in rows])
    var = np.array([r[2] for r in rows])
    return n, mean, var
