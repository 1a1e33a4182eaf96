"""Ground-truth shuffling oracles for the closed-form ensemble curves.

Two independent routes to the same quantities as the analytic module:
exhaustive enumeration of all distinct orderings (exact, tiny inputs
only) and seeded Monte Carlo shuffling (statistical, realistic sizes).
Both exist to validate the closed forms and deliberately share no code
with them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, TooLarge
from .rarefaction import SampleGrid
from .text import MultiplicitySpectrum, TextRecord

# Enumeration budget: N <= 12 by contract, and the arrangement count is
# additionally capped since e.g. 12 distinct tokens give 12! ~ 4.8e8
# orderings, far past what "exhaustive" can mean in finite time.
MAX_EXHAUSTIVE_N = 12
MAX_ARRANGEMENTS = 5_000_000

#: PRNG used for Monte Carlo shuffling, pinned for reproducible outputs.
GENERATOR_NAME = "PCG64"


@dataclass(frozen=True, eq=False)
class OracleCurves:
    """Mean/variance of v(n) estimated by an oracle.

    ``n_samples`` is the Monte Carlo sample count, or ``math.inf`` for
    the exhaustive oracle.
    """

    grid: SampleGrid
    mean: np.ndarray
    variance: np.ndarray
    n_samples: float

    @property
    def exhaustive(self) -> bool:
        return math.isinf(self.n_samples)


def _arrangement_count(spec: MultiplicitySpectrum) -> int:
    count = math.factorial(spec.N)
    for m, c in spec.entries:
        count //= math.factorial(m) ** c
    return count


def exhaustive_oracle(spec: MultiplicitySpectrum) -> OracleCurves:
    """Exact ensemble mean/variance by enumerating distinct orderings.

    Each distinct arrangement of the multiset is visited exactly once;
    they are equiprobable under uniform shuffling, so plain averages
    over the enumeration are exact. All accumulation is integer
    arithmetic; the only rounding is the final division.
    """
    from sympy.utilities.iterables import multiset_permutations

    N = spec.N
    if N > MAX_EXHAUSTIVE_N:
        raise TooLarge(f"N={N} exceeds exhaustive limit {MAX_EXHAUSTIVE_N}")
    n_arr = _arrangement_count(spec)
    if n_arr > MAX_ARRANGEMENTS:
        raise TooLarge(f"{n_arr} arrangements exceed limit {MAX_ARRANGEMENTS}")

    tokens: list[int] = []
    tid = 0
    for m, c in spec.entries:
        for _ in range(c):
            tokens.extend([tid] * m)
            tid += 1

    sum_v = [0] * N
    sum_v2 = [0] * N
    count = 0
    for arrangement in multiset_permutations(tokens):
        seen: set[int] = set()
        add = seen.add
        v = 0
        for pos, t in enumerate(arrangement):
            if t not in seen:
                add(t)
                v += 1
            sum_v[pos] += v
            sum_v2[pos] += v * v
        count += 1
    assert count == n_arr

    mean = np.array([a / count for a in sum_v])
    variance = np.array(
        [(q * count - a * a) / (count * count) for a, q in zip(sum_v, sum_v2)]
    )
    return OracleCurves(
        grid=SampleGrid.full(N), mean=mean, variance=variance, n_samples=math.inf
    )


def _sample_rng(seed: int, index: int) -> np.random.Generator:
    """Deterministic per-sample stream, split from (seed, index)."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
    )


def monte_carlo_oracle(
    text: TextRecord,
    samples: int,
    seed: int,
    grid: SampleGrid | None = None,
) -> OracleCurves:
    """Ensemble curves estimated from seeded uniform shuffles.

    Each sample draws a uniform random permutation (an unbiased shuffle
    from a per-sample stream split off the master seed, so runs with
    the same seed are identical and samples are order-independent).
    Returns the sample mean and the unbiased (n-1) sample variance per
    grid point.
    """
    if samples < 2:
        raise DomainError("need at least 2 samples")
    N = text.N
    if grid is None:
        grid = SampleGrid.full(N)
    elif grid.N != N:
        raise DomainError(f"grid ends at {grid.N}, text has N={N}")

    # Token positions sorted by type id; block starts give, per type,
    # a contiguous slice whose minimum assigned position is the type's
    # first occurrence in the shuffled order.
    order = np.argsort(text.token_type_ids, kind="stable")
    counts = text.type_counts
    starts = np.zeros(len(counts), dtype=np.int64)
    np.cumsum(counts[:-1], out=starts[1:])

    grid_pts = np.asarray(grid.points, dtype=np.int64)
    K = len(grid_pts)
    acc = np.zeros(K)
    acc2 = np.zeros(K)
    for i in range(samples):
        rng = _sample_rng(seed, i)
        positions = rng.permutation(N)[order]
        first_pos = np.minimum.reduceat(positions, starts)
        # v at grid point g = number of first positions < grid[g]
        bins = np.searchsorted(grid_pts, first_pos + 1, side="left")
        v = np.cumsum(np.bincount(bins, minlength=K + 1)[:K], dtype=np.int64)
        acc += v
        acc2 += v.astype(np.float64) ** 2

    mean = acc / samples
    variance = (acc2 - samples * mean**2) / (samples - 1)
    np.clip(variance, 0.0, None, out=variance)
    return OracleCurves(grid=grid, mean=mean, variance=variance, n_samples=samples)
