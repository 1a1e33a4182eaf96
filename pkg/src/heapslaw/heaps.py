"""Empirical Heaps functions, anomalies, and per-tag excesses.

The Heaps function v(n) counts distinct vocabulary types among the
first n tokens; its per-tag split counts types by their owning class,
so the three per-tag curves sum to v(n) pointwise. Comparing v(n)
against the shuffled-ensemble curves gives the absolute anomaly
``delta(n) = v(n) - mean(n)`` and the relative anomaly
``delta(n) / sd(n)`` (undefined wherever the ensemble sd is zero,
which always includes both ends of the text).

The Heaps excess of a tag measures how far its distinct-word count runs
ahead of or behind its vocabulary-proportional share:

    E_tag(n) = v_tag(n) - (V_tag / V) * v(n)

The three excesses cancel pointwise by construction. Equivalently,
E_tag equals the tag's own anomaly minus its share of the total
anomaly, which is verified internally when an ensemble curve is handed
in.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import GridMismatch, NumericsError
from .rarefaction import EnsembleCurve, SampleGrid
from .tags import COUNTED_CLASSES, TagClass
from .text import TextRecord

_EXCESS_IDENTITY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class HeapsCurve:
    """v(n) for n = 1..N plus the per-tag distinct-type counts."""

    values: np.ndarray
    per_tag: dict[TagClass, np.ndarray]

    @property
    def N(self) -> int:
        return len(self.values)

    @property
    def V(self) -> int:
        return int(self.values[-1])


@dataclass(frozen=True)
class SummaryStats:
    """Along-text summary of one curve sampled on a grid."""

    mean: float
    sd: float
    max: float
    argmax: int
    min: float
    argmin: int


@dataclass(frozen=True, eq=False)
class AnomalyReport:
    """Absolute and relative Heaps anomalies on an evaluation grid.

    ``rel_delta`` is NaN exactly where the ensemble sd is zero; the
    relative summary statistics average over the defined points only
    (their count is ``n_rel_defined``).
    """

    grid: SampleGrid
    delta: np.ndarray
    rel_delta: np.ndarray
    mean_rel: float
    sd_rel: float
    n_rel_defined: int
    mean_abs: float
    sd_abs: float
    max_abs: float
    argmax_abs: int
    min_abs: float
    argmin_abs: int


@dataclass(frozen=True, eq=False)
class ExcessReport:
    """Per-tag Heaps excess curves and their along-text summaries."""

    grid: SampleGrid
    curves: dict[TagClass, np.ndarray]
    stats: dict[TagClass, SummaryStats]


def empirical_heaps(text: TextRecord) -> HeapsCurve:
    """Single-pass distinct-type counts, overall and per owning tag."""
    ids = text.token_type_ids
    N = text.N
    # reversed scatter: the last write per type id is its first position
    first_idx = np.empty(text.V, dtype=np.int64)
    first_idx[ids[::-1]] = np.arange(N - 1, -1, -1, dtype=np.int64)
    first = np.zeros(N, dtype=bool)
    first[first_idx] = True
    values = np.cumsum(first, dtype=np.int64)

    token_owner_codes = text.type_tag_codes[ids]
    per_tag: dict[TagClass, np.ndarray] = {}
    for code, cls in enumerate(COUNTED_CLASSES):
        per_tag[cls] = np.cumsum(first & (token_owner_codes == code), dtype=np.int64)
    return HeapsCurve(values=values, per_tag=per_tag)


def _summary(values: np.ndarray, grid: SampleGrid) -> SummaryStats:
    i_max = int(np.argmax(values))
    i_min = int(np.argmin(values))
    return SummaryStats(
        mean=float(np.mean(values)),
        sd=float(np.std(values)),
        max=float(values[i_max]),
        argmax=grid.points[i_max],
        min=float(values[i_min]),
        argmin=grid.points[i_min],
    )


def anomaly(text: TextRecord, ensemble: EnsembleCurve) -> AnomalyReport:
    """Heaps anomalies of a text against its shuffled ensemble.

    The ensemble must have been computed from this text's spectrum on a
    grid ending at its N (checked; :class:`GridMismatch` otherwise).
    Extrema are exact on a full grid and grid-extrema otherwise.
    """
    grid = ensemble.grid
    if grid.N != text.N:
        raise GridMismatch(
            f"ensemble grid ends at {grid.N}, text has N={text.N}"
        )
    if abs(float(ensemble.mean[-1]) - text.V) > 1e-6:
        raise GridMismatch(
            f"ensemble mean ends at {ensemble.mean[-1]!r}, text has V={text.V}"
        )

    v = empirical_heaps(text).values
    idx = np.asarray(grid.points, dtype=np.int64) - 1
    delta = v[idx] - ensemble.mean

    sd = ensemble.sd
    defined = sd > 0.0
    rel = np.full(len(grid), np.nan)
    np.divide(delta, sd, out=rel, where=defined)
    n_def = int(np.count_nonzero(defined))
    if n_def:
        mean_rel = float(np.mean(rel[defined]))
        sd_rel = float(np.std(rel[defined]))
    else:
        mean_rel = float("nan")
        sd_rel = float("nan")

    abs_stats = _summary(delta, grid)
    return AnomalyReport(
        grid=grid,
        delta=delta,
        rel_delta=rel,
        mean_rel=mean_rel,
        sd_rel=sd_rel,
        n_rel_defined=n_def,
        mean_abs=abs_stats.mean,
        sd_abs=abs_stats.sd,
        max_abs=abs_stats.max,
        argmax_abs=abs_stats.argmax,
        min_abs=abs_stats.min,
        argmin_abs=abs_stats.argmin,
    )


def excess(
    text: TextRecord,
    curve: HeapsCurve,
    grid: SampleGrid | None = None,
    ensemble: EnsembleCurve | None = None,
) -> ExcessReport:
    """Per-tag Heaps excesses E_tag on a grid (full text by default).

    When an ensemble curve is supplied, the identity relating the
    excess to the per-tag and total anomalies is checked pointwise to
    1e-9 as an internal consistency guard.
    """
    if curve.N != text.N or curve.V != text.V:
        raise GridMismatch("curve does not belong to this text")
    if grid is None:
        grid = SampleGrid.full(text.N)
    elif grid.N != text.N:
        raise GridMismatch(f"grid ends at {grid.N}, text has N={text.N}")

    idx = np.asarray(grid.points, dtype=np.int64) - 1
    v = curve.values[idx].astype(np.float64)
    V = float(text.V)

    curves: dict[TagClass, np.ndarray] = {}
    stats: dict[TagClass, SummaryStats] = {}
    for cls in COUNTED_CLASSES:
        share = text.v_tag[cls] / V
        e = curve.per_tag[cls][idx] - share * v
        curves[cls] = e
        stats[cls] = _summary(e, grid)

    if ensemble is not None:
        if ensemble.grid.points != grid.points:
            raise GridMismatch("ensemble grid differs from excess grid")
        delta = v - ensemble.mean
        for cls in COUNTED_CLASSES:
            share = text.v_tag[cls] / V
            delta_tag = curve.per_tag[cls][idx] - share * ensemble.mean
            gap = np.abs(curves[cls] - (delta_tag - share * delta))
            worst = float(gap.max())
            if worst > _EXCESS_IDENTITY_TOL:
                raise NumericsError(
                    f"excess/anomaly identity off by {worst:.3e} for {cls.value}"
                )

    return ExcessReport(grid=grid, curves=curves, stats=stats)


def write_text_curves_csv(
    path: str | Path,
    curve: HeapsCurve,
    ensemble: EnsembleCurve,
    anomaly_report: AnomalyReport,
    excess_report: ExcessReport,
) -> None:
    """Plot-ready per-text CSV: empirical, ensemble, anomaly, excess."""
    grid = ensemble.grid
    idx = np.asarray(grid.points, dtype=np.int64) - 1
    v = curve.values[idx]
    sd = ensemble.sd
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["n", "v", "v_bar", "sigma_v", "delta", "rel_delta",
             "e_noun", "e_verb", "e_other"]
        )
        e = excess_report.curves
        for g, n in enumerate(grid.points):
            rel = anomaly_report.rel_delta[g]
            writer.writerow(
                [
                    n,
                    int(v[g]),
                    repr(float(ensemble.mean[g])),
                    repr(float(sd[g])),
                    repr(float(anomaly_report.delta[g])),
                    "" if np.isnan(rel) else repr(float(rel)),
                    repr(float(e[TagClass.NOUN][g])),
                    repr(float(e[TagClass.VERB][g])),
                    repr(float(e[TagClass.OTHER][g])),
                ]
            )
