"""Least-squares fits with configurable axis transforms.

Three transforms cover every regression in the analysis: ``loglog``
(power law, slope = exponent), ``linlin`` (plain line), and ``linlog``
(y linear in ln x). Fits are unweighted ordinary least squares; the
quoted slope/intercept errors are the standard OLS standard errors and
Pearson's r is computed on the transformed coordinates.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy import stats

from .errors import DegenerateInput, DomainError

TRANSFORMS = ("loglog", "linlin", "linlog")


@dataclass(frozen=True)
class FitResult:
    """Slope/intercept (with standard errors) on transformed axes."""

    slope: float
    slope_err: float
    intercept: float
    intercept_err: float
    pearson_r: float
    transform: str
    n_points: int

    def as_dict(self) -> dict:
        return {
            "slope": self.slope,
            "slope_err": self.slope_err,
            "intercept": self.intercept,
            "intercept_err": self.intercept_err,
            "pearson_r": self.pearson_r,
            "transform": self.transform,
            "n_points": self.n_points,
        }


@dataclass(frozen=True)
class RatioFit:
    """Least-squares proportionality constant for y = ratio * x."""

    ratio: float
    ratio_err: float
    n_points: int

    def as_dict(self) -> dict:
        return {
            "ratio": self.ratio,
            "ratio_err": self.ratio_err,
            "n_points": self.n_points,
        }


def _split_points(points: Iterable[Sequence[float]]) -> tuple[np.ndarray, np.ndarray]:
    rows = list(points)
    if not rows:
        raise DegenerateInput("need at least 2 points, got 0")
    arr = np.asarray(rows, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DomainError("points must be (x, y) pairs")
    return arr[:, 0], arr[:, 1]


def transform_xy(
    x: np.ndarray, y: np.ndarray, transform: str
) -> tuple[np.ndarray, np.ndarray]:
    """Apply the axis transform, validating log domains."""
    if transform not in TRANSFORMS:
        raise DomainError(f"unknown transform {transform!r}")
    if transform in ("loglog", "linlog"):
        if np.any(x <= 0):
            raise DomainError("x must be positive under a log transform")
        x = np.log(x)
    if transform == "loglog":
        if np.any(y <= 0):
            raise DomainError("y must be positive under a log transform")
        y = np.log(y)
    return x, y


def fit(points: Iterable[Sequence[float]], transform: str = "linlin") -> FitResult:
    """Ordinary least squares on transformed axes.

    Needs at least two points with nonzero x-variance after the
    transform (:class:`DegenerateInput` otherwise). With exactly two
    points the interpolation is exact: the standard errors are zero and
    r is +-1 by convention.
    """
    x_raw, y_raw = _split_points(points)
    if len(x_raw) < 2:
        raise DegenerateInput(f"need at least 2 points, got {len(x_raw)}")
    x, y = transform_xy(x_raw, y_raw, transform)
    if float(np.ptp(x)) == 0.0:
        raise DegenerateInput("zero variance in x after transform")

    res = stats.linregress(x, y)
    slope_err = float(res.stderr)
    intercept_err = float(res.intercept_stderr)
    r = float(res.rvalue)
    if len(x) == 2:
        slope_err = 0.0
        intercept_err = 0.0
        r = math.copysign(1.0, res.slope) if res.slope != 0.0 else 0.0
    return FitResult(
        slope=float(res.slope),
        slope_err=slope_err,
        intercept=float(res.intercept),
        intercept_err=intercept_err,
        pearson_r=r,
        transform=transform,
        n_points=len(x),
    )


def proportionality_fit(points: Iterable[Sequence[float]]) -> RatioFit:
    """Least-squares slope of a line through the origin.

    The error is the usual through-origin standard error, from the
    residual variance on n - 1 degrees of freedom.
    """
    x, y = _split_points(points)
    if len(x) < 2:
        raise DegenerateInput(f"need at least 2 points, got {len(x)}")
    sxx = float(x @ x)
    if sxx == 0.0:
        raise DegenerateInput("all x are zero")
    ratio = float(x @ y) / sxx
    resid = y - ratio * x
    s2 = float(resid @ resid) / (len(x) - 1)
    return RatioFit(
        ratio=ratio,
        ratio_err=math.sqrt(s2 / sxx),
        n_points=len(x),
    )


def power_law_consistency(alpha: float, beta: float, h: float) -> float:
    """Diagnostic ratio beta / alpha**h (1.0 means perfectly consistent)."""
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    return beta / alpha**h


def write_fit_csv(
    path: str | Path,
    points: Iterable[Sequence[float]],
    result: FitResult,
) -> None:
    """Per-point CSV companion to a fit: raw coordinates, transformed
    coordinates, and the residual on the transformed axes."""
    x, y = _split_points(points)
    tx, ty = transform_xy(x, y, result.transform)
    resid = ty - (result.slope * tx + result.intercept)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x", "y", "transformed_x", "transformed_y", "residual"])
        for row in zip(x, y, tx, ty, resid):
            writer.writerow([repr(float(v)) for v in row])
