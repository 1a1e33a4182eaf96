"""Per-work and corpus-level analysis drivers with persistent outputs.

A work analysis reads one interchange file and emits a JSON summary
plus a plot-ready curves CSV. A corpus analysis folds the per-work
summaries into the cross-corpus regressions (overall and per-tag Heaps
exponents, per-tag token/vocabulary fractions, anomaly-vs-vocabulary
trends, excess trends).

All outputs are deterministic functions of (inputs, options, seed):
keys are sorted, floats serialize via repr, and nothing wall-clock
dependent is recorded.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .errors import DegenerateInput, DomainError, HeapslawError, ManifestError
from .fitting import fit, power_law_consistency, proportionality_fit
from .heaps import anomaly, empirical_heaps, excess, write_text_curves_csv
from .rarefaction import SampleGrid, ensemble_curve
from .tags import COUNTED_CLASSES, TagMap, default_tag_map, read_tag_map
from .text import build_text, read_interchange, spectrum

#: Vocabulary threshold above which per-tag vocabulary fractions are fit.
LARGE_VOCABULARY_MIN_V = 4000

_ASSUMPTION_NOTES = {
    "rel_anomaly_average": (
        "relative-anomaly summaries average over grid points where the "
        "ensemble sd is positive; the divisor is the count of those points"
    ),
    "slope_errors": "quoted fit errors are OLS standard errors",
}


@dataclass(frozen=True)
class AnalysisOptions:
    """Knobs shared by the analyze and corpus drivers."""

    tag_map: TagMap = field(default_factory=default_tag_map)
    normalize: str = "lower"
    grid_spec: str = "count:1000"
    seed: int = 0

    def describe(self) -> dict:
        return {
            "tool": f"heapslaw {__version__}",
            "tag_map": self.tag_map.name,
            "normalize": self.normalize,
            "grid": self.grid_spec,
            "seed": self.seed,
            "assumptions": _ASSUMPTION_NOTES,
        }


@dataclass(frozen=True)
class CorpusManifest:
    """Work list plus corpus-level options."""

    entries: tuple[tuple[str, Path, str], ...]  # (id, path, title)
    options: AnalysisOptions

    def __post_init__(self) -> None:
        ids = [e[0] for e in self.entries]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ManifestError(f"duplicate work ids: {dupes}")
        for work_id, path, _ in self.entries:
            if not path.is_file():
                raise ManifestError(f"work {work_id!r}: no such file {path}")


#: Above this length, "auto" grids fall back from full resolution to
#: sampling (full-grid variance is quadratic in the multiplicity range).
AUTO_FULL_GRID_MAX_N = 100_000


def make_grid(N: int, grid_spec: str) -> SampleGrid:
    """Parse a ``full`` / ``count:K`` / ``auto`` grid spec for a text
    of length N; ``auto`` is full resolution up to
    ``AUTO_FULL_GRID_MAX_N`` tokens and count:1000 beyond."""
    if grid_spec == "full":
        return SampleGrid.full(N)
    if grid_spec == "auto":
        if N <= AUTO_FULL_GRID_MAX_N:
            return SampleGrid.full(N)
        return SampleGrid.count(N, 1000)
    if grid_spec.startswith("count:"):
        try:
            k = int(grid_spec.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad grid spec {grid_spec!r}") from None
        return SampleGrid.count(N, k)
    raise DomainError(
        f"bad grid spec {grid_spec!r} (use 'full', 'count:K', or 'auto')"
    )


def read_manifest(path: str | Path, options: AnalysisOptions) -> CorpusManifest:
    """Read a flat ``id<TAB>path<TAB>title`` manifest.

    Relative work paths resolve against the manifest's directory.
    """
    path = Path(path)
    base = path.parent
    entries: list[tuple[str, Path, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ManifestError(
                    f"line {lineno}: expected 'id<TAB>path<TAB>title', got {line!r}"
                )
            work_id, rel, title = (p.strip() for p in parts)
            if not work_id or not rel:
                raise ManifestError(f"line {lineno}: empty id or path")
            work_path = Path(rel)
            if not work_path.is_absolute():
                work_path = base / work_path
            entries.append((work_id, work_path, title))
    return CorpusManifest(entries=tuple(entries), options=options)


def analyze_work(
    path: str | Path,
    options: AnalysisOptions,
    work_id: str | None = None,
    out_dir: str | Path | None = None,
) -> dict:
    """Full single-work pipeline; returns the JSON-ready report.

    When ``out_dir`` is given, writes ``<id>.json`` and
    ``<id>_curves.csv`` there.
    """
    path = Path(path)
    if work_id is None:
        work_id = path.stem
    pairs = read_interchange(path)
    text = build_text(pairs, options.tag_map, options.normalize, text_id=work_id)
    spec = spectrum(text)
    grid = make_grid(text.N, options.grid_spec)
    ens = ensemble_curve(spec, grid)
    curve = empirical_heaps(text)
    anom = anomaly(text, ens)
    exc = excess(text, curve, grid=grid, ensemble=ens)

    report = {
        "id": work_id,
        "n_tokens": text.N,
        "v_types": text.V,
        "n_tag": {cls.value: text.n_tag[cls] for cls in COUNTED_CLASSES},
        "v_tag": {cls.value: text.v_tag[cls] for cls in COUNTED_CLASSES},
        "grid": {"mode": grid.mode, "points": len(grid)},
        "grid_statistics": not grid.is_full,
        "anomaly": {
            "mean_rel": _none_if_nan(anom.mean_rel),
            "sd_rel": _none_if_nan(anom.sd_rel),
            "n_rel_defined": anom.n_rel_defined,
            "mean_abs": anom.mean_abs,
            "sd_abs": anom.sd_abs,
            "max_abs": anom.max_abs,
            "argmax_abs": anom.argmax_abs,
            "min_abs": anom.min_abs,
            "argmin_abs": anom.argmin_abs,
        },
        "excess": {
            cls.value: {
                "mean": st.mean,
                "sd": st.sd,
                "max": st.max,
                "argmax": st.argmax,
                "min": st.min,
                "argmin": st.argmin,
            }
            for cls, st in ((c, exc.stats[c]) for c in COUNTED_CLASSES)
        },
        "options": options.describe(),
    }

    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        _write_json(out_dir / f"{work_id}.json", report)
        write_text_curves_csv(out_dir / f"{work_id}_curves.csv", curve, ens, anom, exc)
    return report


def _fit_or_degenerate(kind: str, points: list, transform: str | None = None) -> dict:
    try:
        if kind == "ols":
            assert transform is not None
            return fit(points, transform).as_dict()
        return proportionality_fit(points).as_dict()
    except (DegenerateInput, DomainError) as err:
        return {"error": type(err).__name__, "message": str(err)}


def corpus_fits(rows: list[dict]) -> dict:
    """The cross-corpus regression battery over per-work report rows.

    Degenerate fits (too few usable points) are reported as such rather
    than raising, so a one-work corpus still produces a report.
    """
    n = [r["n_tokens"] for r in rows]
    v = [r["v_types"] for r in rows]
    fits: dict = {
        "heaps_exponent": _fit_or_degenerate("ols", list(zip(n, v)), "loglog"),
    }
    for cls in COUNTED_CLASSES:
        tag = cls.value
        n_tag = [r["n_tag"][tag] for r in rows]
        v_tag = [r["v_tag"][tag] for r in rows]
        fits[f"heaps_exponent_{tag}"] = _fit_or_degenerate(
            "ols", [p for p in zip(n_tag, v_tag) if p[0] > 0 and p[1] > 0], "loglog"
        )
        fits[f"token_fraction_{tag}"] = _fit_or_degenerate(
            "ratio", list(zip(n, n_tag))
        )
        big = [
            (r["v_types"], r["v_tag"][tag])
            for r in rows
            if r["v_types"] >= LARGE_VOCABULARY_MIN_V
        ]
        entry = _fit_or_degenerate("ratio", big)
        entry["filter"] = f"V >= {LARGE_VOCABULARY_MIN_V}"
        fits[f"vocab_fraction_{tag}"] = entry

    mean_rel = [
        (r["v_types"], r["anomaly"]["mean_rel"])
        for r in rows
        if r["anomaly"]["mean_rel"] is not None
    ]
    entry = _fit_or_degenerate("ols", mean_rel, "linlog")
    entry["note"] = "transform choice ambiguous; linlin exposed via the fit verb"
    fits["mean_rel_anomaly_vs_vocab"] = entry

    fits["sd_rel_anomaly_power"] = _fit_or_degenerate(
        "ols",
        [(r["v_types"], r["anomaly"]["sd_rel"]) for r in rows
         if r["anomaly"]["sd_rel"] is not None and r["anomaly"]["sd_rel"] > 0],
        "loglog",
    )
    fits["sd_abs_anomaly_power"] = _fit_or_degenerate(
        "ols",
        [(r["v_types"], r["anomaly"]["sd_abs"]) for r in rows
         if r["anomaly"]["sd_abs"] > 0],
        "loglog",
    )
    for stat in ("mean", "max"):
        fits[f"excess_other_{stat}_vs_log_vocab"] = _fit_or_degenerate(
            "ols",
            [
                (r["v_tag"]["other"], r["excess"]["other"][stat])
                for r in rows
                if r["v_tag"]["other"] > 0
            ],
            "linlog",
        )

    diagnostics = {}
    h = fits["heaps_exponent"].get("slope")
    if h is not None:
        for cls in (COUNTED_CLASSES[0], COUNTED_CLASSES[1]):  # noun, verb
            tag = cls.value
            alpha = fits[f"token_fraction_{tag}"].get("ratio")
            beta = fits[f"vocab_fraction_{tag}"].get("ratio")
            if alpha and beta:
                diagnostics[f"beta_vs_alpha_pow_h_{tag}"] = power_law_consistency(
                    alpha, beta, h
                )
    return {"fits": fits, "diagnostics": diagnostics}


def analyze_corpus(
    manifest: CorpusManifest,
    out_dir: str | Path | None = None,
    jobs: int = 1,
    row_format: str = "json",
) -> dict:
    """Analyze every manifest entry, then aggregate.

    Per-work failures do not abort the run: they are collected into the
    report's ``failures`` list and the aggregation runs over the works
    that succeeded. Aggregation order is manifest order regardless of
    the worker pool's scheduling.
    """
    options = manifest.options
    results: list[dict | None] = [None] * len(manifest.entries)
    failures: list[dict] = []

    if jobs > 1 and len(manifest.entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_entry, entry, options, out_dir)
                for entry in manifest.entries
            ]
            for i, fut in enumerate(futures):
                try:
                    results[i] = fut.result()
                except HeapslawError as err:
                    failures.append(_failure_record(manifest.entries[i][0], err))
    else:
        for i, entry in enumerate(manifest.entries):
            try:
                results[i] = _run_entry(entry, options, out_dir)
            except HeapslawError as err:
                failures.append(_failure_record(entry[0], err))

    rows = [r for r in results if r is not None]
    for row in rows:
        row.pop("options", None)

    titles = {e[0]: e[2] for e in manifest.entries}
    for row in rows:
        row["title"] = titles.get(row["id"], "")

    aggregate = corpus_fits(rows) if rows else {"fits": {}, "diagnostics": {}}
    report = {
        "works": rows,
        "failures": failures,
        "fits": aggregate["fits"],
        "diagnostics": aggregate["diagnostics"],
        "options": options.describe(),
    }
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        _write_json(out_dir / "corpus.json", report)
        if row_format == "csv":
            _write_rows_csv(out_dir / "corpus_rows.csv", rows)
    return report


def _run_entry(
    entry: tuple[str, Path, str],
    options: AnalysisOptions,
    out_dir: str | Path | None,
) -> dict:
    work_id, path, _ = entry
    return analyze_work(path, options, work_id=work_id, out_dir=out_dir)


def _none_if_nan(x: float) -> float | None:
    return None if math.isnan(x) else x


def _failure_record(work_id: str, err: Exception) -> dict:
    return {"id": work_id, "error": type(err).__name__, "message": str(err)}


def _write_json(path: Path, payload: dict) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    path.write_text(text + "\n", encoding="utf-8")


def _write_rows_csv(path: Path, rows: list[dict]) -> None:
    import csv as _csv

    cols = ["id", "title", "n_tokens", "v_types"]
    cols += [f"n_{c.value}" for c in COUNTED_CLASSES]
    cols += [f"v_{c.value}" for c in COUNTED_CLASSES]
    cols += ["mean_rel", "sd_rel", "mean_abs", "sd_abs", "max_abs", "min_abs"]
    cols += [f"e_{c.value}_{s}" for c in COUNTED_CLASSES for s in ("mean", "max", "min", "sd")]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = _csv.writer(fh, lineterminator="\n")
        writer.writerow(cols)
        for r in rows:
            rec = [r["id"], r["title"], r["n_tokens"], r["v_types"]]
            rec += [r["n_tag"][c.value] for c in COUNTED_CLASSES]
            rec += [r["v_tag"][c.value] for c in COUNTED_CLASSES]
            a = r["anomaly"]
            rec += [a["mean_rel"], a["sd_rel"], a["mean_abs"], a["sd_abs"],
                    a["max_abs"], a["min_abs"]]
            for c in COUNTED_CLASSES:
                e = r["excess"][c.value]
                rec += [e["mean"], e["max"], e["min"], e["sd"]]
            writer.writerow(rec)


def table1_heaps_fit(include_suspect: bool = False) -> dict:
    """The corpus-level Heaps fit over the embedded work-summary fixture."""
    from .table1 import load_works

    works = load_works(include_suspect=include_suspect)
    res = fit([(w.N, w.V) for w in works], "loglog")
    out = res.as_dict()
    out["n_works"] = len(works)
    out["suspect_included"] = include_suspect
    return out
