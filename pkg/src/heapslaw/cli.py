"""Command-line interface.

Verbs:
  analyze       one interchange file -> JSON report + curves CSV
  corpus        manifest of works -> per-work outputs + corpus report
  fit           regressions over CSV points or the embedded work table
  oracle-check  analytic curves vs shuffling oracles

Exit codes: 0 ok, 1 input error, 2 numerics error, 3 partial corpus
failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import HeapslawError, NumericsError
from .fitting import fit as fit_points
from .fitting import write_fit_csv
from .oracle import GENERATOR_NAME, exhaustive_oracle, monte_carlo_oracle
from .rarefaction import ensemble_curve, mean_curve, variance_curve
from .report import (
    AnalysisOptions,
    analyze_corpus,
    analyze_work,
    make_grid,
    read_manifest,
    table1_heaps_fit,
)
from .tags import default_tag_map, read_tag_map
from .text import MultiplicitySpectrum, build_text, read_interchange, spectrum

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICS = 2
EXIT_PARTIAL = 3

#: Exhaustive oracle agreement threshold (absolute).
EXHAUSTIVE_TOL = 1e-12
#: Monte Carlo agreement: |mean dev| <= MC_SIGMA_FACTOR * sd/sqrt(samples)
#: at at least MC_PASS_FRACTION of grid points.
MC_SIGMA_FACTOR = 5.0
MC_PASS_FRACTION = 0.99


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grid", default="count:1000",
                        metavar="full|count:K|auto",
                        help="evaluation grid (default count:1000; auto = "
                             "full up to 100k tokens, count:1000 beyond)")
    parser.add_argument("--tagmap", metavar="PATH",
                        help="tag map config file (default: embedded Penn map)")
    parser.add_argument("--normalize", choices=("lower", "none"), default="lower",
                        help="surface normalization policy")
    parser.add_argument("--seed", type=int, default=0, metavar="U64",
                        help="PRNG seed recorded in outputs")
    parser.add_argument("--out", metavar="DIR", default="heapslaw-out",
                        help="output directory")


def _options(args: argparse.Namespace) -> AnalysisOptions:
    tag_map = read_tag_map(args.tagmap) if args.tagmap else default_tag_map()
    return AnalysisOptions(
        tag_map=tag_map,
        normalize=args.normalize,
        grid_spec=args.grid,
        seed=args.seed,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heapslaw",
        description="Heaps functions, shuffled-ensemble statistics, and fits "
                    "for tagged texts",
    )
    parser.add_argument("--version", action="version",
                        version=f"heapslaw {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="analyze one tagged-token file")
    p.add_argument("path", help="interchange file (surface<TAB>pos-tag lines)")
    p.add_argument("--id", help="work id (default: file stem)")
    _add_common(p)

    p = sub.add_parser("corpus", help="analyze a manifest of works")
    p.add_argument("manifest", help="flat manifest: id<TAB>path<TAB>title")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="also write per-work rows as CSV")
    _add_common(p)

    p = sub.add_parser("fit", help="least-squares fit with axis transforms")
    p.add_argument("csv_path", nargs="?",
                   help="CSV of points (omit to fit the embedded work table)")
    p.add_argument("--x", default="N", help="x column name (default N)")
    p.add_argument("--y", default="V", help="y column name (default V)")
    p.add_argument("--transform", choices=("loglog", "linlin", "linlog"),
                   default="loglog")
    p.add_argument("--include-suspect", action="store_true",
                   help="keep rows flagged suspect in the embedded table")
    p.add_argument("--out", metavar="CSV",
                   help="also write per-point (x, y, transformed, residual) CSV")

    p = sub.add_parser("oracle-check",
                       help="validate analytic curves against shuffling oracles")
    p.add_argument("--mode", choices=("exhaustive", "mc"), required=True)
    p.add_argument("--text", metavar="PATH", help="interchange file (mc mode)")
    p.add_argument("--spectrum", metavar="m:c,m:c,...",
                   help="explicit multiplicity spectrum")
    p.add_argument("--max-n", type=int, default=8,
                   help="exhaustive mode: check all partitions up to this N")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", default="count:1000")
    p.add_argument("--normalize", choices=("lower", "none"), default="lower")
    p.add_argument("--tagmap", metavar="PATH")

    return parser


def _cmd_analyze(args: argparse.Namespace) -> int:
    options = _options(args)
    report = analyze_work(args.path, options, work_id=args.id, out_dir=args.out)
    print(json.dumps(
        {"id": report["id"], "n_tokens": report["n_tokens"],
         "v_types": report["v_types"], "out": str(Path(args.out))},
        sort_keys=True,
    ))
    return EXIT_OK


def _cmd_corpus(args: argparse.Namespace) -> int:
    options = _options(args)
    manifest = read_manifest(args.manifest, options)
    report = analyze_corpus(manifest, out_dir=args.out, jobs=args.jobs,
                            row_format=args.format)
    print(json.dumps(
        {"works": len(report["works"]), "failures": len(report["failures"]),
         "out": str(Path(args.out))},
        sort_keys=True,
    ))
    return EXIT_PARTIAL if report["failures"] else EXIT_OK


def _cmd_fit(args: argparse.Namespace) -> int:
    if args.csv_path is None:
        from .table1 import load_works

        works = load_works(include_suspect=args.include_suspect)
        points = [(float(w.N), float(w.V)) for w in works]
        fitted = fit_points(points, "loglog")
        result = table1_heaps_fit(include_suspect=args.include_suspect)
    else:
        with open(args.csv_path, encoding="utf-8", newline="") as fh:
            rows = list(csv.DictReader(fh))
        points = [(float(r[args.x]), float(r[args.y])) for r in rows]
        fitted = fit_points(points, args.transform)
        result = fitted.as_dict()
    if args.out:
        write_fit_csv(args.out, points, fitted)
    print(json.dumps(result, sort_keys=True))
    return EXIT_OK


def _spectrum_from_arg(text: str) -> MultiplicitySpectrum:
    entries = []
    for part in text.split(","):
        m, _, c = part.partition(":")
        entries.append((int(m), int(c)))
    return MultiplicitySpectrum.from_entries(entries)


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.mode == "exhaustive":
        from sympy.utilities.iterables import partitions

        worst = 0.0
        checked = 0
        for total in range(1, args.max_n + 1):
            for part in partitions(total):
                spec = MultiplicitySpectrum.from_entries(part.items())
                grid = make_grid(spec.N, "full")
                oracle = exhaustive_oracle(spec)
                dev_mean = np.abs(mean_curve(spec, grid) - oracle.mean).max()
                dev_var = np.abs(variance_curve(spec, grid) - oracle.variance).max()
                worst = max(worst, float(dev_mean), float(dev_var))
                checked += 1
        ok = worst <= EXHAUSTIVE_TOL
        print(json.dumps({
            "mode": "exhaustive", "partitions_checked": checked,
            "max_abs_deviation": worst, "threshold": EXHAUSTIVE_TOL,
            "verdict": "pass" if ok else "fail",
        }, sort_keys=True))
        return EXIT_OK if ok else EXIT_NUMERICS

    # Monte Carlo mode: needs a text (interchange file or synthesized
    # from an explicit spectrum).
    if args.text:
        tag_map = read_tag_map(args.tagmap) if args.tagmap else default_tag_map()
        pairs = read_interchange(args.text)
        text = build_text(pairs, tag_map, args.normalize, text_id=Path(args.text).stem)
        spec = spectrum(text)
    elif args.spectrum:
        from .fixtures import text_from_spectrum

        spec = _spectrum_from_arg(args.spectrum)
        text = text_from_spectrum(spec)
    else:
        raise HeapslawError("mc mode needs --text or --spectrum")

    grid = make_grid(text.N, args.grid)
    ens = ensemble_curve(spec, grid)
    mc = monte_carlo_oracle(text, samples=args.samples, seed=args.seed, grid=grid)

    bound = MC_SIGMA_FACTOR * ens.sd / np.sqrt(args.samples)
    dev = np.abs(mc.mean - ens.mean)
    within = dev <= bound
    frac = float(np.mean(within))
    ok = frac >= MC_PASS_FRACTION
    print(json.dumps({
        "mode": "mc", "samples": args.samples, "seed": args.seed,
        "generator": GENERATOR_NAME, "grid_points": len(grid),
        "max_abs_deviation": float(dev.max()),
        "fraction_within_bound": frac, "required_fraction": MC_PASS_FRACTION,
        "verdict": "pass" if ok else "fail",
    }, sort_keys=True))
    return EXIT_OK if ok else EXIT_NUMERICS


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "corpus": _cmd_corpus,
        "fit": _cmd_fit,
        "oracle-check": _cmd_oracle_check,
    }
    try:
        return handlers[args.verb](args)
    except NumericsError as err:
        _print_error(err)
        return EXIT_NUMERICS
    except (HeapslawError, FileNotFoundError) as err:
        _print_error(err)
        return EXIT_INPUT


def _print_error(err: Exception) -> None:
    record = {"error": type(err).__name__, "message": str(err)}
    for attr in ("tag", "line"):
        value = getattr(err, attr, None)
        if value is not None:
            record[attr] = value
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
