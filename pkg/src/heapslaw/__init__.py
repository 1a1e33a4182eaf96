"""Heaps functions of tagged texts and their shuffled-ensemble statistics.

The package splits into a text model (tagged tokens, vocabulary,
multiplicity spectrum), exact rarefaction numerics (ensemble mean and
variance of vocabulary growth), Heaps anomaly and per-tag excess
analysis, regression helpers, shuffling oracles, and a CLI that ties a
corpus run together.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateInput,
    DomainError,
    EmptyText,
    GridMismatch,
    HeapslawError,
    InterchangeError,
    ManifestError,
    NumericsError,
    TooLarge,
    UnknownPosTag,
)
from .fitting import FitResult, RatioFit, fit, proportionality_fit, write_fit_csv
from .heaps import (
    AnomalyReport,
    ExcessReport,
    HeapsCurve,
    anomaly,
    empirical_heaps,
    excess,
)
from .oracle import OracleCurves, exhaustive_oracle, monte_carlo_oracle
from .rarefaction import (
    EnsembleCurve,
    SampleGrid,
    binomial_tail_ratio,
    ensemble_curve,
    mean_curve,
    variance_curve,
)
from .report import (
    AnalysisOptions,
    CorpusManifest,
    analyze_corpus,
    analyze_work,
    read_manifest,
    table1_heaps_fit,
)
from .tags import TagClass, TagMap, default_tag_map, read_tag_map
from .text import (
    MultiplicitySpectrum,
    TaggedToken,
    TextRecord,
    build_text,
    read_interchange,
    spectrum,
    write_interchange,
)

__all__ = [
    "AnalysisOptions",
    "AnomalyReport",
    "CorpusManifest",
    "DegenerateInput",
    "DomainError",
    "EmptyText",
    "EnsembleCurve",
    "ExcessReport",
    "FitResult",
    "GridMismatch",
    "HeapsCurve",
    "HeapslawError",
    "InterchangeError",
    "ManifestError",
    "MultiplicitySpectrum",
    "NumericsError",
    "OracleCurves",
    "RatioFit",
    "SampleGrid",
    "TagClass",
    "TagMap",
    "TaggedToken",
    "TextRecord",
    "TooLarge",
    "UnknownPosTag",
    "analyze_corpus",
    "analyze_work",
    "anomaly",
    "binomial_tail_ratio",
    "build_text",
    "default_tag_map",
    "empirical_heaps",
    "ensemble_curve",
    "exhaustive_oracle",
    "excess",
    "fit",
    "mean_curve",
    "monte_carlo_oracle",
    "proportionality_fit",
    "read_interchange",
    "read_manifest",
    "read_tag_map",
    "spectrum",
    "table1_heaps_fit",
    "variance_curve",
    "write_fit_csv",
    "write_interchange",
]
