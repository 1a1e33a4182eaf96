"""End-to-end conversion of a raw e-text into an interchange file.

Output grammar (consumed by the numeric core): UTF-8, LF endings, one
``surface<TAB>pos-tag`` line per token in source order, ``#`` comment
header recording tool versions for provenance. Nothing time-dependent
goes into the header, so re-runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .boilerplate import strip_boilerplate
from .errors import UnreadableSource
from .tagger import make_tagger
from .tokenizer import TOKENIZER_VERSION, split_sentences, tokenize


@dataclass(frozen=True)
class IngestJob:
    source: Path
    work_id: str
    out_path: Path
    strip: bool = True
    tagger: str = "builtin"
    title: str = ""


def read_source(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError as err:
        raise UnreadableSource(f"no such file: {path}") from err
    except UnicodeDecodeError as err:
        raise UnreadableSource(f"{path} is not UTF-8 text") from err
    except OSError as err:
        raise UnreadableSource(f"cannot read {path}: {err}") from err


def tag_text(text: str, tagger) -> list[tuple[str, str]]:
    """Sentence-split, tokenize, and tag; token order follows the source."""
    pairs: list[tuple[str, str]] = []
    for sentence in split_sentences(text):
        tokens = tokenize(sentence)
        if tokens:
            pairs.extend(tagger.tag_sentence(tokens))
    return pairs


def ingest(job: IngestJob) -> Path:
    """Run one job and write its interchange file; returns the path."""
    raw = read_source(job.source)
    if not raw.strip():
        raise UnreadableSource(f"{job.source} is empty")
    body = strip_boilerplate(raw) if job.strip else raw
    tagger = make_tagger(job.tagger)
    pairs = tag_text(body, tagger)

    out = Path(job.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    header = [
        f"# work: {job.work_id}",
        f"# title: {job.title}" if job.title else None,
        f"# source: {Path(job.source).name}",
        f"# ingest: textingest {__version__}",
        f"# tokenizer: {TOKENIZER_VERSION}",
        f"# tagger: {tagger.name} {tagger.version}",
        f"# boilerplate-stripped: {str(job.strip).lower()}",
    ]
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for line in header:
            if line is not None:
                fh.write(line + "\n")
        for surface, tag in pairs:
            fh.write(f"{surface}\t{tag}\n")
    return out


def append_manifest(manifest_path: Path, work_id: str, out_path: Path,
                    title: str) -> None:
    """Add one ``id<TAB>path<TAB>title`` manifest line (path relative to
    the manifest's directory when possible)."""
    manifest_path = Path(manifest_path)
    manifest_path.parent.mkdir(parents=True, exist_ok=True)
    try:
        rel = Path(out_path).resolve().relative_to(manifest_path.parent.resolve())
    except ValueError:
        rel = Path(out_path).resolve()
    with open(manifest_path, "a", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{work_id}\t{rel}\t{title}\n")
