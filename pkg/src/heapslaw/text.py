"""In-memory model of a tagged text and its multiplicity spectrum.

A text is an ordered stream of (surface, POS-tag) tokens. Building a
:class:`TextRecord` drops ignorable tokens, normalizes surfaces, assigns
every vocabulary type to exactly one tag class, and precomputes the
integer arrays the curve computations run on.

The multiplicity spectrum is the count-of-counts view ``{(m, c_m)}``:
``c_m`` types occur exactly ``m`` times. It is the order-free sufficient
statistic for every shuffled-ensemble quantity downstream.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, EmptyText, InterchangeError
from .tags import COUNTED_CLASSES, TagClass, TagMap

#: Accepted surface-normalization policies.
NORMALIZE_POLICIES = ("lower", "none")

# Canonical POS tag emitted when a record is serialized back to the
# interchange format (the original fine-grained tags are not retained).
_CANONICAL_POS = {TagClass.NOUN: "NN", TagClass.VERB: "VB", TagClass.OTHER: "UH"}

_TAG_CODE = {TagClass.NOUN: 0, TagClass.VERB: 1, TagClass.OTHER: 2}


@dataclass(frozen=True)
class TaggedToken:
    """One countable token: normalized surface, class, 1-based position."""

    surface: str
    tag: TagClass
    position: int


@dataclass(frozen=True, eq=False)
class TextRecord:
    """One work as an immutable token sequence plus derived totals.

    A vocabulary type is the normalized surface form alone; a form used
    under several classes is one type, owned by the class of the majority
    of its occurrences (ties go to the first occurrence). This keeps
    ``V == sum(V_tag)`` exact.
    """

    id: str
    tokens: tuple[TaggedToken, ...]
    n_tag: dict[TagClass, int]
    v_tag: dict[TagClass, int]
    #: token i (0-based) -> vocabulary type id, in first-occurrence order
    token_type_ids: np.ndarray = field(repr=False)
    #: type id -> owning class code (0 noun, 1 verb, 2 other)
    type_tag_codes: np.ndarray = field(repr=False)
    #: type id -> occurrence count
    type_counts: np.ndarray = field(repr=False)
    #: type id -> normalized surface
    type_surfaces: tuple[str, ...] = field(repr=False)

    @property
    def N(self) -> int:
        return len(self.tokens)

    @property
    def V(self) -> int:
        return len(self.type_counts)

    def interchange_lines(self) -> Iterator[str]:
        """Serialize as interchange lines with canonical per-class tags."""
        for tok in self.tokens:
            yield f"{tok.surface}\t{_CANONICAL_POS[tok.tag]}"


@dataclass(frozen=True)
class MultiplicitySpectrum:
    """Count-of-counts ``{(m, c_m)}`` with ``m`` strictly increasing.

    Equivalent to the text's rank-frequency (Zipf) data up to type
    identity; drives all closed-form shuffled-ensemble statistics.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last_m = 0
        for m, c in self.entries:
            if m <= last_m:
                raise DomainError(
                    "spectrum entries must have distinct increasing m >= 1"
                )
            if c < 1 or int(c) != c or int(m) != m:
                raise DomainError("spectrum entries must be positive integers")
            last_m = m
        if not self.entries:
            raise DomainError("empty spectrum")

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[int, int]]) -> "MultiplicitySpectrum":
        return cls(tuple(sorted((int(m), int(c)) for m, c in entries)))

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "MultiplicitySpectrum":
        """Build from per-type occurrence counts."""
        tally = Counter(int(c) for c in counts)
        if any(m < 1 for m in tally):
            raise DomainError("occurrence counts must be >= 1")
        return cls(tuple(sorted(tally.items())))

    @property
    def N(self) -> int:
        return sum(m * c for m, c in self.entries)

    @property
    def V(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def multiplicities(self) -> np.ndarray:
        return np.array([m for m, _ in self.entries], dtype=np.int64)

    @property
    def counts(self) -> np.ndarray:
        return np.array([c for _, c in self.entries], dtype=np.int64)

    def occurrence_list(self) -> list[int]:
        """The sorted per-type occurrence counts (descending = Zipf data)."""
        out: list[int] = []
        for m, c in sorted(self.entries, reverse=True):
            out.extend([m] * c)
        return out


def _normalize(surface: str, policy: str) -> str:
    if policy == "lower":
        return surface.lower()
    return surface


def build_text(
    token_stream: Iterable[tuple[str, str]],
    tag_map: TagMap,
    normalize: str = "lower",
    text_id: str = "",
) -> TextRecord:
    """Assemble a :class:`TextRecord` from (surface, POS-tag) pairs.

    Ignorable tokens are dropped before positions are assigned, so the
    stored positions run 1..N over countable words only. Every POS tag
    must be present in ``tag_map`` (raises :class:`UnknownPosTag` with
    the 1-based stream index otherwise); an empty result raises
    :class:`EmptyText`.
    """
    if normalize not in NORMALIZE_POLICIES:
        raise DomainError(f"unknown normalization policy {normalize!r}")

    tokens: list[TaggedToken] = []
    type_ids: list[int] = []
    id_of_surface: dict[str, int] = {}
    class_votes: list[Counter] = []
    first_pos_of_class: list[dict[TagClass, int]] = []

    for stream_line, (surface, pos_tag) in enumerate(token_stream, start=1):
        cls = tag_map.lookup(pos_tag, line=stream_line)
        if cls is TagClass.IGNORE:
            continue
        norm = _normalize(surface, normalize)
        if not norm:
            raise InterchangeError("empty token surface", line=stream_line)
        position = len(tokens) + 1
        tokens.append(TaggedToken(surface=norm, tag=cls, position=position))
        tid = id_of_surface.get(norm)
        if tid is None:
            tid = len(id_of_surface)
            id_of_surface[norm] = tid
            class_votes.append(Counter())
            first_pos_of_class.append({})
        class_votes[tid][cls] += 1
        first_pos_of_class[tid].setdefault(cls, position)
        type_ids.append(tid)

    if not tokens:
        raise EmptyText(f"text {text_id!r} has no countable tokens")

    # Majority class per type; among tied classes the earliest one wins.
    owners: list[TagClass] = []
    for tid, votes in enumerate(class_votes):
        top = max(votes.values())
        leaders = [cls for cls in COUNTED_CLASSES if votes[cls] == top]
        owners.append(min(leaders, key=lambda c: first_pos_of_class[tid][c]))

    n_tag = {cls: 0 for cls in COUNTED_CLASSES}
    for tok in tokens:
        n_tag[tok.tag] += 1
    v_tag = {cls: 0 for cls in COUNTED_CLASSES}
    for owner in owners:
        v_tag[owner] += 1

    token_type_ids = np.asarray(type_ids, dtype=np.int64)
    type_tag_codes = np.asarray([_TAG_CODE[o] for o in owners], dtype=np.int8)
    type_counts = np.bincount(token_type_ids, minlength=len(owners)).astype(np.int64)
    for arr in (token_type_ids, type_tag_codes, type_counts):
        arr.flags.writeable = False

    return TextRecord(
        id=text_id,
        tokens=tuple(tokens),
        n_tag=n_tag,
        v_tag=v_tag,
        token_type_ids=token_type_ids,
        type_tag_codes=type_tag_codes,
        type_counts=type_counts,
        type_surfaces=tuple(id_of_surface),
    )


def spectrum(text: TextRecord) -> MultiplicitySpectrum:
    """The multiplicity spectrum of a text's type frequencies."""
    return MultiplicitySpectrum.from_counts(text.type_counts.tolist())


def read_interchange(path: str | Path) -> list[tuple[str, str]]:
    """Read a tagged-token interchange file into (surface, POS-tag) pairs.

    One token per line as ``surface<TAB>pos-tag``; lines starting with
    ``#`` are comments and blank lines are skipped.
    """
    path = Path(path)
    pairs: list[tuple[str, str]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            if "\t" not in line:
                raise InterchangeError(
                    f"expected 'surface<TAB>pos-tag', got {line!r}", line=lineno
                )
            surface, _, pos_tag = line.partition("\t")
            surface = surface.strip()
            pos_tag = pos_tag.strip()
            if not surface or not pos_tag:
                raise InterchangeError(
                    "empty surface or POS tag field", line=lineno
                )
            pairs.append((surface, pos_tag))
    return pairs


def write_interchange(
    lines: Iterable[str] | TextRecord,
    path: str | Path,
    header: Sequence[str] = (),
) -> None:
    """Write interchange lines (or a record's serialization) to ``path``."""
    if isinstance(lines, TextRecord):
        lines = lines.interchange_lines()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for comment in header:
            fh.write(f"# {comment}\n")
        for line in lines:
            fh.write(line + "\n")
