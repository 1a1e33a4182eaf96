"""Grammatical tag classes and POS-tag-to-class maps.

Words are grouped into three countable classes (nouns, verbs, everything
else); punctuation and other non-word tokens map to ``IGNORE`` and never
contribute to token or vocabulary counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path

from .errors import InterchangeError, UnknownPosTag


class TagClass(enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    OTHER = "other"
    IGNORE = "ignore"

    def __repr__(self) -> str:
        return f"TagClass.{self.name}"


#: The three classes that contribute to counts, in canonical order.
COUNTED_CLASSES = (TagClass.NOUN, TagClass.VERB, TagClass.OTHER)


@dataclass(frozen=True)
class TagMap:
    """Total map from POS-tag strings to tag classes.

    Lookup of a tag absent from the map raises :class:`UnknownPosTag`;
    there is deliberately no default class.
    """

    name: str
    entries: dict[str, TagClass]

    def lookup(self, pos_tag: str, line: int | None = None) -> TagClass:
        try:
            return self.entries[pos_tag]
        except KeyError:
            raise UnknownPosTag(pos_tag, line) from None

    def __contains__(self, pos_tag: str) -> bool:
        return pos_tag in self.entries


# Penn Treebank word-level categories. Nouns take the common/proper noun
# tags plus personal pronouns; verbs take the six inflected verb tags;
# every remaining word tag is OTHER.
_PENN_NOUN = ("NN", "NNS", "NNP", "NNPS", "PRP")
_PENN_VERB = ("VB", "VBD", "VBG", "VBN", "VBP", "VBZ")
_PENN_OTHER = (
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
    "PDT", "POS", "PRP$", "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH",
    "WDT", "WP", "WP$", "WRB",
)
_PENN_PUNCT = (
    ".", ",", ":", "(", ")", "``", "''", '"', "#", "$", "--",
    "-LRB-", "-RRB-", "-LSB-", "-RSB-", "-LCB-", "-RCB-", "HYPH", "NFP",
)


def default_tag_map() -> TagMap:
    """The embedded Penn Treebank map (nouns incl. PRP; PRP$ stays OTHER)."""
    entries: dict[str, TagClass] = {}
    for t in _PENN_NOUN:
        entries[t] = TagClass.NOUN
    for t in _PENN_VERB:
        entries[t] = TagClass.VERB
    for t in _PENN_OTHER:
        entries[t] = TagClass.OTHER
    for t in _PENN_PUNCT:
        entries[t] = TagClass.IGNORE
    return TagMap(name="penn-default", entries=entries)


def read_tag_map(path: str | Path, name: str | None = None) -> TagMap:
    """Parse a tag-map config file.

    Format: one ``POSTAG = noun|verb|other|ignore`` entry per line;
    blank lines are skipped. There is no comment syntax: ``#`` is
    itself a valid POS tag.
    """
    path = Path(path)
    entries: dict[str, TagClass] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if "=" not in line:
                raise InterchangeError(
                    f"expected 'POSTAG = class', got {line!r}", line=lineno
                )
            tag, _, cls_name = line.partition("=")
            tag = tag.strip()
            cls_name = cls_name.strip().lower()
            if not tag:
                raise InterchangeError("empty POS tag", line=lineno)
            try:
                cls = TagClass(cls_name)
            except ValueError:
                raise InterchangeError(
                    f"unknown tag class {cls_name!r}", line=lineno
                ) from None
            if tag in entries:
                raise InterchangeError(f"duplicate POS tag {tag!r}", line=lineno)
            entries[tag] = cls
    return TagMap(name=name or path.name, entries=entries)


def write_tag_map(tag_map: TagMap, path: str | Path) -> None:
    """Serialize a tag map in the flat key-value config format."""
    lines = [
        f"{tag} = {cls.value}" for tag, cls in sorted(tag_map.entries.items())
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
