"""Embedded corpus-summary fixture: 75 works with their N and V.

The shipped CSV carries every row verbatim, including one suspect row
(``dic11``, whose token count is wildly inconsistent with its vocabulary
size for a full-length novel -- almost certainly a typo at the source).
Suspect rows are flagged here and excluded from fits by default rather
than silently corrected.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

#: Rows carried verbatim but excluded from fits unless asked for.
SUSPECT_CODES = frozenset({"dic11"})


@dataclass(frozen=True)
class WorkSummary:
    code: str
    author: str
    title: str
    year: str
    N: int
    V: int
    suspect: bool

    @property
    def author_code(self) -> str:
        return self.code[:3]


def load_works(include_suspect: bool = False) -> list[WorkSummary]:
    """The fixture rows, in file order; suspect rows dropped by default."""
    path = resources.files("heapslaw.data").joinpath("works.csv")
    with path.open(encoding="utf-8", newline="") as fh:
        rows = [
            WorkSummary(
                code=r["code"],
                author=r["author"],
                title=r["title"],
                year=r["year"],
                N=int(r["N"]),
                V=int(r["V"]),
                suspect=r["code"] in SUSPECT_CODES,
            )
            for r in csv.DictReader(fh)
        ]
    if not include_suspect:
        rows = [r for r in rows if not r.suspect]
    return rows
