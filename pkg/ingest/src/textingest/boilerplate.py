"""Strip e-text repository boilerplate from plain-text sources.

Standard digitized editions wrap the work proper between explicit
start/end marker lines (``*** START OF ... ***`` / ``*** END OF ...``).
Only content between the markers belongs to the original work; license
blocks, transcriber notes, and catalog preambles sit outside them.
"""

from __future__ import annotations

import logging
import re

log = logging.getLogger(__name__)

_START = re.compile(r"^\s*\*\*\*\s*START OF\b.*$", re.IGNORECASE | re.MULTILINE)
_END = re.compile(r"^\s*\*\*\*\s*END OF\b.*$", re.IGNORECASE | re.MULTILINE)


def strip_boilerplate(text: str) -> str:
    """Return the content between start/end markers.

    Fallbacks keep the pipeline usable on partially marked files: with
    only a start marker, everything after it is kept; with only an end
    marker, everything before it; with neither, the input is returned
    unchanged. Every fallback logs a warning.
    """
    start = _START.search(text)
    end = _END.search(text)
    if start and end and end.start() > start.end():
        return text[start.end():end.start()]
    if start and not end:
        log.warning("no end marker found; keeping all content after start marker")
        return text[start.end():]
    if end and not start:
        log.warning("no start marker found; keeping all content before end marker")
        return text[:end.start()]
    if start and end:
        log.warning("markers out of order; returning input unchanged")
        return text
    log.warning("no boilerplate markers found; returning input unchanged")
    return text
