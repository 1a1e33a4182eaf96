"""Deterministic synthetic inputs for oracle checks and benchmarks."""

from __future__ import annotations

from .errors import DomainError
from .tags import default_tag_map
from .text import MultiplicitySpectrum, TextRecord, build_text


def zipf_spectrum(n_tokens: int, n_types: int) -> MultiplicitySpectrum:
    """A Zipf-like multiplicity spectrum with exact totals.

    Type r (1-based) gets a frequency proportional to 1/r, floored at 1;
    the scale is chosen so the total stays at or under ``n_tokens`` and
    the remainder is absorbed by the most frequent type. The result has
    exactly ``n_types`` types and ``n_tokens`` tokens.
    """
    if n_types < 1 or n_tokens < n_types:
        raise DomainError("need 1 <= n_types <= n_tokens")

    def total(scale: float) -> int:
        return sum(max(1, int(scale / r)) for r in range(1, n_types + 1))

    lo, hi = 1.0, float(n_tokens)
    while total(hi) < n_tokens and hi < 1e15:
        hi *= 2
    for _ in range(80):
        mid = (lo + hi) / 2
        if total(mid) <= n_tokens:
            lo = mid
        else:
            hi = mid
    freqs = [max(1, int(lo / r)) for r in range(1, n_types + 1)]
    freqs[0] += n_tokens - sum(freqs)
    return MultiplicitySpectrum.from_counts(freqs)


def text_from_spectrum(spec: MultiplicitySpectrum, text_id: str = "synthetic") -> TextRecord:
    """A concrete text realizing a spectrum, with types cycled over the
    three tag classes (the spectrum itself is order-free, so the flat
    type-by-type ordering is as good as any)."""
    pos_cycle = ("NN", "VB", "UH")
    stream = []
    tid = 0
    for m, c in spec.entries:
        for _ in range(c):
            word = f"w{tid}"
            pos = pos_cycle[tid % 3]
            stream.extend([(word, pos)] * m)
            tid += 1
    return build_text(stream, default_tag_map(), normalize="none", text_id=text_id)
