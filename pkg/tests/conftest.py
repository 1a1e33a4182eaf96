import numpy as np
import pytest
from hypothesis import strategies as st

import heapslaw as hl

# Per-type occurrence-count lists; small enough that property cases run
# in milliseconds but still cover repeated multiplicities and hapaxes.
occurrence_lists = st.lists(st.integers(1, 9), min_size=1, max_size=40)

penn_word_tags = st.sampled_from(
    ["NN", "NNS", "NNP", "PRP", "VB", "VBD", "VBZ", "DT", "IN", "JJ", "RB", "CC"]
)

surfaces = st.text(alphabet="abcdefg", min_size=1, max_size=3)

token_streams = st.lists(st.tuples(surfaces, penn_word_tags), min_size=1, max_size=120)


@pytest.fixture(scope="session")
def tag_map():
    return hl.default_tag_map()


@pytest.fixture()
def aab_spectrum():
    return hl.MultiplicitySpectrum.from_entries([(2, 1), (1, 1)])


#: 20 countable tokens (punctuation dropped), 16 types; hand-computed
#: expectations live in MINI_EXPECTED below.
MINI_STREAM = [
    ("The", "DT"), ("old", "JJ"), ("fisherman", "NN"), ("mended", "VBD"),
    ("his", "PRP$"), ("net", "NN"), (".", "."),
    ("He", "PRP"), ("mended", "VBD"), ("it", "PRP"), ("slowly", "RB"),
    (",", ","), ("and", "CC"), ("the", "DT"), ("net", "NN"),
    ("held", "VBD"), (".", "."),
    ("The", "DT"), ("grey", "JJ"), ("sea", "NN"), ("watched", "VBD"),
    ("him", "PRP"), ("silently", "RB"), (".", "."),
]

MINI_EXPECTED = {
    "N": 20,
    "V": 16,
    "n_tag": {"noun": 7, "verb": 4, "other": 9},
    "v_tag": {"noun": 6, "verb": 3, "other": 7},
    "spectrum": ((1, 13), (2, 2), (3, 1)),
    "v": [1, 2, 3, 4, 5, 6, 7, 7, 8, 9, 10, 10, 10, 11, 11, 12, 13, 14, 15, 16],
    "v_noun": [0, 0, 1, 1, 1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 6, 6],
    "v_verb": [0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3],
    "v_other": [1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 7],
}


@pytest.fixture()
def mini_text(tag_map):
    return hl.build_text(MINI_STREAM, tag_map, normalize="lower", text_id="mini")


def assert_close(a, b, tol):
    assert np.all(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)) <= tol)
