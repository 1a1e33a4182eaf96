import numpy as np
import pytest
from hypothesis import given

import heapslaw as hl
from heapslaw.tags import TagClass

from conftest import MINI_EXPECTED, occurrence_lists, token_streams


class TestBuildText:
    def test_one_token_per_class(self, tag_map):
        text = hl.build_text(
            [("The", "DT"), ("cat", "NN"), ("sat", "VBD")], tag_map
        )
        assert text.N == 3
        assert text.V == 3
        assert text.v_tag[TagClass.NOUN] == 1
        assert text.v_tag[TagClass.VERB] == 1
        assert text.v_tag[TagClass.OTHER] == 1

    def test_repeated_type_counted_once(self, tag_map):
        text = hl.build_text([("a", "DT"), ("a", "DT")], tag_map)
        assert text.N == 2
        assert text.V == 1
        assert text.v_tag[TagClass.OTHER] == 1

    def test_ignore_tokens_never_counted(self, tag_map):
        text = hl.build_text(
            [(".", "."), ("word", "NN"), (",", ","), ("word", "NN")], tag_map
        )
        assert text.N == 2
        assert [t.position for t in text.tokens] == [1, 2]

    def test_empty_after_filtering(self, tag_map):
        with pytest.raises(hl.EmptyText):
            hl.build_text([(".", "."), (",", ",")], tag_map)

    def test_unknown_pos_tag(self, tag_map):
        with pytest.raises(hl.UnknownPosTag) as exc:
            hl.build_text([("ok", "NN"), ("bad", "ZZZ")], tag_map)
        assert exc.value.tag == "ZZZ"
        assert exc.value.line == 2

    def test_lowercasing_merges_types(self, tag_map):
        text = hl.build_text([("The", "DT"), ("the", "DT")], tag_map)
        assert text.V == 1
        none = hl.build_text(
            [("The", "DT"), ("the", "DT")], tag_map, normalize="none"
        )
        assert none.V == 2

    def test_majority_class_ownership(self, tag_map):
        # "run" twice as verb, once as noun -> owned by VERB
        text = hl.build_text(
            [("run", "VB"), ("run", "NN"), ("run", "VBD")], tag_map
        )
        assert text.V == 1
        assert text.v_tag[TagClass.VERB] == 1
        assert text.n_tag[TagClass.NOUN] == 1  # token counts keep their own tag

    def test_tie_goes_to_earliest_tied_class(self, tag_map):
        text = hl.build_text([("run", "NN"), ("run", "VB")], tag_map)
        assert text.v_tag[TagClass.NOUN] == 1
        # earliest *tied* class wins even if a third class came first
        text = hl.build_text(
            [("run", "DT"), ("run", "VB"), ("run", "NN"),
             ("run", "VB"), ("run", "NN")],
            tag_map,
        )
        assert text.v_tag[TagClass.VERB] == 1

    def test_totals_decompose(self, mini_text):
        exp = MINI_EXPECTED
        assert mini_text.N == exp["N"]
        assert mini_text.V == exp["V"]
        assert {c.value: n for c, n in mini_text.n_tag.items()} == exp["n_tag"]
        assert {c.value: n for c, n in mini_text.v_tag.items()} == exp["v_tag"]

    @given(stream=token_streams)
    def test_tag_totals_always_decompose(self, stream):
        tag_map = hl.default_tag_map()
        text = hl.build_text(stream, tag_map)
        assert sum(text.n_tag.values()) == text.N
        assert sum(text.v_tag.values()) == text.V

    def test_idempotent_on_own_serialization(self, mini_text, tag_map, tmp_path):
        out = tmp_path / "mini.tok"
        hl.write_interchange(mini_text, out, header=["round trip"])
        rebuilt = hl.build_text(
            hl.read_interchange(out), tag_map, text_id=mini_text.id
        )
        assert [t.surface for t in rebuilt.tokens] == [
            t.surface for t in mini_text.tokens
        ]
        assert [t.tag for t in rebuilt.tokens] == [t.tag for t in mini_text.tokens]
        assert rebuilt.n_tag == mini_text.n_tag
        assert rebuilt.v_tag == mini_text.v_tag
        assert hl.spectrum(rebuilt) == hl.spectrum(mini_text)


class TestSpectrum:
    def test_direct_count(self, tag_map):
        text = hl.build_text(
            [("a", "NN"), ("a", "NN"), ("b", "NN")], tag_map
        )
        assert hl.spectrum(text).entries == ((1, 1), (2, 1))

    def test_uniform_case(self, tag_map):
        stream = [(f"w{i}", "NN") for i in range(7)]
        assert hl.spectrum(hl.build_text(stream, tag_map)).entries == ((1, 7),)

    def test_totals_match_text(self, mini_text):
        spec = hl.spectrum(mini_text)
        assert spec.entries == MINI_EXPECTED["spectrum"]
        assert spec.N == mini_text.N
        assert spec.V == mini_text.V

    @given(stream=token_streams)
    def test_order_free(self, stream):
        tag_map = hl.default_tag_map()
        spec = hl.spectrum(hl.build_text(stream, tag_map))
        reversed_spec = hl.spectrum(hl.build_text(stream[::-1], tag_map))
        assert spec == reversed_spec

    @given(counts=occurrence_lists)
    def test_from_counts_invariants(self, counts):
        spec = hl.MultiplicitySpectrum.from_counts(counts)
        assert spec.N == sum(counts)
        assert spec.V == len(counts)
        ms = spec.multiplicities
        assert np.all(ms[1:] > ms[:-1])
        assert sorted(spec.occurrence_list(), reverse=True) == sorted(
            counts, reverse=True
        )
        # distinct multiplicities obey the pigeonhole budget bound
        assert len(spec.entries) <= int(np.sqrt(2 * spec.N)) + 1

    def test_rejects_bad_entries(self):
        with pytest.raises(hl.DomainError):
            hl.MultiplicitySpectrum.from_entries([(0, 3)])
        with pytest.raises(hl.DomainError):
            hl.MultiplicitySpectrum.from_entries([(2, 0)])
        with pytest.raises(hl.DomainError):
            hl.MultiplicitySpectrum.from_entries([])


class TestInterchange:
    def test_comments_and_blanks_skipped(self, tmp_path):
        p = tmp_path / "t.tok"
        p.write_text("# header\n\nThe\tDT\n\ncat\tNN\n", encoding="utf-8")
        assert hl.read_interchange(p) == [("The", "DT"), ("cat", "NN")]

    def test_malformed_line(self, tmp_path):
        p = tmp_path / "t.tok"
        p.write_text("The DT\n", encoding="utf-8")
        with pytest.raises(hl.InterchangeError):
            hl.read_interchange(p)

    def test_empty_field(self, tmp_path):
        p = tmp_path / "t.tok"
        p.write_text("The\t\n", encoding="utf-8")
        with pytest.raises(hl.InterchangeError):
            hl.read_interchange(p)


class TestTagMapFile:
    def test_round_trip(self, tag_map, tmp_path):
        p = tmp_path / "map.conf"
        hl.tags.write_tag_map(tag_map, p)
        loaded = hl.read_tag_map(p)
        assert loaded.entries == tag_map.entries

    def test_parse_errors(self, tmp_path):
        p = tmp_path / "map.conf"
        p.write_text("NN noun\n", encoding="utf-8")
        with pytest.raises(hl.InterchangeError):
            hl.read_tag_map(p)
        p.write_text("NN = nounish\n", encoding="utf-8")
        with pytest.raises(hl.InterchangeError):
            hl.read_tag_map(p)
        p.write_text("NN = noun\nNN = verb\n", encoding="utf-8")
        with pytest.raises(hl.InterchangeError):
            hl.read_tag_map(p)

    def test_total_map_contract(self):
        custom = hl.TagMap(name="tiny", entries={"NN": TagClass.NOUN})
        with pytest.raises(hl.UnknownPosTag):
            custom.lookup("VB")
