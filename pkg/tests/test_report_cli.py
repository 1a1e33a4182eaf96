import json

import numpy as np
import pytest

import heapslaw as hl
from heapslaw.cli import main as cli_main
from heapslaw.report import AnalysisOptions, analyze_work, make_grid

from conftest import MINI_EXPECTED, MINI_STREAM


@pytest.fixture()
def mini_file(tmp_path):
    path = tmp_path / "mini.tok"
    lines = [f"{surface}\t{pos}" for surface, pos in MINI_STREAM]
    path.write_text("# mini fixture\n" + "\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestAnalyzeWork:
    def test_hand_computed_report(self, mini_file, tmp_path):
        out = tmp_path / "out"
        report = analyze_work(
            mini_file, AnalysisOptions(grid_spec="full"), out_dir=out
        )
        exp = MINI_EXPECTED
        assert report["id"] == "mini"
        assert report["n_tokens"] == exp["N"]
        assert report["v_types"] == exp["V"]
        assert report["n_tag"] == exp["n_tag"]
        assert report["v_tag"] == exp["v_tag"]
        assert abs(report["anomaly"]["max_abs"]) < exp["V"]
        assert (out / "mini.json").is_file()
        assert (out / "mini_curves.csv").is_file()

    def test_curves_csv_contents(self, mini_file, tmp_path):
        analyze_work(mini_file, AnalysisOptions(grid_spec="full"), out_dir=tmp_path)
        rows = (tmp_path / "mini_curves.csv").read_text().splitlines()
        header = rows[0].split(",")
        assert header == [
            "n", "v", "v_bar", "sigma_v", "delta", "rel_delta",
            "e_noun", "e_verb", "e_other",
        ]
        assert len(rows) == 1 + MINI_EXPECTED["N"]
        first = rows[1].split(",")
        # delta(1) = 0 and rel_delta is undefined (empty field) at n=1
        assert float(first[4]) == pytest.approx(0.0, abs=1e-9)
        assert first[5] == ""
        v_col = [int(r.split(",")[1]) for r in rows[1:]]
        assert v_col == MINI_EXPECTED["v"]

    def test_short_prefix_matches_exhaustive_oracle(self, tag_map):
        # the first 8 countable tokens (20160 distinct arrangements),
        # validated against enumeration
        prefix = [p for p in MINI_STREAM if tag_map.lookup(p[1]) is not hl.TagClass.IGNORE][:8]
        text = hl.build_text(prefix, tag_map)
        spec = hl.spectrum(text)
        ens = hl.ensemble_curve(spec, hl.SampleGrid.full(text.N))
        oracle = hl.exhaustive_oracle(spec)
        np.testing.assert_allclose(ens.mean, oracle.mean, atol=1e-12)
        np.testing.assert_allclose(ens.variance, oracle.variance, atol=1e-12)


class TestCliAnalyze:
    def test_ok_run(self, mini_file, tmp_path, capsys):
        out = tmp_path / "out"
        code = cli_main(["analyze", str(mini_file), "--out", str(out), "--grid", "full"])
        assert code == 0
        echo = json.loads(capsys.readouterr().out)
        assert echo["n_tokens"] == MINI_EXPECTED["N"]
        assert echo["v_types"] == MINI_EXPECTED["V"]

    def test_empty_file_input_error(self, tmp_path, capsys):
        empty = tmp_path / "empty.tok"
        empty.write_text("# nothing here\n", encoding="utf-8")
        code = cli_main(["analyze", str(empty), "--out", str(tmp_path / "o")])
        assert code == 1
        record = json.loads(capsys.readouterr().err)
        assert record["error"] == "EmptyText"

    def test_unknown_tag_input_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.tok"
        bad.write_text("word\tZZZ\n", encoding="utf-8")
        code = cli_main(["analyze", str(bad), "--out", str(tmp_path / "o")])
        assert code == 1
        record = json.loads(capsys.readouterr().err)
        assert record["error"] == "UnknownPosTag"
        assert record["tag"] == "ZZZ"
        assert record["line"] == 1

    def test_missing_file(self, tmp_path, capsys):
        code = cli_main(["analyze", str(tmp_path / "nope.tok")])
        assert code == 1

    def test_reruns_byte_identical(self, mini_file, tmp_path):
        out1, out2 = tmp_path / "a", tmp_path / "b"
        assert cli_main(["analyze", str(mini_file), "--out", str(out1)]) == 0
        assert cli_main(["analyze", str(mini_file), "--out", str(out2)]) == 0
        for name in ("mini.json", "mini_curves.csv"):
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def write_corpus(tmp_path, works):
    lines = []
    for work_id, stream in works:
        p = tmp_path / f"{work_id}.tok"
        p.write_text(
            "\n".join(f"{s}\t{t}" for s, t in stream) + "\n", encoding="utf-8"
        )
        lines.append(f"{work_id}\t{p.name}\t{work_id.title()}")
    manifest = tmp_path / "corpus.tsv"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifest


class TestCliCorpus:
    def test_two_work_corpus(self, tmp_path, capsys):
        stream_b = [(f"w{i % 9}", "NN") for i in range(40)] + [("go", "VB")] * 6
        manifest = write_corpus(
            tmp_path, [("alpha", MINI_STREAM), ("beta", stream_b)]
        )
        out = tmp_path / "out"
        code = cli_main(["corpus", str(manifest), "--out", str(out),
                         "--grid", "full", "--format", "csv"])
        assert code == 0
        report = json.loads((out / "corpus.json").read_text())
        assert [w["id"] for w in report["works"]] == ["alpha", "beta"]
        assert report["failures"] == []
        assert report["fits"]["heaps_exponent"]["n_points"] == 2
        rows = (out / "corpus_rows.csv").read_text().splitlines()
        assert len(rows) == 3

    def test_single_work_fits_degenerate_but_reported(self, tmp_path):
        manifest = write_corpus(tmp_path, [("solo", MINI_STREAM)])
        out = tmp_path / "out"
        code = cli_main(["corpus", str(manifest), "--out", str(out)])
        assert code == 0
        report = json.loads((out / "corpus.json").read_text())
        assert len(report["works"]) == 1
        for name, entry in report["fits"].items():
            assert entry.get("error") == "DegenerateInput", name

    def test_partial_failure_exit_code(self, tmp_path, capsys):
        good = [("ok", "NN"), ("fine", "NN")]
        bad = [("broken", "ZZZ")]
        manifest = write_corpus(tmp_path, [("good", good), ("bad", bad)])
        out = tmp_path / "out"
        code = cli_main(["corpus", str(manifest), "--out", str(out)])
        assert code == 3
        report = json.loads((out / "corpus.json").read_text())
        assert len(report["works"]) == 1
        assert report["failures"][0]["id"] == "bad"
        assert report["failures"][0]["error"] == "UnknownPosTag"

    def test_duplicate_ids_rejected(self, tmp_path, capsys):
        manifest = write_corpus(tmp_path, [("dup", MINI_STREAM)])
        text = manifest.read_text()
        manifest.write_text(text + text)
        code = cli_main(["corpus", str(manifest), "--out", str(tmp_path / "o")])
        assert code == 1
        assert json.loads(capsys.readouterr().err)["error"] == "ManifestError"

    def test_fits_recomputable_from_work_jsons(self, tmp_path):
        # aggregation is a pure fold over the per-work documents
        from heapslaw.report import corpus_fits

        stream_b = [(f"w{i % 9}", "NN") for i in range(40)] + [("go", "VB")] * 6
        manifest = write_corpus(
            tmp_path, [("alpha", MINI_STREAM), ("beta", stream_b)]
        )
        out = tmp_path / "out"
        assert cli_main(["corpus", str(manifest), "--out", str(out)]) == 0
        report = json.loads((out / "corpus.json").read_text())
        rows = [
            json.loads((out / f"{work_id}.json").read_text())
            for work_id in ("alpha", "beta")
        ]
        recomputed = corpus_fits(rows)
        assert recomputed["fits"] == report["fits"]
        assert recomputed["diagnostics"] == report["diagnostics"]

    def test_parallel_matches_serial(self, tmp_path):
        stream_b = [(f"x{i % 5}", "NN") for i in range(25)]
        manifest = write_corpus(
            tmp_path, [("alpha", MINI_STREAM), ("beta", stream_b)]
        )
        out1, out2 = tmp_path / "o1", tmp_path / "o2"
        assert cli_main(["corpus", str(manifest), "--out", str(out1)]) == 0
        assert cli_main(["corpus", str(manifest), "--out", str(out2),
                         "--jobs", "2"]) == 0
        assert (out1 / "corpus.json").read_bytes() == (out2 / "corpus.json").read_bytes()


class TestCliFit:
    def test_embedded_table(self, capsys):
        assert cli_main(["fit"]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["n_works"] == 74
        assert 0.67 <= result["slope"] <= 0.69

    def test_csv_points(self, tmp_path, capsys):
        p = tmp_path / "pts.csv"
        p.write_text("N,V\n1,2\n2,4\n4,8\n", encoding="utf-8")
        assert cli_main(["fit", str(p), "--transform", "loglog"]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["slope"] == pytest.approx(1.0, abs=1e-12)

    def test_per_point_export(self, tmp_path, capsys):
        p = tmp_path / "pts.csv"
        p.write_text("N,V\n1,2\n2,4\n4,8\n", encoding="utf-8")
        out = tmp_path / "detail.csv"
        assert cli_main(["fit", str(p), "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "x,y,transformed_x,transformed_y,residual"
        assert len(lines) == 4


class TestCliOracleCheck:
    def test_exhaustive_small(self, capsys):
        code = cli_main(["oracle-check", "--mode", "exhaustive", "--max-n", "5"])
        assert code == 0
        result = json.loads(capsys.readouterr().out)
        assert result["verdict"] == "pass"
        assert result["max_abs_deviation"] <= 1e-12

    def test_mc_on_spectrum(self, capsys):
        code = cli_main([
            "oracle-check", "--mode", "mc", "--spectrum", "1:30,2:10,5:4",
            "--samples", "400", "--seed", "42", "--grid", "count:20",
        ])
        assert code == 0
        result = json.loads(capsys.readouterr().out)
        assert result["verdict"] == "pass"
        assert result["generator"] == "PCG64"

    def test_mc_deterministic_verdict(self, capsys):
        argv = ["oracle-check", "--mode", "mc", "--spectrum", "1:12,3:4",
                "--samples", "300", "--seed", "7", "--grid", "full"]
        assert cli_main(argv) == 0
        first = capsys.readouterr().out
        assert cli_main(argv) == 0
        assert capsys.readouterr().out == first


def test_make_grid_specs():
    assert make_grid(10, "full").is_full
    assert len(make_grid(100, "count:12")) == 12
    assert make_grid(90_000, "auto").is_full
    assert len(make_grid(200_000, "auto")) == 1000
    with pytest.raises(hl.DomainError):
        make_grid(10, "count:x")
    with pytest.raises(hl.DomainError):
        make_grid(10, "weird")


def test_normalize_none_cli_flag(tmp_path, capsys):
    src = tmp_path / "case.tok"
    src.write_text("The\tDT\nthe\tDT\n", encoding="utf-8")
    assert cli_main(["analyze", str(src), "--out", str(tmp_path / "a")]) == 0
    lowered = json.loads(capsys.readouterr().out)
    assert lowered["v_types"] == 1
    assert cli_main(["analyze", str(src), "--out", str(tmp_path / "b"),
                     "--normalize", "none"]) == 0
    kept = json.loads(capsys.readouterr().out)
    assert kept["v_types"] == 2
