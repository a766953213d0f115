"""End-to-end CLI tests via Click's runner."""

import json

import pytest
from click.testing import CliRunner

from matroidsplit import catalog
from matroidsplit.cli import main
from matroidsplit.formats import parse_matroid, write_matroid


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def g4_file(tmp_path):
    # The one-row representation of three parallel elements.
    path = tmp_path / "g4.matroid"
    path.write_text("elements x y z\nrow 111\n")
    return str(path)


def invoke(runner, *args):
    result = runner.invoke(main, list(args))
    return result


def record_of(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_info_reports_structure(runner, g4_file):
    rec = record_of(invoke(runner, "info", g4_file))
    assert rec["structure"]["rank"] == 1
    assert rec["structure"]["cocircuits"] == [["x", "y", "z"]]
    assert rec["inputs"]["file"]["sha256"]


def test_info_on_catalog_f_export(runner, tmp_path):
    path = tmp_path / "f.matroid"
    record_of(invoke(runner, "catalog", "export", "F", str(path)))
    rec = record_of(invoke(runner, "info", str(path)))
    assert rec["structure"]["rank"] == 2
    assert rec["structure"]["n_elements"] == 5


def test_info_rejects_malformed_row_with_line_number(runner, tmp_path):
    path = tmp_path / "bad.matroid"
    path.write_text("elements x y\nrow 111\n")
    result = invoke(runner, "info", str(path))
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_split_single_element(runner, g4_file):
    rec = record_of(invoke(runner, "split", g4_file, "--t", "x"))
    assert rec["matroid"] == ["elements x y z", "row 111", "row 100"]


def test_split_output_round_trips(runner, g4_file, tmp_path):
    out = tmp_path / "split.matroid"
    rec = record_of(invoke(runner, "split", g4_file, "--t", "x,y",
                           "--out", str(out)))
    reparsed = parse_matroid("\n".join(rec["matroid"]))
    on_disk = parse_matroid(out.read_text())
    assert reparsed == on_disk


def test_threefold_golden_rows(runner, g4_file):
    rec = record_of(invoke(runner, "threefold", g4_file, "--x", "x", "--y", "y"))
    assert rec["matroid"] == [
        "elements x y z p q r",
        "row 111000",
        "row 110101",
        "row 100011",
    ]


def test_threefold_label_collision_suffixes_digits(runner, tmp_path):
    path = tmp_path / "taken.matroid"
    path.write_text("elements x y p q r\nrow 11111\n")
    rec = record_of(invoke(runner, "threefold", str(path), "--x", "x", "--y", "y"))
    assert rec["params"]["new_labels"] == ["p1", "q1", "r1"]


def test_threefold_precondition_message(runner, tmp_path):
    path = tmp_path / "free.matroid"
    path.write_text("elements a b\nrow 10\nrow 01\n")
    result = invoke(runner, "threefold", str(path), "--x", "a", "--y", "b")
    assert result.exit_code == 2
    assert "not a proper subset of any cocircuit" in result.output


def test_esplit_then_delete_matches_split(runner, g4_file, tmp_path):
    split_out = tmp_path / "split.matroid"
    esplit_out = tmp_path / "esplit.matroid"
    record_of(invoke(runner, "split", g4_file, "--t", "x,y",
                     "--out", str(split_out)))
    record_of(invoke(runner, "esplit", g4_file, "--t", "x,y", "--new", "a",
                     "--out", str(esplit_out)))
    via_esplit = parse_matroid(esplit_out.read_text()).delete({"a"})
    assert via_esplit.same_matrix(parse_matroid(split_out.read_text()))


def test_minor_of_threefold_is_k4(runner, g4_file, tmp_path):
    out = tmp_path / "fold.matroid"
    record_of(invoke(runner, "threefold", g4_file, "--x", "x", "--y", "y",
                     "--out", str(out)))
    rec = record_of(invoke(runner, "minor", str(out), "--pattern", "K4"))
    assert rec["verdict"] == "present"
    assert rec["witness"]["deleted"] == []
    assert rec["witness"]["contracted"] == []
    rec = record_of(invoke(runner, "gammoid", str(out)))
    assert rec["verdict"] is False
    assert rec["witness"] is not None


def test_minor_with_pattern_file_and_pins(runner, g4_file, tmp_path):
    fold = tmp_path / "fold.matroid"
    record_of(invoke(runner, "threefold", g4_file, "--x", "x", "--y", "y",
                     "--out", str(fold)))
    patt = tmp_path / "k4.matroid"
    patt.write_text(write_matroid(catalog.get("K4").matroid))
    rec = record_of(invoke(runner, "minor", str(fold), "--pattern", str(patt),
                           "--pin", "e12=x"))
    assert rec["verdict"] == "present"
    assert rec["witness"]["mapping"]["e12"] == "x"
    bad = invoke(runner, "minor", str(fold), "--pattern", str(patt),
                 "--pin", "zz=x")
    assert bad.exit_code == 2


def test_minor_unknown_catalog_pattern(runner, g4_file):
    result = invoke(runner, "minor", g4_file, "--pattern", "NOPE")
    assert result.exit_code == 2
    assert "unknown catalog name" in result.output


def test_gammoid_true_for_parallel_triple(runner, g4_file):
    rec = record_of(invoke(runner, "gammoid", g4_file))
    assert rec["verdict"] is True
    assert rec["witness"] is None


def test_iso_of_quotient_shapes(runner, tmp_path):
    a = tmp_path / "q3.matroid"
    b = tmp_path / "q4.matroid"
    record_of(invoke(runner, "catalog", "export", "Q_3", str(a)))
    record_of(invoke(runner, "catalog", "export", "Q_4", str(b)))
    rec = record_of(invoke(runner, "iso", str(a), str(b)))
    assert rec["verdict"] == "isomorphic"
    assert set(rec["mapping"]) == set(catalog.get("Q_3").matroid.labels)


def test_catalog_list_and_show(runner):
    result = invoke(runner, "catalog", "list")
    assert result.exit_code == 0
    for name in ("K4", "G_1", "G_4", "F", "Q_2", "F_4"):
        assert name in result.output
    rec = record_of(invoke(runner, "catalog", "show", "F_1"))
    assert rec["marked"] == ["x", "y", "z"]
    assert any(line.startswith("vertices") for line in rec["graph"])


def test_catalog_export_graph_round_trip(runner, tmp_path):
    path = tmp_path / "f.graph"
    record_of(invoke(runner, "catalog", "export", "F", str(path), "--as", "graph"))
    rec = record_of(invoke(runner, "info", str(path)))
    assert rec["kind"] == "graph"
    assert rec["structure"]["rank"] == 2


def test_verify_quotients_exit_zero(runner, tmp_path):
    result = invoke(runner, "verify", "--check", "quotients",
                    "--report-dir", str(tmp_path / "reports"))
    assert result.exit_code == 0
    assert (tmp_path / "reports" / "quotients.txt").exists()
    assert (tmp_path / "reports" / "quotients.json").exists()
    data = json.loads((tmp_path / "reports" / "quotients.json").read_text())
    assert data["verdict"] == "pass"


def test_verify_gf_empty_exits_one(runner, tmp_path):
    # The emptiness sweep finds genuine witnesses, so the asserted check
    # fails and the exit status reflects it.
    result = invoke(runner, "verify", "--check", "gf-empty",
                    "--max-elements", "6",
                    "--report-dir", str(tmp_path / "reports"))
    assert result.exit_code == 1
    data = json.loads((tmp_path / "reports" / "gf-empty-k1.json").read_text())
    assert data["verdict"] == "fail"
    assert data["failures"]


def test_verify_main_with_corpus_file(runner, tmp_path, corpus6):
    corpus_path = tmp_path / "corpus.txt"
    corpus6.save(corpus_path)
    result = invoke(runner, "verify", "--check", "main",
                    "--max-elements", "6", "--corpus", str(corpus_path),
                    "--report-dir", str(tmp_path / "reports"))
    assert result.exit_code == 0
    assert "PASS main" in result.output


def test_verify_corpus_bound_mismatch(runner, tmp_path, corpus6):
    corpus_path = tmp_path / "corpus.txt"
    corpus6.save(corpus_path)
    result = invoke(runner, "verify", "--check", "main",
                    "--max-elements", "7", "--corpus", str(corpus_path))
    assert result.exit_code == 2


def test_verify_unknown_check(runner):
    result = invoke(runner, "verify", "--check", "bogus")
    assert result.exit_code == 2
