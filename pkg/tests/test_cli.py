"""Command-line interface: formats, round-trips, exit codes."""

import json

import pytest

from conftest import DIAMOND
from zonoq.cli import run
from zonoq.exact import laurent_from_json, polytq_from_json
from zonoq import graded_count, series

HEXAGON_DOC = {"name": "hexagon", "d": 2, "n": 3,
               "matrix": [[1, 0, 1], [0, 1, 1]]}


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.json"
    path.write_text(json.dumps(HEXAGON_DOC))
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestQcount:
    def test_hexagon_m1(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["qcount", hexagon_file, "--m", "1"])
        assert code == 0
        assert doc["qcount"] == [[0, "1"], [1, "2"], [2, "3"], [3, "1"]]
        assert doc["m"] == 1 and doc["interior"] is False

    def test_interior(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["qcount", hexagon_file, "--interior"])
        assert code == 0
        assert doc["qcount"] == [[0, "1"]]

    def test_roundtrip(self, hexagon_file, hexagon, capsys):
        _, doc = run_json(capsys, ["qcount", hexagon_file, "--m", "2"])
        assert laurent_from_json(doc["qcount"]) == graded_count(hexagon, 2).value


class TestTutte:
    def test_hexagon(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["tutte", hexagon_file])
        assert code == 0
        assert doc["tutte"] == [[0, 1, "1"], [1, 0, "1"], [2, 0, "1"]]


class TestEhrpoly:
    def test_hexagon(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["ehrpoly", hexagon_file])
        assert code == 0
        assert doc["tpower"] == [[0, 0, "1"], [1, 1, "3"], [2, 2, "3"],
                                 [3, 1, "-1"], [3, 3, "1"]]
        assert doc["qbinom_basis"][0] == [[0, "1"]]
        assert doc["qbinom_basis"][1] == [[1, "2"], [2, "3"], [3, "1"]]


class TestSeries:
    def test_numerator_roundtrip(self, hexagon_file, hexagon, capsys):
        code, doc = run_json(capsys, ["series", hexagon_file])
        assert code == 0 and doc["order"] == 3
        assert polytq_from_json(doc["numerator"]) == series(hexagon).numerator

    def test_interior(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["series", hexagon_file, "--interior"])
        assert code == 0
        assert all(te >= 1 for te, _, _ in doc["numerator"])


class TestPresentation:
    def test_hexagon(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["presentation", hexagon_file])
        assert code == 0
        assert doc["degree1_dim"] == 7
        assert doc["linear_generators"] == ["z_{1} + z_{2} - z_{3}"]
        assert "binomial" in doc["note"]


class TestGorenstein:
    def test_hexagon(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["gorenstein", hexagon_file])
        assert code == 0
        assert doc["verdict"] == "circuit-components"
        assert doc["palindrome"] is True

    def test_not_gorenstein(self, tmp_path, capsys):
        path = tmp_path / "u13.json"
        path.write_text(json.dumps({"matrix": [[1, 1, 1]]}))
        code, doc = run_json(capsys, ["gorenstein", str(path)])
        assert code == 0
        assert doc["verdict"] == "not-gorenstein"
        assert doc["palindrome"] is None
        assert doc["witness"] == [1, 2, 3]


class TestVerify:
    def test_hexagon_passes(self, hexagon_file, capsys):
        code, doc = run_json(capsys, ["verify", hexagon_file, "--m-max", "2"])
        assert code == 0
        assert doc["status"] == "pass" and doc["witnesses"] == []
        assert all(c["status"] in ("pass", "skipped") for c in doc["checks"])
        names = {c["check"] for c in doc["checks"]}
        assert names == {"lattice-vs-tutte", "zonalg-vs-graded",
                         "series-vs-counts", "reciprocity", "degree1-dim",
                         "thickening"}

    def test_diamond_exits_2(self, tmp_path, capsys):
        path = tmp_path / "diamond.json"
        path.write_text(json.dumps({"matrix": DIAMOND}))
        code = run(["verify", str(path)])
        captured = capsys.readouterr()
        assert code == 2
        assert "unimodular" in captured.err

    def test_forced_mismatch_exits_1(self, hexagon_file, capsys, monkeypatch):
        import zonoq.cli as cli
        monkeypatch.setattr(cli, "tutte_thickened", lambda T, d, m: T)
        code, doc = run_json(capsys, ["verify", hexagon_file, "--m-max", "2"])
        assert code == 1
        assert doc["status"] == "fail"
        assert any(w.startswith("thickening") for w in doc["witnesses"])


class TestInputErrors:
    def test_missing_file(self, capsys):
        assert run(["tutte", "/nonexistent.json"]) == 2
        assert "error" in capsys.readouterr().err

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert run(["tutte", str(path)]) == 2

    def test_rank_deficient(self, tmp_path, capsys):
        path = tmp_path / "deficient.json"
        path.write_text(json.dumps({"matrix": [[1, 1], [1, 1]]}))
        assert run(["tutte", str(path)]) == 2

    def test_dimension_mismatch(self, tmp_path, capsys):
        path = tmp_path / "mismatch.json"
        path.write_text(json.dumps({"d": 3, "matrix": [[1]]}))
        assert run(["qcount", str(path)]) == 2

    def test_guard_named_in_message(self, tmp_path, capsys):
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"matrix": [[1] * 17]}))
        assert run(["tutte", str(path)]) == 2
        assert "guard" in capsys.readouterr().err

    def test_unknown_subcommand(self, hexagon_file, capsys):
        assert run(["frobnicate", hexagon_file]) == 2

    def test_decimal_string_entries(self, tmp_path, capsys):
        path = tmp_path / "strings.json"
        path.write_text(json.dumps({"matrix": [["1", "0"], ["0", "1"]]}))
        code, doc = run_json(capsys, ["tutte", str(path)])
        assert code == 0
        assert doc["tutte"] == [[2, 0, "1"]]

    def test_float_entries_rejected(self, tmp_path, capsys):
        path = tmp_path / "floats.json"
        path.write_text(json.dumps({"matrix": [[1.5, 0.0], [0.0, 1.0]]}))
        assert run(["tutte", str(path)]) == 2
        assert "integer" in capsys.readouterr().err
