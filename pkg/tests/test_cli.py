import json

import pytest

from mutlab.cli import main

A3_OBJ = {"n": 3, "B": [[0, 1, 0], [-1, 0, 1], [0, -1, 0]], "indexing": 1}
FIG1_OBJ = {
    "n": 4,
    "B": [[0, 1, -1, -1], [-1, 0, 1, -1], [2, -2, 0, -2], [1, 1, 1, 0]],
    "indexing": 1,
}
TRIANGLE_OBJ = {"n": 3, "B": [[0, -1, 1], [1, 0, -1], [-1, 1, 0]], "indexing": 1}


@pytest.fixture
def a3_file(tmp_path):
    p = tmp_path / "a3.json"
    p.write_text(json.dumps(A3_OBJ))
    return str(p)


@pytest.fixture
def fig1_file(tmp_path):
    p = tmp_path / "fig1.json"
    p.write_text(json.dumps(FIG1_OBJ))
    return str(p)


class TestMutate:
    def test_word_two(self, a3_file, tmp_path, capsys):
        assert main(["mutate", "--input", a3_file, "--word", "2"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["c"] == [[1, 0, 0], [0, -1, 0], [0, 1, 1]]
        assert out["B"] == [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]
        assert "A" in out

    def test_empty_word_echoes_with_identity_c(self, a3_file, capsys):
        assert main(["mutate", "--input", a3_file, "--word", "[]"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["B"] == A3_OBJ["B"]
        assert out["c"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_malformed_json_exits_2(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        assert main(["mutate", "--input", str(p), "--word", "1"]) == 2

    def test_not_skew_symmetrizable_exits_2(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text(json.dumps({"B": [[0, 1], [1, 0]]}))
        assert main(["mutate", "--input", str(p), "--word", "1"]) == 2

    def test_word_out_of_range_exits_2(self, a3_file):
        assert main(["mutate", "--input", a3_file, "--word", "7"]) == 2


class TestCheck:
    def test_acyclic_passes(self, a3_file, capsys):
        assert main(["check", "--input", a3_file]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 3
        assert "admissible: True" in out

    def test_triangle_with_good_companion(self, tmp_path, capsys):
        obj = dict(TRIANGLE_OBJ)
        obj["A"] = [[2, 1, -1], [1, 2, -1], [-1, -1, 2]]
        p = tmp_path / "tri.json"
        p.write_text(json.dumps(obj))
        assert main(["check", "--input", str(p)]) == 0
        assert capsys.readouterr().out.count("PASS") == 3

    def test_figure1_fails_with_witness(self, tmp_path, capsys):
        obj = dict(FIG1_OBJ)
        # all-negative companion of the figure-1 matrix
        obj["A"] = [
            [2, -1, -1, -1],
            [-1, 2, -1, -1],
            [-2, -2, 2, -2],
            [-1, -1, -1, 2],
        ]
        p = tmp_path / "f.json"
        p.write_text(json.dumps(obj))
        assert main(["check", "--input", str(p)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "witness" in out


class TestWalk:
    def test_a3_walks_pass(self, a3_file, capsys):
        rc = main([
            "walk", "--input", a3_file,
            "--depth", "8", "--trials", "100", "--rng-seed", "1",
        ])
        assert rc == 0
        out = json.loads(capsys.readouterr().out)
        assert out["all_passed"] is True
        assert out["trials"] == 100

    def test_non_acyclic_exits_2(self, fig1_file):
        assert main(["walk", "--input", fig1_file, "--depth", "2", "--trials", "1"]) == 2


class TestExplore:
    def test_a3(self, a3_file, capsys):
        assert main(["explore", "--input", a3_file, "--depth", "3"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["seeds_per_level"][0] == 1
        assert out["distinct_seeds"] >= 1


class TestDot:
    def test_golden(self, a3_file, capsys):
        assert main(["dot", "--input", a3_file]) == 0
        assert capsys.readouterr().out == (
            "digraph diagram {\n"
            "  1;\n  2;\n  3;\n"
            "  2 -> 1;\n"
            "  3 -> 2;\n"
            "}\n"
        )


class TestOracle:
    def test_figure1(self, fig1_file, capsys):
        assert main(["oracle", "--input", fig1_file]) == 0
        captured = capsys.readouterr().out
        assert "NO admissible companion (64 assignments checked)" in captured
        payload = json.loads(captured[captured.index("{"):])
        assert payload["exists"] is False
        assert payload["assignments_checked"] == 64

    def test_a3(self, a3_file, capsys):
        assert main(["oracle", "--input", a3_file]) == 0
        captured = capsys.readouterr().out
        payload = json.loads(captured[captured.index("{"):])
        assert payload["exists"] is True
        assert len(payload["companions"]) == 4
