import json
import subprocess
import sys

import pytest

from labelcap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cap_formula_json(capsys):
    code, out, _ = run(capsys, "cap", "--labels", "ATA", "--method", "formula", "--json")
    data = json.loads(out)
    assert code == 0
    assert list(data) == ["labels", "alphabet", "method", "lambda", "log2_lambda", "polynomial", "n_counts", "notes"]
    assert data["log2_lambda"] == pytest.approx(0.6942, abs=1e-4)
    assert data["polynomial"] == [0, -1, -1, 1]


def test_cap_automaton_text(capsys):
    code, out, _ = run(capsys, "cap", "--labels", "A", "--method", "automaton")
    assert code == 0 and "cap=1\t" not in out and "cap=1" in out


def test_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "cap", "--labels", "CGCG", "--method", "all", "--json", "--nmax", "8")
    _, second, _ = run(capsys, "cap", "--labels", "CGCG", "--method", "all", "--json", "--nmax", "8")
    assert first == second
    data = json.loads(first)
    assert [r["method"] for r in data["results"]] == ["formula", "automaton", "oracle-estimate"]
    assert data["flags"] == []


def test_floats_have_twelve_digits(capsys):
    _, out, _ = run(capsys, "cap", "--labels", "AC", "--json")
    assert '"lambda": 1.61803398875,' in out


def test_cap_all_uncovered(capsys):
    code, out, _ = run(capsys, "cap", "--labels", "AAGAAGAA", "--method", "all", "--nmax", "6")
    assert code == 0 and "no closed form" in out


def test_minlabels(capsys):
    code, out, _ = run(capsys, "minlabels", "--len", "2", "--q", "4")
    assert code == 0 and out.strip() == "10"


def test_map(capsys):
    _, out, _ = run(capsys, "map", "--labels", "AC,G", "--x", "AAACGATGACAC")
    assert out.strip() == "001020021010"


def test_classify_json(capsys):
    _, out, _ = run(capsys, "classify", "--labels", "AATAA", "--json")
    row = json.loads(out)["labels"][0]
    assert row["class"] == "nonperiodic-period-one-overlap" and row["class_param"] == 2


def test_count_both(capsys, tmp_path):
    path = tmp_path / "set.txt"
    code, out, _ = run(capsys, "count", "--labels", "AC", "--n", "3", "--method", "both", "--emit-set", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and data["agree"] and data["oracle"] == [[3, 3]]
    assert path.read_text().split() == ["000", "010", "100"]


def test_order(capsys):
    code, out, _ = run(capsys, "order", "--lmax", "3", "--json")
    data = json.loads(out)
    assert data["classes"][0]["representatives"] == ["A"]


def test_graph_commands(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("2\n0 0\n0 1\n1 1\n")
    _, out, _ = run(capsys, "pathunique", "--in", str(g))
    assert out.strip() == "false"
    _, out, _ = run(capsys, "graph", "pathunique", "--in", str(g), "--json")
    assert json.loads(out)["path_unique"] is False
    dot = tmp_path / "e.dot"
    _, out, _ = run(capsys, "graph", "extremal", "--n", "4", "--dot", str(dot))
    assert out.splitlines()[0] == "4" and len(out.splitlines()) == 7
    assert dot.read_text().startswith("digraph")


def test_search_pairs(capsys):
    _, out, _ = run(capsys, "search-pairs", "--q", "3", "--json")
    data = json.loads(out)
    assert data["witness_types"] == ["aa,ab", "aa,bb", "ab,ba"]
    assert data["lambda"] == pytest.approx(2.2055694304, abs=1e-9)


def test_forbidden(capsys):
    _, out, _ = run(capsys, "forbidden", "--alphabet", "ACGT", "--patterns", "AGT,CGT", "--json")
    assert json.loads(out)["lambda"] == pytest.approx(3.86619826251, abs=1e-9)


def test_bound(capsys):
    _, out, _ = run(capsys, "bound", "--which", "three", "--json")
    assert json.loads(out)["meets_bound"] is True


def test_dot_for_presentation(capsys, tmp_path):
    dot = tmp_path / "p.dot"
    run(capsys, "cap", "--labels", "ATA", "--dot", str(dot))
    assert "->" in dot.read_text()


class TestExitCodes:
    def test_invalid_labels(self, capsys):
        code, _, err = run(capsys, "cap", "--labels", "AC,ACG")
        assert code == 3 and err.startswith("error: invalid labels")

    def test_budget(self, capsys):
        code, _, err = run(capsys, "count", "--labels", "AC", "--n", "6", "--method", "oracle", "--budget", "10")
        assert code == 4 and "budget" in err

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LABELCAP_BUDGET", "10")
        code, _, _ = run(capsys, "count", "--labels", "AC", "--n", "6", "--method", "oracle")
        assert code == 4

    def test_scope(self, capsys):
        assert run(capsys, "order", "--lmax", "6")[0] == 5
        assert run(capsys, "minlabels", "--len", "3")[0] == 5
        assert run(capsys, "cap", "--labels", "AAGAAGAA", "--method", "formula")[0] == 5

    def test_usage(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["cap"])
        assert exc.value.code == 2

    def test_missing_graph_file(self, capsys, tmp_path):
        assert run(capsys, "pathunique", "--in", str(tmp_path / "nope.txt"))[0] == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "labelcap.cli", "minlabels", "--len", "1", "--q", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
