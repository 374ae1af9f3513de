import subprocess
import sys

import pytest

from clubsplit.cli import main
from clubsplit.graph import Clustering, format_edge_list, parse_clusters, parse_edge_list, parse_edit_log
from clubsplit.oracle import verify_solution

from conftest import double_square, path


def write_graph(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(format_edge_list(g))
    return str(p)


def test_cluster_two_triangles(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text("0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n")
    out = tmp_path / "c.txt"
    assert main(["cluster", "--input", str(src), "--algo", "2cced", "--output", str(out)]) == 0
    assert out.read_text() == "0 1 2\n3 4 5\n"
    assert (tmp_path / "c.txt.edits").read_text() == ""
    assert capsys.readouterr().out.startswith("cost 0 clusters 2")


def test_cluster_double_square_roundtrip(tmp_path):
    src = write_graph(tmp_path, double_square())
    out, edits = tmp_path / "c.txt", tmp_path / "e.txt"
    assert main(["cluster", "--input", src, "--algo", "2ccedvs", "--output", str(out),
                 "--edits", str(edits)]) == 0
    assert out.read_text() == "0 1 2 3\n0 4 5 6\n"
    assert edits.read_text() == "S 0 -> 1 3\n"
    # the emitted triple verifies: rebuild working ids from the replayed log
    g0 = parse_edge_list(open(src).read())
    log = parse_edit_log(edits.read_text())
    h = g0.copy()
    for op in log:
        h.apply(op)
    clustering = Clustering(h.connected_components(), h.origin)
    assert verify_solution(g0, log, clustering)
    assert sorted(map(sorted, clustering.origin_view)) == sorted(map(sorted, parse_clusters(out.read_text())))

    report = tmp_path / "r.txt"
    assert main(["eval", "--input", src, "--clusters", str(out), "--edits", str(edits),
                 "--output", str(report)]) == 0
    assert "cost 1\n" in report.read_text()


def test_missing_input(tmp_path, capsys):
    code = main(["cluster", "--input", str(tmp_path / "nope"), "--algo", "2cced",
                 "--output", str(tmp_path / "c")])
    assert code == 2
    assert "cannot read" in capsys.readouterr().err


def test_parse_error_has_line(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text("0 1\nfoo bar\n")
    assert main(["cluster", "--input", str(src), "--algo", "2cced", "--output", str(tmp_path / "c")]) == 2
    assert "line 2" in capsys.readouterr().err


def test_unknown_algorithm(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["cluster", "--input", "x", "--algo", "mcl", "--output", "y"])
    assert exc.value.code == 1


class TestEval:
    def setup_graph(self, tmp_path):
        src = tmp_path / "g.txt"
        src.write_text("0 1\n1 2\n0 2\n")
        clusters = tmp_path / "c.txt"
        clusters.write_text("0 1 2\n")
        return str(src), str(clusters)

    def test_with_truth(self, tmp_path, capsys):
        src, clusters = self.setup_graph(tmp_path)
        assert main(["eval", "--input", src, "--clusters", clusters, "--truth", clusters]) == 0
        out = capsys.readouterr().out
        assert "f_score 1.000000" in out and "intra_cd 1.000000" in out

    def test_without_truth(self, tmp_path, capsys):
        src, clusters = self.setup_graph(tmp_path)
        assert main(["eval", "--input", src, "--clusters", clusters]) == 0
        assert "f_score" not in capsys.readouterr().out

    def test_unknown_vertex(self, tmp_path):
        src, clusters = self.setup_graph(tmp_path)
        bad = tmp_path / "bad.txt"
        bad.write_text("0 1 9\n")
        assert main(["eval", "--input", src, "--clusters", str(bad)]) == 2


class TestGenerate:
    args = ["--vertices", "60", "--communities", "3", "--overlap", "0.2", "--p-in", "0.5",
            "--p-out", "0.03", "--seed", "5"]

    def test_byte_identical(self, tmp_path):
        for tag in "ab":
            assert main(["generate", "--output", str(tmp_path / f"{tag}.g"),
                         "--truth", str(tmp_path / f"{tag}.t")] + self.args) == 0
        assert (tmp_path / "a.g").read_bytes() == (tmp_path / "b.g").read_bytes()
        assert (tmp_path / "a.t").read_bytes() == (tmp_path / "b.t").read_bytes()

    def test_components_are_truth(self, tmp_path):
        g, t = tmp_path / "g", tmp_path / "t"
        assert main(["generate", "--output", str(g), "--truth", str(t), "--vertices", "40",
                     "--communities", "4", "--overlap", "0", "--p-in", "1", "--p-out", "0"]) == 0
        comps = parse_edge_list(g.read_text()).connected_components()
        assert sorted(map(sorted, comps)) == sorted(map(sorted, parse_clusters(t.read_text())))

    def test_invalid_overlap(self, tmp_path):
        assert main(["generate", "--output", str(tmp_path / "g"), "--truth", str(tmp_path / "t"),
                     "--overlap", "1.5"]) == 1


class TestOracle:
    def test_p4(self, tmp_path, capsys):
        assert main(["oracle", "--input", write_graph(tmp_path, path(4)), "--algo", "2cced"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_double_square(self, tmp_path, capsys):
        assert main(["oracle", "--input", write_graph(tmp_path, double_square()), "--algo", "2ccedvs"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_refusal(self, tmp_path):
        assert main(["oracle", "--input", write_graph(tmp_path, path(50)), "--algo", "2cced"]) == 3


def test_module_entry_point(tmp_path):
    src = write_graph(tmp_path, path(4))
    r = subprocess.run([sys.executable, "-m", "clubsplit", "oracle", "--input", src, "--algo", "2cced"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "1\n"
