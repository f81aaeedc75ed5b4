from __future__ import annotations

import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from rectiplanar.cli import main
from rectiplanar.generators import gen_cycle, gen_lowerbound
from rectiplanar.graph import Graph, parse_graph

K4 = Graph.from_edges(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_test_c4(write, capsys):
    path = write("c4.txt", gen_cycle(4).to_text())
    assert main(["test", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rectilinear_planar"] is True


def test_test_k4_exit_2(write, capsys):
    path = write("k4.txt", K4.to_text())
    assert main(["test", path]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: not series-parallel")


def test_test_json_input_and_all_roots(write, capsys):
    g = gen_lowerbound(2).graph
    path = write("lb.json", g.to_json())
    assert main(["test", "--all-roots", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rectilinear_planar"] is True
    assert len(data["per_root_sets"]) == data["roots_tried"]


def test_test_false_verdict_exit_0(write, capsys):
    path = write("c3.txt", gen_cycle(3).to_text())
    assert main(["test", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rectilinear_planar"] is False
    assert data["reason"]


def test_parse_error_reports_line(write, capsys):
    path = write("bad.txt", "2 1\n0 2\n")
    assert main(["test", path]) == 2
    err = capsys.readouterr().err
    assert "error: parse error: line 2" in err


def test_missing_file(tmp_path, capsys):
    assert main(["test", str(tmp_path / "nope.txt")]) == 2
    assert capsys.readouterr().err.startswith("error: usage")


def test_draw_lowerbound_svg(write, tmp_path, capsys):
    path = write("lb.txt", gen_lowerbound(2).graph.to_text())
    svg = tmp_path / "lb.svg"
    js = tmp_path / "lb.json"
    assert main(["draw", path, "--svg", str(svg), "--json", str(js)]) == 0
    root = ET.fromstring(svg.read_bytes())
    assert root.tag.endswith("svg")
    data = json.loads(js.read_text())
    assert len(data["coords"]) == 90


def test_draw_false_verdict(write, capsys):
    path = write("c3.txt", gen_cycle(3).to_text())
    assert main(["draw", path]) == 0
    out = capsys.readouterr()
    assert "nothing to draw" in out.err
    assert json.loads(out.out)["rectilinear_planar"] is False


def test_gen_random_needs_seed(capsys):
    assert main(["gen", "random"]) == 2
    assert "seed" in capsys.readouterr().err


def test_gen_random_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["gen", "random", "--seed", "7", "--n-target", "20", "-o", str(a)]) == 0
    assert main(["gen", "random", "--seed", "7", "--n-target", "20", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert parse_graph(a.read_bytes()).n == 20


def test_gen_lowerbound_sidecar(tmp_path):
    out, side = tmp_path / "g.json", tmp_path / "side.json"
    assert main(["gen", "lowerbound", "--N", "2", "--format", "json", "-o", str(out), "--sidecar", str(side)]) == 0
    assert parse_graph(out.read_bytes()).n == 90
    assert len(json.loads(side.read_text())["g0_components"]) == 18


def test_gen_bad_lowerbound(capsys):
    assert main(["gen", "lowerbound", "--N", "3"]) == 2
    assert capsys.readouterr().err.startswith("error: invalid argument")


def test_gen_cycle(capsys):
    assert main(["gen", "cycle", "--n", "5"]) == 0
    assert parse_graph(capsys.readouterr().out) == gen_cycle(5)


def test_oracle(write, capsys):
    path = write("c4.txt", gen_cycle(4).to_text())
    assert main(["oracle", path]) == 0
    assert json.loads(capsys.readouterr().out) == {"feasible": True, "embeddings_tried": 1}


def test_oracle_cap(write, capsys):
    path = write("c20.txt", gen_cycle(20).to_text())
    assert main(["oracle", path]) == 2
    assert capsys.readouterr().err.startswith("error: size cap exceeded")


def test_bench_small(capsys):
    assert main(["bench", "--seed", "1", "--sizes", "64,128", "--runs", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,elapsed_ms"
    assert len(lines) == 3


def test_bench_requires_seed():
    with pytest.raises(SystemExit) as info:
        main(["bench"])
    assert info.value.code == 2


def test_corpus_small(capsys):
    assert main(["corpus", "--seed", "1", "--count", "10", "--sweep-edges", "5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["total"] == data["agree"]
    assert data["disagree"] == 0


def test_stdin_and_console_script():
    text = gen_cycle(4).to_text()
    proc = subprocess.run(
        [sys.executable, "-m", "rectiplanar.cli", "test", "-"],
        input=text.encode(),
        capture_output=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rectilinear_planar"] is True
