import json

from polyvis import gen_pseudo_triangle, serialize_graph, visibility_graph, write_polygon
from polyvis.cli import main

from conftest import PT6_EDGES, T5_EDGES


def _graph_file(tmp_path, n, edges, name="g.txt"):
    lines = [f"{n} {len(edges)}"] + [f"{u} {v}" for u, v in sorted(edges)]
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_solve_k3(tmp_path, capsys):
    path = _graph_file(tmp_path, 3, {(0, 1), (1, 2), (0, 2)})
    assert main(["solve", path]) == 0
    out = capsys.readouterr()
    assert out.out == "0 1 2\n"
    assert "kind: tower" in out.err


def test_solve_pt6(tmp_path, capsys):
    path = _graph_file(tmp_path, 6, PT6_EDGES)
    assert main(["solve", path, "--kind", "pseudo-triangle"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "0 1 2 3 4 5" in lines


def test_solve_k33_exit_2(tmp_path, capsys):
    path = _graph_file(tmp_path, 6, {(u, v + 3) for u in range(3) for v in range(3)})
    assert main(["solve", path]) == 2
    assert capsys.readouterr().out == ""


def test_solve_bad_file_exit_1(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 0\n")
    assert main(["solve", str(path)]) == 1
    assert "error" in capsys.readouterr().err


def test_solve_missing_file_exit_1(capsys):
    assert main(["solve", "/nonexistent/graph.txt"]) == 1


def test_solve_json_report(tmp_path, capsys):
    path = _graph_file(tmp_path, 5, T5_EDGES)
    assert main(["solve", path, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "tower"
    assert [0, 1, 2, 3, 4] in report["candidates"]
    assert report["millis"] >= 0
    assert report["input_id"] == path


def test_gen_visgraph_solve_pipeline(tmp_path, capsys):
    poly_path = str(tmp_path / "p.txt")
    graph_path = str(tmp_path / "g.txt")
    assert main(["gen", "--kind", "pseudo-triangle", "--n", "9", "--seed", "5",
                 "-o", poly_path]) == 0
    assert main(["visgraph", poly_path, "-o", graph_path]) == 0
    assert main(["solve", graph_path, "--kind", "pseudo-triangle"]) == 0
    out = capsys.readouterr().out
    assert "0 1 2 3 4 5 6 7 8" in out.splitlines()


def test_gen_pseudo_tower_writes_graph(tmp_path):
    out_path = tmp_path / "pt.txt"
    assert main(["gen", "--kind", "pseudo-tower", "--n", "8", "--seed", "1",
                 "-o", str(out_path)]) == 0
    text = out_path.read_text()
    assert text.startswith("# pseudo-tower chains:")
    assert "8 " in text.splitlines()[1]


def test_gen_invalid_n_exit_1(capsys):
    assert main(["gen", "--kind", "tower", "--n", "3"]) == 1


def test_auto_solves_generated_pseudo_tower(tmp_path, capsys):
    out_path = tmp_path / "pt.txt"
    assert main(["gen", "--kind", "pseudo-tower", "--n", "9", "--seed", "2",
                 "-o", str(out_path)]) == 0
    capsys.readouterr()
    assert main(["solve", str(out_path)]) == 0
    out = capsys.readouterr()
    assert "kind: pseudo-tower" in out.err
    for line in out.out.splitlines():
        assert sorted(int(v) for v in line.split()) == list(range(9))


def test_verify_true_boundary(tmp_path, capsys):
    path = _graph_file(tmp_path, 6, PT6_EDGES)
    assert main(["verify", path, "0", "1", "2", "3", "4", "5"]) == 0
    assert capsys.readouterr().out == "ok\n"


def test_verify_non_cycle_exit_2(tmp_path, capsys):
    path = _graph_file(tmp_path, 6, PT6_EDGES)
    assert main(["verify", path, "0", "2", "4", "1", "3", "5"]) == 2
    assert capsys.readouterr().out == "rejected\n"


def test_render(tmp_path, capsys):
    poly = gen_pseudo_triangle(7, 3)
    poly_path = tmp_path / "p.txt"
    poly_path.write_text(write_polygon(poly))
    graph_path = tmp_path / "g.txt"
    graph_path.write_text(serialize_graph(visibility_graph(poly)))
    assert main(["render", str(poly_path), "--graph", str(graph_path)]) == 0
    svg = capsys.readouterr().out
    assert svg.startswith("<svg") and "<line" in svg


def test_bench_csv(capsys):
    assert main(["bench", "--kind", "tower", "--sizes", "6", "8",
                 "--repeat", "2", "--seed", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "kind,n,m,millis,candidates"
    assert len(lines) == 5
    for row in lines[1:]:
        kind, n, m, millis, cands = row.split(",")
        assert kind == "tower"
        assert int(n) in (6, 8)
        assert float(millis) >= 0
        assert int(cands) >= 1


def test_usage_error_exit_1(capsys):
    assert main(["solve"]) == 1
    assert main(["frobnicate"]) == 1


def test_deterministic_stdout(tmp_path, capsys):
    path = _graph_file(tmp_path, 6, PT6_EDGES)
    main(["solve", path, "--kind", "pseudo-triangle"])
    first = capsys.readouterr().out
    main(["solve", path, "--kind", "pseudo-triangle"])
    assert capsys.readouterr().out == first

    main(["gen", "--kind", "pseudo-triangle", "--n", "10", "--seed", "2"])
    g1 = capsys.readouterr().out
    main(["gen", "--kind", "pseudo-triangle", "--n", "10", "--seed", "2"])
    assert capsys.readouterr().out == g1
