"""End-to-end command-line tests, run in process."""

import json

import pytest

from lefgraph.cli import _exit_code, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert err == ""
    return code, json.loads(out)


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.graph"
    path.write_text("vertices 4\n0 1\n1 2\n2 3\n3 0\n")
    return str(path)


def test_analyze_named_petersen(capsys):
    code, report = run_json(capsys, "analyze", "--named", "petersen")
    assert code == 0
    graph = report["graph"]
    assert graph["n"] == 10 and graph["edge_count"] == 15
    assert graph["f_vector"] == [10, 15]
    assert graph["euler_characteristic"] == -5
    assert graph["betti"] == [1, 6]
    assert graph["star_shaped"] is False
    assert graph["components"] == 1
    assert all(c["passed"] for c in report["checks"])


def test_analyze_graph_file_with_inline_map(capsys, c4_file):
    code, report = run_json(capsys, "analyze", c4_file, "--map", "1,2,3,0")
    assert code == 0
    m = report["map"]
    assert m["kind"] == "automorphism"
    assert m["lefschetz"] == 0
    assert m["fixed_simplices"] == []
    assert m["attractor_size"] == 4
    assert m["zeta"]["text"] == "1"
    assert all(c["passed"] for c in report["checks"])


def test_analyze_with_map_file(capsys, c4_file, tmp_path):
    map_path = tmp_path / "refl.map"
    map_path.write_text("# vertex-fixing reflection\nmap 0 3 2 1\n")
    code, report = run_json(capsys, "analyze", c4_file, "--map", str(map_path))
    assert code == 0
    m = report["map"]
    assert m["image"] == [0, 3, 2, 1]
    assert m["lefschetz"] == 2
    assert [r["simplex"] for r in m["fixed_simplices"]] == [[0], [2]]
    assert all(r["index"] == 1 for r in m["fixed_simplices"])


def test_analyze_endomorphism_reports_attractor(capsys, tmp_path):
    path = tmp_path / "star.graph"
    path.write_text("vertices 4\n0 1\n0 2\n0 3\n")
    code, report = run_json(capsys, "analyze", str(path), "--map", "0,1,1,1")
    assert code == 0
    m = report["map"]
    assert m["kind"] == "endomorphism"
    assert m["attractor_size"] == 2
    assert m["zeta"] is None
    assert m["brouwer_witness"] is not None


def test_text_output_has_pass_lines_and_is_stable(capsys):
    code1, out1, err1 = run(capsys, "analyze", "--named", "octahedron")
    code2, out2, err2 = run(capsys, "analyze", "--named", "octahedron")
    assert code1 == code2 == 0
    assert out1 == out2 and err1 == err2 == ""
    assert "PASS d_squared_zero" in out1
    assert "euler_characteristic: 2" in out1


def test_aut_petersen(capsys):
    code, report = run_json(capsys, "aut", "--named", "petersen")
    assert code == 0
    group = report["group"]
    assert group["order"] == 120
    assert group["lefschetz_multiset"] == [[-5, 1], [0, 24], [1, 80], [3, 15]]
    assert group["average_lefschetz"] == 1
    assert len(report["findings"]) == 1
    assert all(c["passed"] for c in report["checks"])


def test_aut_curvature_table(capsys):
    code, report = run_json(capsys, "aut", "--named", "complete:3", "--curvature")
    assert code == 0
    table = {tuple(entry["simplex"]): entry["kappa"]
             for entry in report["curvature"]}
    assert table[(0,)] == {"num": 1, "den": 3}
    assert table[(0, 1)] == 0
    assert table[(0, 1, 2)] == 0


def test_aut_orbigraph(capsys):
    code, report = run_json(capsys, "aut", "--named", "petersen", "--orbigraph")
    assert code == 0
    q = report["orbigraph"]
    assert q["classes"] == [list(range(10))]
    assert q["n"] == 1 and q["edge_count"] == 0
    assert q["euler_characteristic"] == 1


def test_zeta_single_map(capsys, c4_file):
    code, report = run_json(capsys, "zeta", c4_file, "--map", "0,3,2,1")
    assert code == 0
    zeta = report["zeta"]
    assert zeta["factored"] == [[1, -2, 0], [2, 1, 0]]
    assert zeta["numerator"] == [1, 1]
    assert zeta["denominator"] == [1, -1]
    assert zeta["text"] == "(1-z)^-2 (1-z^2)"
    names = [c["name"] for c in report["checks"]]
    assert "zeta_det_equals_product" in names
    assert "zeta_series_consistent" in names
    assert all(c["passed"] for c in report["checks"])


def test_zeta_series_order_flag(capsys, c4_file):
    code, report = run_json(capsys, "zeta", c4_file, "--map", "0,3,2,1",
                            "--series-order", "6")
    assert code == 0
    series = next(c for c in report["checks"]
                  if c["name"] == "zeta_series_consistent")
    assert series["lhs"] == [2, 0, 2, 0, 2, 0]


def test_zeta_group(capsys):
    code, report = run_json(capsys, "zeta", "--named", "cycle:5", "--group")
    assert code == 0
    assert report["group"]["order"] == 10
    assert report["zeta"]["text"] == "(1-z)^-5 (1+z)^5"


def test_zeta_rejects_endomorphism(capsys, tmp_path):
    path = tmp_path / "star.graph"
    path.write_text("vertices 4\n0 1\n0 2\n0 3\n")
    code, out, err = run(capsys, "zeta", str(path), "--map", "0,1,1,1")
    assert code == 1
    assert "automorphism" in err


def test_zeta_requires_map_or_group(capsys, c4_file):
    code, _, err = run(capsys, "zeta", c4_file)
    assert code == 1 and "--map" in err
    code, _, err = run(capsys, "zeta", c4_file, "--map", "0,1,2,3", "--group")
    assert code == 1 and "not both" in err


def test_random_exhaustive(capsys):
    code, report = run_json(capsys, "random", "--n", "3", "--exhaustive")
    assert code == 0
    assert report["graphs"] == 8
    assert report["expected_lefschetz"] == {"num": 11, "den": 8}
    assert report["expected_lefschetz_text"] == "11/8"


def test_random_sampled_is_deterministic(capsys):
    args = ("random", "--n", "4", "--samples", "5", "--p", "1/3", "--seed", "9")
    code1, report1 = run_json(capsys, *args)
    code2, report2 = run_json(capsys, *args)
    assert code1 == code2 == 0
    assert report1 == report2
    assert report1["mode"] == "sample"
    assert report1["edge_probability"] == {"num": 1, "den": 3}


def test_random_needs_a_mode(capsys):
    code, _, err = run(capsys, "random", "--n", "3")
    assert code == 1 and "--exhaustive or --samples" in err
    code, _, err = run(capsys, "random", "--n", "7", "--exhaustive")
    assert code == 1 and "capped" in err
    code, _, err = run(capsys, "random", "--n", "3", "--samples", "2",
                       "--p", "2/0")
    assert code == 1 and "probability" in err


def test_verify_corpus(capsys):
    code, report = run_json(capsys, "verify-corpus", "--endomorphisms", "1",
                            "--seed", "1")
    assert code == 0
    assert report["passed"] is True
    assert report["graphs"] == 32
    assert report["failures"] == []


def test_input_errors_exit_1(capsys, tmp_path, c4_file):
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.graph"))
    assert code == 1 and "No such file" in err
    bad = tmp_path / "bad.graph"
    bad.write_text("vertices 3\n1 1\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1 and "line 2" in err
    code, _, err = run(capsys, "analyze", c4_file, "--map", "0,1")
    assert code == 1 and "4 vertices" in err
    code, _, err = run(capsys, "analyze", "--named", "nonesuch")
    assert code == 1
    code, _, err = run(capsys, "analyze", "--named", "cycle:2")
    assert code == 1
    code, _, err = run(capsys, "analyze", "--named", "cycle:x")
    assert code == 1 and "not an integer" in err
    code, _, err = run(capsys, "analyze", c4_file, "--named", "petersen")
    assert code == 1 and "not both" in err
    code, _, err = run(capsys, "analyze")
    assert code == 1 and "no graph given" in err


def test_map_file_errors(capsys, c4_file, tmp_path):
    twice = tmp_path / "twice.map"
    twice.write_text("map 0 1 2 3\nmap 1 2 3 0\n")
    code, _, err = run(capsys, "analyze", c4_file, "--map", str(twice))
    assert code == 1 and "more than one map line" in err
    empty = tmp_path / "empty.map"
    empty.write_text("# nothing\n")
    code, _, err = run(capsys, "analyze", c4_file, "--map", str(empty))
    assert code == 1 and "no 'map' line" in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonesuch-command"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--named", "petersen", "--format", "bogus"])
    assert exc.value.code == 1


def test_exit_code_two_flags_failed_checks():
    assert _exit_code([{"passed": True}, {"passed": True}]) == 0
    assert _exit_code([{"passed": True}, {"passed": False}]) == 2
