import json

import pytest

from amtt.cli import main

MATRIX_2 = json.dumps({"n": 2, "entries": [["3", "5"], ["-3", "-5"]]})
K4 = json.dumps({"n": 4, "edges": [[u, v] for u in range(1, 5) for v in range(1, 5) if u != v]})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_match(capsys):
    code, out, _ = run(capsys, "verify", "--inline", MATRIX_2, "--u", "1", "--w", "1")
    report = json.loads(out)
    assert code == 0
    assert report["lhs"] == report["rhs"] == "-5" and report["match"] is True


def test_verify_from_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(MATRIX_2)
    code, out, _ = run(capsys, "verify", "--input", str(path), "--u", "1", "--w", "2", "--format", "table")
    assert code == 0 and "match       = True" in out


def test_verify_non_semi_laplacian_exits_3(capsys):
    bad = json.dumps({"n": 2, "entries": [["1", "0"], ["0", "1"]]})
    code, out, err = run(capsys, "verify", "--inline", bad, "--u", "1", "--w", "1")
    assert code == 3 and out == "" and "column 1" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--inline", MATRIX_2, "--u", "1", "--w", "1,2"],
        ["verify", "--inline", "{not json", "--u", "1", "--w", "1"],
        ["verify", "--inline", MATRIX_2, "--u", "3", "--w", "1"],
        ["verify", "--inline", json.dumps({"n": 2, "entries": [["1.5x", "0"], ["0", "0"]]}), "--u", "1", "--w", "1"],
        ["verify", "--u", "1", "--w", "1"],
        ["count-trees", "--inline", json.dumps({"edges": []})],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_enumerate_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--u", "1", "--w", "1")
    assert code == 0 and out.splitlines() == ["1", "[[1, 2]]"]
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--u", "1", "--w", "1", "--signs")
    lines = out.splitlines()
    assert lines[0] == "3" and all(json.loads(line)["epsilon"] == 1 for line in lines[1:])
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--u", "1,2", "--w", "1,2")
    assert out.splitlines() == ["1", "[]"]


def test_enumerate_cap_exits_3(capsys):
    code, _, _ = run(capsys, "enumerate", "--n", "6", "--u", "1", "--w", "1", "--cap", "5")
    assert code == 3


def test_sign_command(capsys):
    forest = json.dumps({"n": 2, "edges": [[1, 2]]})
    code, out, _ = run(capsys, "sign", "--inline", forest, "--u", "1", "--w", "2")
    obj = json.loads(out)
    assert code == 0 and obj["epsilon"] == 1 and obj["pi"] == {"1": 2}
    code, _, _ = run(capsys, "sign", "--inline", forest, "--u", "1,2", "--w", "1,2")
    assert code == 3


def test_symbolic_command(capsys):
    code, out, _ = run(capsys, "symbolic", "--n", "2", "--u", "1", "--w", "1")
    obj = json.loads(out)
    assert code == 0 and obj["lhs"] == [{"coeff": -1, "exponents": {"x_1_2": 1}}]
    code, out, _ = run(capsys, "symbolic", "--n", "3")
    obj = json.loads(out)
    assert code == 0 and obj["checks"] == 19 and obj["mismatches"] == 0
    code, _, _ = run(capsys, "symbolic", "--n", "5")
    assert code == 3


def test_fuzz_command_deterministic(capsys):
    code, first, _ = run(capsys, "fuzz", "--n-max", "4", "--trials", "25", "--seed", "7")
    assert code == 0 and json.loads(first)["failure_count"] == 0
    _, second, _ = run(capsys, "fuzz", "--n-max", "4", "--trials", "25", "--seed", "7")
    assert first == second
    code, out, _ = run(capsys, "fuzz", "--n-max", "1", "--trials", "1", "--seed", "0")
    assert json.loads(out)["checks"] == 1


def test_count_trees(capsys):
    code, out, _ = run(capsys, "count-trees", "--inline", K4, "--root", "1")
    obj = json.loads(out)
    assert code == 0 and obj["spanning_trees"] == 16 and obj["tree_weight"] == "16" and obj["agree"]
    path = json.dumps({"n": 3, "edges": [[1, 2, "1"], [2, 1, "1"], [2, 3, "1"], [3, 2, "1"]]})
    code, out, _ = run(capsys, "count-trees", "--inline", path)
    assert json.loads(out)["tree_weight"] == "1"
    code, out, _ = run(capsys, "count-trees", "--inline", json.dumps({"n": 1, "edges": []}))
    assert json.loads(out)["determinant"] == "1"


def test_count_trees_weighted(capsys):
    # arborescences from 1 on 1->2 (w=2), 1->3 (w=3), 2->3 (w=5): 2*3 + 2*5
    g = json.dumps({"n": 3, "edges": [[1, 2, "2"], [1, 3, "3"], [2, 3, "5"]]})
    code, out, _ = run(capsys, "count-trees", "--inline", g)
    obj = json.loads(out)
    assert code == 0 and obj["tree_weight"] == obj["enumerated_weight"] == "16"
