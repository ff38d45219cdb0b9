import json
import math
import subprocess
import sys

import pytest

from alpha_spectra import enumerate_mixed_trees, graph_from_json, graph_to_json, new_mixed_graph, path_graph
from alpha_spectra.cli import main, parse_alpha_grid, parse_order_range
from alpha_spectra.errors import ValidationError


@pytest.fixture
def gfile(tmp_path):
    def write(G, name="g.json"):
        path = tmp_path / name
        path.write_text(graph_to_json(G))
        return str(path)

    return write


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_radius_examples(capsys, gfile):
    assert run(capsys, "radius", gfile(path_graph(2)), "--alpha", "0.5")[:2] == (0, "1.000000000000\n")
    k13 = new_mixed_graph(4, undirected=[(1, 2), (1, 3), (1, 4)])
    assert run(capsys, "radius", gfile(k13), "--alpha", "0")[:2] == (0, "1.732050807569\n")
    code, out, _ = run(capsys, "radius", gfile(k13), "--alpha", "0", "--format", "json")
    assert json.loads(out)["rho"] == pytest.approx(math.sqrt(3))


def test_radius_errors(capsys, tmp_path, gfile):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "radius", bad, "--alpha", "0.5")
    assert code == 1 and out == "" and "error" in err
    assert run(capsys, "radius", gfile(path_graph(2)), "--alpha", "1.5")[0] == 1
    assert run(capsys, "radius", gfile(path_graph(2)), "--alpha", "x")[0] == 1
    assert run(capsys, "radius", tmp_path / "missing.json", "--alpha", "0")[0] == 1
    assert run(capsys, "radius", gfile(path_graph(2)), "--alpha", "0", "--tol", "0")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["radius"])
    assert info.value.code == 1


def test_aalpha(capsys, gfile):
    code, out, _ = run(capsys, "aalpha", gfile(path_graph(2)), "--alpha", "0.5", "--format", "csv")
    assert out == "0.500000000000,0.500000000000\n0.500000000000,0.500000000000\n"


def test_kelmans_example(capsys, gfile):
    code, out, _ = run(capsys, "kelmans", gfile(path_graph(4)), 2, 3)
    assert code == 0
    assert graph_from_json(out) == new_mixed_graph(4, undirected=[(1, 2), (2, 3), (2, 4)])
    arc = new_mixed_graph(2, arcs=[(1, 2)])
    assert run(capsys, "kelmans", gfile(arc), 1, 2)[0] == 1


def test_enumerate_example(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", 3, "--size", 2)
    records = [json.loads(ln) for ln in out.splitlines()]
    assert code == 0 and len(records) == 3
    assert [r["key"] for r in records] == [cf.key for cf in enumerate_mixed_trees(3, 2)]
    for r in records:
        assert graph_from_json(r["graph"]).size == 2


def test_cap_exit_code(capsys):
    assert run(capsys, "enumerate", "--order", 9, "--size", 8)[0] == 3
    assert run(capsys, "poset", "--order", 7, "--size", 6)[0] == 3
    assert run(capsys, "enumerate", "--order", 4, "--size", 9)[0] == 1


def test_poset_dot(capsys, tmp_path):
    path = tmp_path / "p.dot"
    code, out, _ = run(capsys, "poset", "--order", 4, "--size", 6, "--out", path)
    text = path.read_text()
    assert code == 0 and out == "" and text.startswith("digraph")
    code, out, _ = run(capsys, "poset", "--order", 4, "--size", 6, "--format", "json")
    data = json.loads(out)
    assert len(data["nodes"]) == 2 and len(data["covers"]) == 1


def test_maximal(capsys, gfile):
    code, out, _ = run(capsys, "maximal", gfile(path_graph(4)))
    assert out == "is_maximal false\nclassify_maximal false\n"


def test_bounds_example(capsys):
    code, out, _ = run(capsys, "bounds", "--order", 6, "--size", 8, "--alpha", 0.5)
    lo, hi = (float(ln.split()[1]) for ln in out.splitlines())
    assert lo == pytest.approx(1.0, abs=1e-12)
    # direct evaluation: radicand 9 - 5 + 3 = 7
    assert hi == pytest.approx(0.5 * (3 + math.sqrt(7)), abs=1e-12)


def test_star_root(capsys):
    code, out, _ = run(capsys, "star-root", "--order", 5, "--size", 6, "--extra-out", 2, "--alpha", 1)
    assert out == "4.000000000000\n"
    assert run(capsys, "star-root", "--order", 5, "--size", 6, "--extra-out", 5, "--alpha", 1)[0] == 1


def test_verify_csv(capsys, tmp_path):
    path = tmp_path / "r.csv"
    code, _, _ = run(capsys, "verify", "--order", "2:4", "--alpha-grid", "0:0.5:1", "--out", path)
    lines = path.read_text().splitlines()
    assert code == 0 and lines[0].startswith("n,m,alpha,canonical_key")
    assert {ln.split(",")[2] for ln in lines[1:] if not ln.startswith("#")} == {"0", "0.5", "1"}


def test_determinism(tmp_path):
    def once():
        return subprocess.run(
            [sys.executable, "-m", "alpha_spectra", "verify", "--order", "3:4", "--alpha-grid", "0,0.5"],
            capture_output=True,
            check=True,
        ).stdout

    assert once() == once()


def test_round_trip():
    for n in range(1, 7):
        for m in range(n - 1, 2 * n - 1):
            for cf in enumerate_mixed_trees(n, m):
                assert graph_from_json(graph_to_json(cf.graph)) == cf.graph


def test_parsers():
    assert parse_alpha_grid("1,0,0.5,0.5") == [0.0, 0.5, 1.0]
    assert parse_alpha_grid("0:0.25:1") == [0, 0.25, 0.5, 0.75, 1]
    assert parse_order_range("2:4") == [2, 3, 4]
    assert parse_order_range("5,3") == [3, 5]
    for bad in ("", "0:0:1", "0,2", "a"):
        with pytest.raises(ValidationError):
            parse_alpha_grid(bad)
    with pytest.raises(ValidationError):
        parse_order_range("x")
