from pathlib import Path

from queerdeg.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_P_in_schur_basis(capsys):
    code, out, _ = run(capsys, "expand", "--P", "3,1", "--basis", "s")
    assert code == 0
    assert "(3,1)\t1" in out and "(2,2)\t1" in out and "(2,1,1)\t1" in out


def test_expand_Q(capsys):
    code, out, _ = run(capsys, "expand", "--Q", "2")
    assert out.strip() == "Q(2) = 2F{} + 2F{1}"


def test_graph_dot(tmp_path, capsys):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "graph", "--sst", "3,1", "--queer", "--dot", str(dot))
    assert code == 0 and out.startswith("8 vertices, 10 edges")
    text = dot.read_text()
    assert text.count(" -- ") == 10


def test_graph_json_then_verify(tmp_path, capsys):
    path = tmp_path / "g.json"
    run(capsys, "graph", "--sst", "4,1", "--queer", "--json", str(path))
    code, out, _ = run(capsys, "verify", "--file", str(path))
    assert code == 0 and "verdict: pass" in out


def test_verify_sst4bad(capsys):
    code, out, _ = run(capsys, "verify", "--file", str(FIXTURES / "fixture_sst4bad.json"))
    assert code == 1
    assert "condition (i)" in out and "2*P(2,1)" in out


def test_verify_cover(capsys):
    code, out, _ = run(capsys, "verify", "--file", str(FIXTURES / "fixture_cover.json"))
    assert code == 1 and "condition (iii)" in out


def test_tableaux_and_guard(capsys):
    code, out, _ = run(capsys, "tableaux", "--sst", "3,1")
    assert code == 0 and len(out.splitlines()) == 8
    code, _, err = run(capsys, "tableaux", "--sst", "13", "--count")
    assert code == 2 and "--force" in err
    code, out, _ = run(capsys, "tableaux", "--syt", "3,1", "--count")
    assert out.strip() == "3"


def test_product(capsys):
    code, out, _ = run(capsys, "product", "2", "2")
    assert out.strip() == "P(2) P(2) = P(4) + 2*P(3,1)"
    code, out, _ = run(capsys, "product", "--upto", "3")
    assert out.splitlines()[0] == "gamma,delta,epsilon,coefficient"


def test_search_unique(capsys):
    code, out, _ = run(capsys, "search-unique", "--lemma", "4")
    assert out.splitlines()[0] == "1 candidate(s)"
    assert "4123-2413" in out


def test_bad_input(capsys):
    code, _, err = run(capsys, "expand", "--P", "2,2")
    assert code == 2 and "InvalidShapeError" in err


def test_repro_subset(capsys):
    code, out, _ = run(capsys, "repro", "--only", "1", "6")
    assert code == 0
    assert out.count("[PASS]") == 2
