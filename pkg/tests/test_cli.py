import io
import json

import pytest

from cactusdim.cli import main

BUTTERFLY = "0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n"
K4 = "".join(f"{i} {j}\n" for i in range(4) for j in range(i + 1, 4))


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_human(capsys, write):
    code, out, _ = run(capsys, "analyze", write(BUTTERFLY))
    assert code == 0
    assert "dim=2 edim=3" in out
    assert "tau_ei=1" in out
    assert "FAIL" not in out


def test_analyze_json_fields_and_determinism(capsys, write):
    path = write(BUTTERFLY)
    code, out, _ = run(capsys, "analyze", path, "--json")
    assert code == 0
    rep = json.loads(out)
    for key in ("n", "m", "cyclomatic", "is_cactus", "L", "B", "per_cycle", "c_abc", "c_ade",
                "tau_vi", "tau_ei", "dim", "edim", "cert_vertex", "cert_edge", "audits"):
        assert key in rep
    for key in ("index", "girth", "b", "class_abc", "class_ade", "flags", "placement"):
        assert key in rep["per_cycle"][0]
    assert (rep["dim"], rep["edim"], rep["cyclomatic"]) == (2, 3, 2)
    assert all(a["pass"] for a in rep["audits"].values())
    _, again, _ = run(capsys, "analyze", path, "--json")
    assert again == out


def test_analyze_keeps_original_labels(capsys, write):
    text = "".join(f"{10 * u + 5} {10 * v + 5}\n" for u, v in [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    _, out, _ = run(capsys, "analyze", write(text), "--json")
    rep = json.loads(out)
    assert set(rep["cert_vertex"]) <= {5, 15, 25, 35, 45}
    assert len(rep["cert_edge"]) == 3


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(BUTTERFLY))
    code, out, _ = run(capsys, "analyze", "-", "--mode", "edge")
    assert code == 0 and "edim=3" in out and "dim=2" not in out


def test_analyze_not_cactus(capsys, write):
    code, _, err = run(capsys, "analyze", write(K4))
    assert code == 2
    assert "not a cactus: block {0,1,2,3}" in err


@pytest.mark.parametrize("text", ["0 1\n1 1\n", "0 x\n", "0 1\n2 3\n"])
def test_analyze_parse_errors(capsys, write, text):
    code, _, err = run(capsys, "analyze", write(text))
    assert code == 1 and err


def test_analyze_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 1 and err


def test_analyze_tree(capsys, write):
    code, out, _ = run(capsys, "analyze", write("0 1\n0 2\n0 3\n"))
    assert code == 0 and "dim=edim=L=2" in out and "tree fast path" in out


def test_analyze_dot(capsys, write, tmp_path):
    dot = tmp_path / "g.dot"
    run(capsys, "analyze", write(BUTTERFLY), "--dot", str(dot))
    text = dot.read_text()
    assert text.startswith("graph {") and "fillcolor" in text


def test_gen_extremal(capsys):
    code, out, _ = run(capsys, "gen", "extremal", "0", "2")
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert code == 0 and len(lines) == 17


def test_gen_tree_single_vertex(capsys):
    code, out, _ = run(capsys, "gen", "tree", "1")
    assert code == 0
    assert "# n=1" in out
    assert not [l for l in out.splitlines() if l and not l.startswith("#")]


def test_gen_round_trips_through_analyze(capsys, write):
    _, out, _ = run(capsys, "gen", "cactus", "12", "0", "--seed", "4")
    code, rep, _ = run(capsys, "analyze", write(out), "--json")
    assert code == 0 and json.loads(rep)["cyclomatic"] == 0


def test_gen_infeasible(capsys):
    code, _, err = run(capsys, "gen", "cactus", "4", "3")
    assert code == 1 and "error" in err


def test_zf(capsys, write):
    code, out, _ = run(capsys, "zf", write("0 1\n1 2\n2 3\n3 4\n4 5\n"))
    assert code == 0 and "Z=1" in out
    _, out, _ = run(capsys, "zf", write("".join(f"{i} {(i + 1) % 6}\n" for i in range(6))))
    assert "Z=2" in out
    _, out, _ = run(capsys, "zf", write(BUTTERFLY))
    assert "dim<=Z+c: pass" in out and "edim<=Z+c: pass" in out


def test_zf_too_large(capsys, write):
    text = "".join(f"{i} {i + 1}\n" for i in range(14))
    code, _, err = run(capsys, "zf", write(text))
    assert code == 1 and "error" in err


def test_fuzz_summary_and_determinism(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "20", "--seed", "7", "--max-n", "12")
    assert code == 0
    assert "20/20 match" in out
    assert "audit failures: 0; region isometry failures: 0" in out
    _, again, _ = run(capsys, "fuzz", "--count", "20", "--seed", "7", "--max-n", "12")
    assert again == out


def test_fuzz_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "fuzz", "--count", "12", "--seed", "3")
    _, parallel, _ = run(capsys, "fuzz", "--count", "12", "--seed", "3", "--jobs", "2")
    assert serial == parallel


def test_fuzz_skips_oracle_above_limit(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "5", "--seed", "1", "--max-n", "30", "--cycles", "3", "--oracle-limit", "8")
    assert code == 0
    assert "oracle skipped on" in out and "bound audits only" in out


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert "0.1.0" in capsys.readouterr().out


def test_fuzz_reports_and_shrinks_mismatch(capsys, monkeypatch):
    import cactusdim.cli as cli

    real = cli.compute_dimensions

    def off_by_one(g, **kw):
        r = real(g, **kw)
        if r.cyclomatic >= 1:
            r.edim += 1
        return r

    monkeypatch.setattr(cli, "compute_dimensions", off_by_one)
    code, out, _ = run(capsys, "fuzz", "--count", "3", "--seed", "2", "--max-n", "10")
    assert code == 3
    assert "0/3 match" in out
    assert "# minimized reproduction:" in out
    # every vertex off the cycle gets deleted, leaving a bare cycle
    edges = []
    for line in out.split("# minimized reproduction:\n")[1].splitlines():
        if line.startswith("# instance") or "match" in line:
            break
        if line and not line.startswith("#"):
            edges.append(line)
    verts = {int(x) for e in edges for x in e.split()}
    assert len(edges) == len(verts) >= 3


def test_shrink_keeps_predicate():
    from cactusdim.cli import shrink
    from cactusdim.generators import random_cactus
    from cactusdim.graph import cyclomatic_number

    g = random_cactus(14, 2, seed=9)
    small = shrink(g, lambda h: cyclomatic_number(h) >= 2)
    assert cyclomatic_number(small) == 2 and small.n < g.n
    # locally minimal: no single deletion keeps a connected graph with two cycles
    for v in range(small.n):
        h, _ = small.induced(x for x in range(small.n) if x != v)
        assert not (h.is_connected() and cyclomatic_number(h) >= 2)
