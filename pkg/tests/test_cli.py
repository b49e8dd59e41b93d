import json

from newtonsing.cli import main
from newtonsing.graph import PlumbingGraph
from tests.conftest import FRONT_PAGE


def write_doc(tmp_path, monomials, name=None):
    doc = {"monomials": [list(p) for p in monomials]}
    if name:
        doc["name"] = name
    path = tmp_path / "input.json"
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_pg_brieskorn_237(tmp_path, capsys):
    path = write_doc(tmp_path, [(2, 0, 0), (0, 3, 0), (0, 0, 7)])
    code, out = run_cli(capsys, path, "pg")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["pg"] == 1
    assert all(report["oracles"].values())


def test_graph_front_page(tmp_path, capsys):
    path = write_doc(tmp_path, FRONT_PAGE, name="front-page")
    code, out = run_cli(capsys, path, "graph")
    assert code == 0
    report = json.loads(out)
    verts = report["result"]["vertices"]
    leg = [v for v in verts if v.get("functional") == [2, 1, 1]]
    assert len(leg) == 1 and leg[0]["b"] == 13
    assert PlumbingGraph.from_payload(report["result"]).nv == len(verts)


def test_graph_minimal_and_dot(tmp_path, capsys):
    path = write_doc(tmp_path, [(2, 0, 0), (0, 3, 0), (0, 0, 5)])
    code, out = run_cli(capsys, path, "graph", "--minimal", "--format", "dot")
    assert code == 0
    payload, dot = out.split("\n", 1)
    report = json.loads(payload)
    assert len(report["result"]["vertices"]) == 8  # the E8 star
    assert 'v0 [label="v0 [b=2, g=0]"]' in dot


def test_sw_brieskorn_235(tmp_path, capsys):
    path = write_doc(tmp_path, [(2, 0, 0), (0, 3, 0), (0, 0, 5)])
    code, out = run_cli(capsys, path, "sw")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["value"] == 0
    assert report["result"]["zk_sq"] == 0
    assert report["result"]["vertex_count"] == 8


def test_spectrum_and_poincare(tmp_path, capsys):
    path = write_doc(tmp_path, [(2, 0, 0), (0, 3, 0), (0, 0, 7)])
    code, out = run_cli(capsys, path, "spectrum")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["spectrum"] == [["-1/42", 1]]
    assert report["oracles"]["saito_agrees"]
    code, out = run_cli(capsys, path, "poincare", "--max-exponent", "1")
    report = json.loads(out)
    assert code == 0
    assert ["0/1", 1] in report["result"]["terms"]
    assert ["41/42", 1] in report["result"]["terms"]
    assert report["oracles"]["newton_filtration_agrees"]


def test_determinism(tmp_path, capsys):
    path = write_doc(tmp_path, FRONT_PAGE)
    _, out1 = run_cli(capsys, path, "diagram")
    _, out2 = run_cli(capsys, path, "diagram")
    assert out1 == out2


def test_diagram_payload(tmp_path, capsys):
    path = write_doc(tmp_path, FRONT_PAGE)
    code, out = run_cli(capsys, path, "diagram")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["convenient"] and report["result"]["rhs"]
    normals = {tuple(f["normal"]) for f in report["result"]["faces"] if f["compact"]}
    assert normals == {(11, 5, 7), (6, 3, 4), (32, 12, 21), (15, 8, 6)}
    assert report["result"]["anatomy"]["central_face"] == [11, 5, 7]


def test_domain_error_exit_code(tmp_path, capsys):
    path = write_doc(tmp_path, [(2, 0, 0)])  # not isolated
    code, out = run_cli(capsys, path, "pg")
    assert code == 1
    assert json.loads(out)["error"] == "NotIsolated"


def test_usage_errors(tmp_path, capsys):
    code, _ = run_cli(capsys, str(tmp_path / "missing.json"), "pg")
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run_cli(capsys, str(bad), "pg")
    assert code == 2
    empty = tmp_path / "empty.json"
    empty.write_text(json.dumps({"monomials": []}))
    code, _ = run_cli(capsys, str(empty), "pg")
    assert code == 2


def test_stdin_input(capsys, monkeypatch):
    import io

    doc = json.dumps({"name": "front-page", "monomials": [list(p) for p in FRONT_PAGE]})
    monkeypatch.setattr("sys.stdin", io.StringIO(doc))
    code, out = run_cli(capsys, "-", "pg")
    assert code == 0
    assert json.loads(out)["result"]["pg"] == 14


def test_verify_all(tmp_path, capsys):
    path = write_doc(tmp_path, [(2, 0, 0), (0, 3, 0), (0, 0, 7)])
    code, out = run_cli(capsys, path, "verify", "--suite", "all")
    report = json.loads(out)
    assert code == 0
    assert report["result"]["passed"]
    assert all(report["result"]["checks"].values())
