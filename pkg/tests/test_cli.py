import io
import json

import pytest

from dendroidal import cli
from dendroidal.corpus import PERCOLATION_S, PERCOLATION_T, SAMPLE_TREE
from dendroidal.dset import Cosk1Graph, IShriek
from dendroidal.operad import operad_from_json, operad_to_json, omega_operad
from dendroidal.trees import corolla, from_json, linear, to_json


def _run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return write


def test_percolate_dot(files):
    s, t = files("s.json", to_json(PERCOLATION_S)), files("t.json", to_json(PERCOLATION_T))
    code, out = _run("tensor", "percolate", "--s", s, "--t", t, "--dot")
    assert code == 0
    assert out.count("[label=") == 14 and out.count("->") == 21


def test_kan_check_on_nerve(files):
    code, body = _run("operad", "omega", "--tree", files("c.json", to_json(corolla(2))))
    assert code == 0
    nerve = {"kind": "nerve", "operad": json.loads(body), "bound": 3, "valence": 2}
    code, out = _run("kan", "check", "--dset", files("n.json", nerve), "--strict")
    assert code == 0
    assert json.loads(out)["strict"] is True


def test_kan_strictness_exit(files, monkeypatch):
    monkeypatch.setattr(cli, "_dset", lambda path: IShriek(Cosk1Graph(["p", "q"]), 2, 1))
    assert _run("kan", "check", "--dset", "x", "--strict")[0] == cli.EXIT_STRICT
    assert _run("kan", "check", "--dset", "x")[0] == 0


def test_empty_edges_is_usage_error(files):
    tree = files("t.json", to_json(SAMPLE_TREE))
    code, _ = _run("anodyne", "certify", "--kind", "multi-horn", "--tree", tree, "--edges", "[]")
    assert code == cli.EXIT_USAGE
    code, out = _run("anodyne", "certify", "--kind", "multi-horn", "--tree", tree,
                     "--edges", '["b", "d"]')
    assert code == 0 and json.loads(out)["valid"] is True
    code, _ = _run("anodyne", "certify", "--kind", "multi-horn", "--tree", tree,
                   "--edges", '["e"]')
    assert code == cli.EXIT_CERT


def test_malformed_input_reports_location(files, tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"root": "0",\n "vertices": [}')
    code, _ = _run("trees", "canonical", "--tree", str(p))
    assert code == cli.EXIT_USAGE
    assert "line 2" in capsys.readouterr().err
    assert _run("trees", "canonical")[0] == cli.EXIT_USAGE
    assert _run("bogus")[0] == cli.EXIT_USAGE
    assert _run("trees", "canonical", "--tree", str(tmp_path / "missing.json"))[0] == 1


def test_round_trips(files):
    tree = files("t.json", to_json(SAMPLE_TREE))
    code, out = _run("trees", "canonical", "--tree", tree)
    assert code == 0 and to_json(from_json(json.loads(out))) == json.loads(out)
    code, out = _run("operad", "omega", "--tree", tree, "--max-valence", "3")
    body = json.loads(out)
    assert operad_to_json(operad_from_json(body), 3) == body
    code, out = _run("trees", "enumerate", "--max-vertices", "2", "--max-valence", "2")
    assert [to_json(from_json(t)) for t in json.loads(out)] == json.loads(out)


def test_inputs_untouched(files, tmp_path):
    tree = files("t.json", to_json(linear(2)))
    before = open(tree).read()
    _run("omega", "faces", "--tree", tree)
    _run("trees", "classify", "--tree", tree)
    assert open(tree).read() == before


def test_deterministic_output(files):
    tree = files("t.json", to_json(SAMPLE_TREE))
    assert _run("omega", "faces", "--tree", tree) == _run("omega", "faces", "--tree", tree)
    assert _run("corpus", "--budget", "1") == _run("corpus", "--budget", "1")


def test_classify(files):
    code, out = _run("trees", "classify", "--tree", files("t.json", to_json(SAMPLE_TREE)))
    assert json.loads(out) == {"root": ["a"], "leaves": ["c", "e", "f"], "inner": ["b", "d"]}


def test_operad_validate(files):
    code, out = _run("operad", "validate", "--operad",
                     files("o.json", operad_to_json(omega_operad(corolla(2)), 2)))
    assert code == 0 and json.loads(out)["problems"] == []


def test_integrate_check():
    code, out = _run("integrate", "check", "--fixture", "swap", "--bound", "2", "--max-valence",
                     "2", "--strict")
    assert code == 0
    body = json.loads(out)
    assert body["audit"] == [] and body["kan"]["strict"]


def test_threads_env(monkeypatch):
    monkeypatch.setenv("DENDRO_THREADS", "4")
    assert cli.threads() == 4
    monkeypatch.setenv("DENDRO_THREADS", "many")
    assert _run("corpus")[0] == cli.EXIT_USAGE


def test_grafting_and_tensor_certify(files):
    t = files("t.json", to_json(corolla(2)))
    s = files("s.json", to_json(corolla(1)))
    code, out = _run("anodyne", "certify", "--kind", "grafting", "--tree", t, "--leaf", "1",
                     "--s", s)
    assert code == 0 and json.loads(out)["valid"]
    code, out = _run("anodyne", "certify", "--kind", "tensor", "--s",
                     files("l.json", to_json(linear(2))), "--edge", "1", "--t", s)
    assert code == 0 and json.loads(out)["valid"]
    assert _run("anodyne", "certify", "--kind", "tensor", "--s", t)[0] == cli.EXIT_USAGE
