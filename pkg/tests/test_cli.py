import json
import subprocess
import sys

import pytest

from raagkit.cli import COMMANDS, run
from raagkit.fixtures import annulus, moebius
from raagkit.formats import complex_to_dict

Z2 = json.dumps({"vertices": ["a", "b"], "edges": [["a", "b"]]})
F2 = json.dumps({"vertices": ["a", "b"], "edges": []})
P3 = json.dumps({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})


def call(*argv):
    text, code = run(list(argv))
    return json.loads(text), code


def result(*argv):
    report, code = call(*argv)
    assert code == 0, report
    return report["result"]


def ray(base, period):
    return json.dumps({"base": base, "period": period})


def hp(label, base):
    return json.dumps({"label": label, "base": base})


def test_report_envelope():
    report, code = call("len", "--graph", Z2, "--word", "a a b b b")
    assert code == 0
    assert set(report) == {"command", "status", "config", "digest", "result"}
    assert report["result"] == 5 and report["status"] == "ok"
    assert report["config"] == {"horizon": 64, "searchRadius": 6, "ballCap": 5, "dimensionCap": 3}
    again, _ = call("nf", "--graph", Z2, "--word", "b a")
    assert again["digest"] == report["digest"]


def test_word_commands():
    assert result("nf", "--graph", Z2, "--word", "b a b^-1 a") == {"word": "a a", "length": 2}
    assert result("mul", "--graph", F2, "--word", "a b", "--word", "b^-1 a") == {"word": "a a"}
    assert result("dist", "--graph", Z2, "--word", "1", "--word", "a a b b b") == 5
    assert result("median", "--graph", Z2, "--word", "1", "--word", "a a", "--word", "a b") == {"median": "a"}


def test_gate_commands():
    A = json.dumps({"base": "", "generators": ["a"]})
    B = json.dumps({"base": "b b", "generators": ["a"]})
    assert result("gate", "--graph", Z2, "--word", "a a b b b", "--coset", A) == {"gate": "a a"}
    r = result("gate-pair", "--graph", Z2, "--coset", A, "--coset", B)
    assert r["translation"] == "b b" and r["common"] == ["a"] and r["distance"] == 2


def test_hyperplane_commands():
    assert result("hp-of-edge", "--graph", F2, "--word", "b", "--letter", "a") == {"label": "a", "base": "b"}
    assert result("duals", "--graph", F2, "--word", "1", "--word", "a b") == [
        {"label": "a", "base": ""},
        {"label": "b", "base": "a"},
    ]
    assert result("cross", "--graph", Z2, "--hyperplane", hp("a", ""), "--hyperplane", hp("b", "")) == {
        "cross": True,
        "contact": True,
    }
    r = result("contact-ball", "--graph", F2, "--word", "1", "--radius", "1")
    assert len(r["vertices"]) == 2 and r["edges"] == [{"pair": [0, 1], "cross": False}]


def test_invariant_commands(tmp_path):
    seq = json.dumps([{"label": "a", "base": ""}, {"label": "b", "base": "a"}])
    path = tmp_path / "seq.json"
    path.write_text(seq)
    assert result("orbit-equiv", "--graph", F2, "--seq", str(path), "--seq", str(path)) == {"witness": "1"}
    moved = result("act", "--graph", F2, "--word", "b", "--seq", seq)
    assert moved == {"preperiod": [{"label": "a", "base": "b"}, {"label": "b", "base": "b a"}], "period": []}
    assert result("orbit-equiv", "--graph", F2, "--seq", seq, "--seq", json.dumps(moved)) == {"witness": "b"}
    assert result("act", "--graph", F2, "--word", "a", "--hyperplane", hp("b", "")) == {"label": "b", "base": "a"}
    inv = result("invariant", "--graph", F2, "--seq", seq)
    assert inv["labels"] == ["a", "b"] and inv["s"] == ["a"]


def test_tail_and_fn_commands():
    u = json.dumps({"preperiod": [], "period": ["x", "y"]})
    v = json.dumps({"preperiod": ["y"], "period": ["x", "y"]})
    assert result("tail-equiv", "--seq", u, "--seq", v) == {"equivalent": True, "shift": [0, 1]}
    alpha = json.dumps([{"period": [{"label": "a", "base": ""}]}])
    beta = json.dumps([{"period": [{"label": "a", "base": "b"}]}])
    r = result("fn-equiv", "--graph", F2, "--alpha", alpha, "--beta", beta, "--radius", "1")
    assert r["status"] == "witness" and r["witness"] == "b"
    far = json.dumps([{"period": [{"label": "a", "base": "b b b"}]}])
    report, code = call("fn-equiv", "--graph", F2, "--alpha", alpha, "--beta", far, "--radius", "1")
    assert code == 2 and report["result"]["status"] == "none-within-radius"
    other = json.dumps([{"period": [{"label": "b", "base": ""}]}])
    report, code = call("fn-equiv", "--graph", F2, "--alpha", alpha, "--beta", other)
    assert code == 0 and report["result"]["labelObstruction"] is True


def test_ray_commands():
    assert result("ray-vertex", "--graph", F2, "--ray", ray("b", "a"), "--index", "2") == {"vertex": "b a a"}
    assert result("ray-classes", "--graph", Z2, "--ray", ray("b", "a b")) == ["a", "b"]
    r = result("spectrum", "--graph", Z2, "--ray", ray("", "a"), "--word", "a", "--label", "a", "--count", "2")
    assert [h["base"] for h in r["hyperplanes"]] == ["a", "a a"]
    r = result(
        "order-check", "--graph", Z2, "--ray", ray("", "a"), "--word", "1", "--word", "b b b", "--label", "a", "--count", "5"
    )
    assert r == {"consistent": True}
    r = result("separators", "--graph", Z2, "--ray", ray("", "a"), "--ray", ray("b", "a"))
    assert r["verdict"] == "exact" and r["hyperplanes"] == [{"label": "b", "base": ""}]
    report, code = call("separators", "--graph", F2, "--ray", ray("", "a"), "--ray", ray("b", "a"))
    assert code == 2 and report["result"]["verdict"] == "at-least"
    assert result("roller-adjacent", "--graph", Z2, "--ray", ray("", "a"), "--ray", ray("b", "a")) == {"adjacent": True}


def test_complex_commands():
    X = json.dumps(complex_to_dict(annulus()))
    r = result("check-special", "--complex", X)
    assert r["special"] is True
    g = result("crossing-graph", "--complex", X)
    assert g == {"vertices": ["x1", "x2", "r0"], "edges": [["x1", "r0"], ["x2", "r0"]]}
    m = result("salvetti-map", "--complex", X)
    assert m["edgeMap"]["y1"] == ["x1", 1]
    r = result("pi1-embed", "--complex", X)
    assert r["presentation"]["generators"] and all(isinstance(v, str) for v in r["images"].values())
    assert result("develop", "--complex", X, "--path", "x1 r1 y1^-1 r0^-1") == {"element": ""}
    assert result("convexity-probe", "--complex", X, "--radius", "2") == {"convex": True}
    report, code = call("crossing-graph", "--complex", json.dumps(complex_to_dict(moebius())))
    assert code == 1 and report["status"] == "error"
    assert result("check-special", "--complex", json.dumps(complex_to_dict(moebius())))["oneSided"] == ["r0"]


def test_explicit_map():
    X = json.dumps(
        {"vertices": ["p", "q"], "edges": [{"id": "e1", "src": "p", "dst": "q"}, {"id": "e2", "src": "q", "dst": "p"}]}
    )
    m = json.dumps({"graph": {"vertices": ["a"], "edges": []}, "edgeMap": {"e1": ["a", 1], "e2": ["a", 1]}})
    r = result("pi1-embed", "--complex", X, "--map", m)
    assert r["images"] == {"e2": "a a"}


def test_hyperbolic_commands():
    assert result("gromov-product", "--graph", F2, "--word", "a a", "--word", "a b") == {"product": "1"}
    assert result("delta", "--graph", F2, "--radius", "2") == {"ballDelta": "0"}
    r = result("boundary-equal", "--graph", Z2, "--ray", ray("", "a"), "--ray", ray("b", "a"))
    assert r["verdict"] == "equal"
    rays = json.dumps([{"base": "", "period": "a"}, {"base": "b", "period": "a"}, {"base": "", "period": "b"}])
    assert result("fiber-sample", "--graph", F2, "--rays", rays)["classes"] == [[0], [1], [2]]


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"horizon": 3}))
    report, code = call("spectrum", "--graph", Z2, "--config", str(cfg), "--ray", ray("", "a"), "--word", "1", "--label", "a", "--count", "9")
    assert code == 2 and report["status"] == "indeterminate"
    assert report["config"]["horizon"] == 3
    cfg.write_text(json.dumps({"horizon": 0}))
    assert call("len", "--graph", Z2, "--config", str(cfg), "--word", "a")[1] == 3
    cfg.write_text(json.dumps({"colour": 1}))
    assert call("len", "--graph", Z2, "--config", str(cfg), "--word", "a")[1] == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nosuch"],
        ["len", "--word", "a"],
        ["len", "--graph", "{not json", "--word", "a"],
        ["len", "--graph", "/nonexistent/graph.json", "--word", "a"],
        ["len", "--graph", json.dumps({"vertices": ["a"], "edges": [["a", "a"]]}), "--word", "a"],
        ["len", "--graph", Z2, "--word", "q"],
        ["dist", "--graph", Z2, "--word", "a"],
        ["ray-vertex", "--graph", Z2, "--ray", ray("", "a")],
        ["ray-vertex", "--graph", Z2, "--ray", ray("", "a"), "--index", "x"],
        ["check-special", "--complex", json.dumps({"vertices": ["p"], "edges": [{"id": "e", "src": "p", "dst": "z"}]})],
        ["tail-equiv", "--seq", json.dumps(["x"]), "--seq", json.dumps(["x"])],
        ["invariant", "--graph", Z2, "--seq", json.dumps({"period": [{"label": "a", "base": ""}]})],
    ],
)
def test_malformed_input_exits_3(argv):
    report, code = call(*argv)
    assert code == 3 and report["status"] == "malformed"


def test_domain_errors_exit_1():
    report, code = call("ray-vertex", "--graph", Z2, "--ray", ray("a", "a^-1"), "--index", "3")
    assert code == 1 and "not geodesic" in report["result"]["error"]
    report, code = call("delta", "--graph", Z2, "--radius", "9")
    assert code == 1


def test_every_command_is_documented_in_help():
    out = subprocess.run([sys.executable, "-m", "raagkit", "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for name in COMMANDS:
        assert name in out.stdout


def test_module_entry_point_exit_status():
    out = subprocess.run(
        [sys.executable, "-m", "raagkit", "separators", "--graph", F2, "--ray", ray("", "a"), "--ray", ray("b", "a")],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 2
    assert json.loads(out.stdout)["result"]["verdict"] == "at-least"
