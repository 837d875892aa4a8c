import io
import json
import math
import subprocess
import sys

import pytest

from jacobi_logan import cli, verify


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eval_phi_cosine():
    code, out, _ = call("eval", "phi", "--alpha", "-0.5", "--beta", "-0.5", "--lam", "2",
                        "--t", "0.5")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "t,phi"
    assert float(row.split(",")[1]) == pytest.approx(math.cos(1.0), abs=1e-14)


def test_eval_grid_json():
    code, out, _ = call("eval", "phi", "--d", "3", "--lam", "2", "--emit-grid", "0.5:1.5:3",
                        "--format", "json")
    data = json.loads(out)
    assert code == 0 and list(data) == ["t", "phi"]
    want = [math.sin(2 * t) / (2 * math.sinh(t)) for t in (0.5, 1.0, 1.5)]
    assert data["phi"] == pytest.approx(want, abs=1e-13)


def test_zeros_cosine():
    code, out, _ = call("zeros", "--alpha", "-0.5", "--beta", "-0.5", "--tau", "1",
                        "--count", "3", "--kind", "lambda", "--no-header")
    assert code == 0
    vals = [float(line.split(",")[1]) for line in out.strip().splitlines()]
    assert vals == pytest.approx([math.pi / 2, 3 * math.pi / 2, 5 * math.pi / 2], rel=1e-13)


def test_quadrature_cosine_weights():
    code, out, _ = call("quadrature", "--alpha", "-0.5", "--beta", "-0.5", "--tau", "2",
                        "--count", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["weight"] == pytest.approx([1.0] * 4, rel=1e-8)


def test_extremizer_json():
    code, out, _ = call("extremizer", "--alpha", "0.5", "--beta", "-0.5", "--m", "2",
                        "--tau", "1")
    data = json.loads(out)
    assert code == 0
    assert data["zeros"] == pytest.approx([math.pi, 2 * math.pi], rel=1e-12)
    assert data["lambda_sup"] == pytest.approx(2 * math.pi, rel=1e-10)
    assert all(b > 0 for b in data["p_m"]["coefficients"])


def test_transform_inverse_from_file(tmp_path):
    src = tmp_path / "in.csv"
    lam = [0.1 * k for k in range(400)]
    # J of 1_[0,1] in the cosine case
    src.write_text("lambda,value\n" + "".join(
        f"{x!r},{(math.sin(x) / x if x else 1.0)!r}\n" for x in lam))
    code, out, _ = call("transform", "inverse", "--alpha", "-0.5", "--beta", "-0.5",
                        "--input", str(src), "--emit-grid", "0.2:0.6:3", "--format", "json")
    assert code == 0
    # truncating the spectrum at 40 leaves an O(1/40) ripple
    assert json.loads(out)["Jinv_f"] == pytest.approx([1.0] * 3, abs=0.03)


def test_zerocount_and_hyperboloid():
    code, out, _ = call("zerocount", "--alpha", "-0.5", "--beta", "-0.5", "--n", "2",
                        "--gamma", "1")
    assert code == 0
    assert json.loads(out)["theta"] == pytest.approx(math.pi, rel=1e-12)
    code, out, _ = call("hyperboloid", "--d", "3", "--m", "2", "--tau", "2")
    assert code == 0
    data = json.loads(out)
    assert list(data)[:4] == ["d", "alpha", "beta", "rho"]
    assert data["logan_bound"] == pytest.approx(math.pi, rel=1e-12)


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["eval", "phi", "--alpha", "1"],
    ["eval", "phi", "--alpha", "1", "--beta", "0", "--d", "3"],
    ["zeros", "--alpha", "1", "--beta", "0", "--tau", "-1", "--count", "2"],
    ["eval", "phi", "--alpha", "-2", "--beta", "0"],
    ["hyperboloid", "--d", "1", "--m", "1", "--tau", "1"],
    ["hyperboloid", "--alpha", "1", "--beta", "0", "--m", "1", "--tau", "1"],
    ["eval", "phi", "--d", "3", "--emit-grid", "1:0:5"],
    ["transform", "forward", "--d", "3", "--input", "/nonexistent/file.csv"],
    ["verify", "--d", "3", "--suite", "bogus"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == "" and err


def test_verify_exit_codes(monkeypatch):
    args = ("verify", "--suite", "zerocount", "--alpha", "-0.5", "--beta", "-0.5",
            "--n-max", "2", "--gammas", "1")
    code, out, _ = call(*args)
    data = json.loads(out)
    assert code == 0 and all(c["pass"] for c in data["checks"])
    assert list(data["checks"][0]) == ["name", "value", "tolerance", "pass"]

    real = verify.zerocount_suite

    def broken(*a, **k):
        rep = real(*a, **k)
        rep.add("planted_failure", 1.0, 0.0)
        return rep
    monkeypatch.setattr(verify, "zerocount_suite", broken)
    code, out, _ = call(*args)
    assert code == 1
    assert [c["pass"] for c in json.loads(out)["checks"]].count(False) == 1


def test_output_is_deterministic(tmp_path):
    argv = ["verify", "--suite", "chebyshev", "--alpha", "1", "--beta", "0", "--size", "3",
            "--trials", "5"]
    outs = []
    for k in range(2):
        path = tmp_path / f"o{k}.json"
        assert cli.run(argv + ["-o", str(path)], io.StringIO(), io.StringIO()) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "jacobi_logan", "hyperboloid", "--d", "3",
                          "--m", "1", "--tau", "1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["logan_bound"] == pytest.approx(math.pi, rel=1e-12)
