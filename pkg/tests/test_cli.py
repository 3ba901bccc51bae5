import json

from cdmac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_d1_r3_text(capsys):
    code, out, _ = run(capsys, "compute", "--family", "D", "--n", "1", "--r", "3",
                       "--format", "text")
    assert code == 0
    assert out.strip() == "x1^3 + x1^-3"


def test_compute_c_r0(capsys):
    code, out, _ = run(capsys, "compute", "--family", "C", "--n", "1", "--r", "0")
    assert code == 0
    assert out.strip() == "1"


def test_routes_byte_equal(capsys):
    outs = []
    for via in ("tableau", "lassalle", "walgebra"):
        code, out, _ = run(capsys, "compute", "--family", "D", "--n", "2",
                           "--r", "2", "--via", via)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_deterministic_bytes_across_runs(capsys):
    args = ("verify", "--suite", "thm22", "--seed", "9", "--samples", "4")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "compute", "--family", "C", "--n", "2", "--r", "1",
                       "--T", "symbolic", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["family"] == "C" and doc["rank"] == 2
    assert all("exp" in t and "coeff" in t for t in doc["terms"])


def test_compute_latex(capsys):
    code, out, _ = run(capsys, "compute", "--family", "D", "--n", "2", "--r", "1",
                       "--format", "latex")
    assert code == 0
    assert out.strip() == "x_{1} + x_{2} + x_{2}^{-1} + x_{1}^{-1}"


def test_tableaux_listing(capsys):
    code, out, _ = run(capsys, "tableaux", "--family", "D", "--n", "2", "--r", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 9 and len(doc["tableaux"]) == 9
    code, out, _ = run(capsys, "tableaux", "--family", "D", "--n", "2", "--r", "1")
    assert json.loads(out)["count"] == 4
    code, out, _ = run(capsys, "tableaux", "--family", "C", "--n", "2", "--r", "0")
    doc = json.loads(out)
    assert doc["count"] == 1 and doc["tableaux"] == [[0, 0, 0, 0]]


def test_usage_errors_exit_2(capsys):
    code, _, _ = run(capsys, "compute", "--family", "E", "--n", "1", "--r", "1")
    assert code == 2
    code, _, _ = run(capsys, "compute", "--family", "D", "--n", "0", "--r", "1")
    assert code == 2
    code, _, _ = run(capsys, "compute", "--family", "D", "--n", "1", "--r", "1",
                     "--T", "t^2/q")
    assert code == 2  # family D has no T


def test_pole_exit_3(capsys):
    # T = q^-1 makes a lower q-shifted-factorial entry hit 1 at rank 1, row 2
    code, _, err = run(capsys, "compute", "--family", "C", "--n", "1", "--r", "2",
                       "--T", "q^-1")
    assert code == 3
    assert "arithmetic error" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm22", "--seed", "7",
                       "--samples", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["passed"] is True
    rec = doc["suites"][0]["results"][0]
    assert {"identity_id", "params", "residual_is_zero", "sample_seed"} <= set(rec)


def test_verify_negative_control_corrupt_watson(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--samples", "3",
                       "--corrupt", "watson")
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False
    bad = [r for s in doc["suites"] for r in s["results"]
           if not r["residual_is_zero"]]
    assert bad and all(r["identity_id"] == "watson" for r in bad)


def test_verify_soukan_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "soukan", "--n", "2", "--r", "2")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("family=D\nn=1\nr=3\nformat=text\n")
    code, out, _ = run(capsys, "compute", "--config", str(cfg))
    assert code == 0
    assert out.strip() == "x1^3 + x1^-3"
