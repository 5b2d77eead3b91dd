import io
import json
import subprocess
import sys

import pytest

from bkpplane.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_series_product_json():
    code, out = call("series", "product", "--order", "5")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert rep["command"] == "series product"
    assert rep["payload"]["coeffs"] == [1, 2, 6, 16, 38, 88]
    assert "elapsed_ms" not in rep


def test_series_macmahon_csv():
    code, out = call("series", "macmahon", "--order", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["exponent,coefficient", "0,1", "1,1", "2,3", "3,6", "4,13"]


def test_series_text():
    code, out = call("series", "product", "--order", "2", "--format", "text")
    assert code == 0 and "6" in out


def test_json_is_byte_identical():
    a = call("census", "--max-volume", "6")[1]
    b = call("census", "--max-volume", "6", "--threads", "3")[1]
    assert call("census", "--max-volume", "6")[1] == a
    assert json.loads(a)["payload"] == json.loads(b)["payload"]


def test_timing_flag():
    rep = json.loads(call("series", "product", "--order", "3", "--timing")[1])
    assert rep["elapsed_ms"] >= 0


def test_census_and_scalar_product_agree():
    c = json.loads(call("census", "--max-volume", "8")[1])["payload"]
    s = json.loads(call("scalar-product", "--order", "8")[1])["payload"]
    p = json.loads(call("series", "product", "--order", "8")[1])["payload"]
    assert c == s == p


def test_census_listing():
    rep = json.loads(call("census", "--max-volume", "2", "--list")[1])
    heights = [e["heights"] for e in rep["listing"]]
    assert heights[:3] == [[], [[1]], [[2]]]
    assert sorted(heights[3:]) == [[[1], [1]], [[1, 1]]]
    assert [e["weight"] for e in rep["listing"]] == [1, 2, 2, 2, 2]
    code, out = call("census", "--max-volume", "1", "--list", "--format", "text")
    assert code == 0 and out.startswith("volume\tpaths\tweight\theights")


@pytest.mark.parametrize("backend", ["python", "auto"])
def test_backend_flag(backend):
    code, out = call("census", "--max-volume", "5", "--backend", backend)
    assert code == 0 and json.loads(out)["parameters"]["backend"] == backend


@pytest.mark.parametrize("argv", [
    ("verify", "lemma1", "--max-weight", "4"),
    ("verify", "algebra", "--max-weight", "3"),
    ("verify", "commutation", "--order", "5"),
    ("verify", "path-width", "--max-volume", "6"),
])
def test_verify_commands_pass(argv):
    code, out = call(*argv)
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert all(c["status"] == "pass" for c in rep["payload"]["checks"])


def test_verify_all_text_and_csv():
    code, out = call("verify", "all", "--format", "text")
    assert code == 0
    lines = [ln for ln in out.splitlines() if not ln.startswith(" ")]
    assert len(lines) == 6 and all(ln.startswith("PASS ") for ln in lines)
    code, out = call("verify", "all", "--format", "csv")
    assert out.splitlines()[0] == "check,status" and len(out.splitlines()) == 7


def test_failing_check_exits_one(monkeypatch):
    from bkpplane import verify

    monkeypatch.setattr(verify, "check_commutation",
                        lambda order: verify.CheckResult("commutation", False, {}, ["boom"]))
    code, out = call("verify", "commutation", "--order", "2")
    assert code == 1 and json.loads(out)["status"] == "fail"


@pytest.mark.parametrize("argv", [
    (),
    ("series",),
    ("series", "product"),
    ("series", "product", "--order", "-1"),
    ("series", "product", "--order", "x"),
    ("census", "--max-volume", "3", "--threads", "0"),
    ("census", "--max-volume", "3", "--format", "xml"),
    ("verify", "commutation", "--order", "0"),
    ("bogus",),
])
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bkpplane", "series", "product", "--order", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["coeffs"] == [1, 2, 6, 16]
