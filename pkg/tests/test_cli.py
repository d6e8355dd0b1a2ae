import json
import subprocess
import sys

import jsonschema
import pytest

from totreal.cli import JSON_SCHEMA, run_query


def run_json(*argv):
    out, err, code = run_query([*argv, "--json"])
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, JSON_SCHEMA)
    return doc


def test_obstruct_text():
    out, _, code = run_query(["obstruct", "tri", "CP2"])
    assert code == 0
    assert "impossible: N <= 5" in out
    assert "exists:     N >= 6" in out


def test_obstruct_json():
    doc = run_json("obstruct", "tri", "CP2")
    assert doc["query"] == "obstruct"
    assert doc["manifold"] == "CP2" and doc["dimension"] == 4
    assert doc["result"]["impossible"] == {"min": 1, "max": 5}
    assert doc["result"]["exists"] == {"min": 6, "max": None}
    assert doc["result"]["unknown"] is None
    assert doc["result"]["witness"] == {"class": "1 + 3*a^2", "top_degree": 4}


def test_classify4_text_and_json_agree():
    text, _, _ = run_query(["classify4", "RP4"])
    doc = run_json("classify4", "RP4")
    values = [c["value"] for c in doc["result"]["conditions"]]
    assert values == ["false", "false", "true", "false", "false", "false", "true"]
    for c in doc["result"]["conditions"]:
        assert f"({c['index']}) {c['value']}" in text


def test_classes_mod2_json():
    doc = run_json("classes", "RP4", "--coeff", "z2")
    assert doc["result"] == {"w": "1 + x + x^4", "w_dual": "1 + x + x^2 + x^3"}
    assert doc["orientable"] is False and doc["closed"] is True


def test_classes_default_shows_unavailable_integral_data():
    doc = run_json("classes", "RP4")
    assert doc["result"]["c"] is None
    doc = run_json("classes", "CP2*RP2")
    assert doc["result"]["c"] == "1 + b - 3*a^2 + a^2*b"
    assert doc["result"]["c_dual"] == "1 + b + 3*a^2 + a^2*b"


def test_threshold_and_transversality():
    doc = run_json("threshold", "--kind", "tri", "--dim", "4")
    assert doc["result"]["threshold"] == 6 and doc["manifold"] is None
    doc = run_json("check-transversality", "--dim", "5", "--target", "3", "--kind", "indep")
    assert doc["result"]["applies"] is True and doc["result"]["codim_sigma"] == 6
    text, _, _ = run_query(["check-transversality", "--dim", "4", "--target", "5", "--kind", "tri"])
    assert "does not apply" in text


def test_json_flag_position():
    a, _, _ = run_query(["--json", "obstruct", "indep", "CP2*S1"])
    b, _, _ = run_query(["obstruct", "indep", "CP2*S1", "--json"])
    assert a == b and json.loads(a)["query"] == "obstruct"


@pytest.mark.parametrize("argv, code", [
    (["classes", "CP"], 1),
    (["obstruct", "tri", "CP2 # "], 1),
    (["classify4", "R2 # S2"], 2),
    (["classify4", "S5"], 2),
    (["classes", "RP4", "--coeff", "z"], 3),
    (["classes", "RP4 # S4"], 3),
    (["obstruct", "tri", "RP5"], 3),
    (["threshold", "--kind", "tri", "--dim", "1"], 3),
    (["check-transversality", "--dim", "0", "--target", "1", "--kind", "tri"], 2),
])
def test_exit_codes(argv, code):
    out, err, got = run_query(argv)
    assert got == code
    assert out == "" and err


def test_parse_error_has_caret():
    _, err, _ = run_query(["classes", "CP"])
    assert err.splitlines()[-1].endswith("^")
    assert "offset 2" in err


def test_deterministic_output():
    assert run_query(["obstruct", "tri", "CP2*CP2*RP2"]) == run_query(["obstruct", "tri", "CP2*CP2*RP2"])


def test_unknown_renders_literally():
    out, _, _ = run_query(["classify4", "RP4 # RP4"])
    assert "unknown" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "totreal", "obstruct", "indep", "S1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "N = 1" in proc.stdout
