import io
import json
import subprocess
import sys

import pytest

from dqha.cli import main
from dqha.documents import Loader, algebra_to_doc, dumps, load, module_to_doc, to_doc
from dqha.errors import ParseError, ShapeError
from dqha.examples import builtin, builtin_names


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# --- documents --------------------------------------------------------------------------

@pytest.mark.parametrize("name", builtin_names())
def test_documents_round_trip(name):
    obj = builtin(name)
    doc = json.loads(dumps(to_doc(obj)))
    again = Loader().from_doc(doc)
    assert to_doc(again) == to_doc(obj)


def test_field_override_reparses_scalars():
    H = Loader(field="fp:13").read("builtin:kw_z2")
    assert H.field.key == "fp:13"
    assert H.sigma(1, 1, 1) == H.field(12)


def test_modules_share_their_algebra():
    loader = Loader()
    a = loader.from_doc(to_doc(builtin("m_theta")))
    b = loader.from_doc(to_doc(builtin("m_theta")))
    assert a.H is b.H


def test_shape_errors(fixtures):
    with pytest.raises(ShapeError):
        load(str(fixtures / "kz3_short_epsilon.json"))
    doc = algebra_to_doc(builtin("kz3"))
    doc["mul"].append([0, 0, 5, "1"])
    with pytest.raises(ShapeError):
        Loader().from_doc(doc)


def test_parse_errors(fixtures):
    with pytest.raises(ParseError):
        load(str(fixtures / "truncated.json"))
    doc = algebra_to_doc(builtin("kz3"))
    del doc["beta"]
    with pytest.raises(ParseError):
        Loader().from_doc(doc)
    doc = module_to_doc(builtin("m_theta"))
    doc["flavor"] = "XY"
    with pytest.raises(ParseError):
        Loader().from_doc(doc)


# --- verbs --------------------------------------------------------------------------------

def test_validate_exit_codes(fixtures):
    assert run("validate", "builtin:kz3")[0] == 0
    code, out, _ = run("validate", str(fixtures / "kw_z2_broken_beta.json"))
    assert code == 1
    assert "antipode_reassociator                    FAIL" in out
    assert "at (g):" in out
    assert run("validate", str(fixtures / "truncated.json"))[0] == 2
    assert run("validate", str(fixtures / "kz3_short_epsilon.json"))[0] == 2
    assert run("validate", str(fixtures / "missing.json"))[0] == 2
    assert run("validate", str(fixtures / "m_theta.json"))[0] == 0
    assert run("validate", str(fixtures / "m_theta_one.json"))[0] == 1


def test_validate_json_report_names_failure(fixtures):
    code, out, _ = run("validate", str(fixtures / "kw_z2_broken_beta.json"), "--report", "json")
    rep = json.loads(out)
    failed = [c for c in rep["checks"] if not c["passed"]]
    assert code == 1 and [c["name"] for c in failed] == ["antipode_reassociator"]
    assert failed[0]["failures"][0]["at"] == ["g"]


def test_reports_are_deterministic():
    assert run("report", "builtin:h_yd_kw_z4_f13") == run("report", "builtin:h_yd_kw_z4_f13")


def test_derive_f_tables():
    code, out, _ = run("derive", "builtin:kw_z2", "--emit", "f", "--report", "json")
    assert code == 0
    assert json.loads(out)["forms"]["f"] == {"e,e": "1", "e,g": "1", "g,e": "1", "g,g": "-1"}
    code, out, _ = run("derive", "builtin:kz3", "--emit", "f", "--report", "json")
    assert set(json.loads(out)["forms"]["f"].values()) == {"1"}


def test_derive_U_and_variants():
    code, out, _ = run("derive", "builtin:kw_z4_f13", "--emit", "U,pq,variants", "--report", "json")
    payload = json.loads(out)
    assert code == 0 and payload["report"]["passed"]
    assert len(payload["forms"]["U"]) == 16
    assert set(payload["variants"]) == {"op", "cop", "opcop"}
    assert run("derive", "builtin:kz3", "--emit", "h")[0] == 2


def test_braid():
    code, out, _ = run("braid", "builtin:m_theta", "builtin:m_theta")
    assert code == 0 and out == "[5]\n"
    code, out, _ = run("braid", "builtin:trivial_kz3", "builtin:trivial_kz3")
    assert out == "[1]\n"
    code, out, _ = run("braid", "builtin:h_yd_kw_z2", "builtin:h_yd_kw_z2", "--inverse", "--check")
    assert code == 0 and "identity: pass" in out
    code, _, err = run("braid", "builtin:m_theta", "builtin:m_theta_rl")
    assert code == 1 and "FlavorMismatch" in err


def test_emitted_documents_round_trip(tmp_path):
    cases = [
        ("dual", "builtin:m_theta", "--hand", "right"),
        ("dual", "builtin:h_yd_kw_z2", "--hand", "left"),
        ("dual", "builtin:trivial_kw_z4_f13"),
        ("convert", "builtin:m_theta_rl"),
        ("convert", "builtin:trivial_rl_kz3"),
        ("tensor", "builtin:m_theta", "builtin:h_yd_kw_z2_f13"),
    ]
    for i, argv in enumerate(cases):
        path = tmp_path / ("out%d.json" % i)
        code, out, _ = run(*argv, "--out", str(path))
        assert code == 0, (argv, out)
        assert run("validate", str(path))[0] == 0
        doc = json.loads(path.read_text())
        assert to_doc(load(str(path))) == doc


def test_dual_dimensions(tmp_path):
    for ref, hand, dim in [("builtin:m_theta", "right", 1), ("builtin:h_yd_kw_z2", "left", 2)]:
        code, out, err = run("dual", ref, "--hand", hand)
        assert code == 0 and json.loads(out)["dim"] == dim
        assert "snake_object" in err and "FAIL" not in err


def test_convert_outputs_ll_document():
    code, out, err = run("convert", "builtin:m_theta_rl")
    doc = json.loads(out)
    assert code == 0 and doc["flavor"] == "LL" and "pass" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dqha", "validate", "builtin:kz3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
