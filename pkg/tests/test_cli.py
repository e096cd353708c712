import io
import json

import jsonschema
import pytest

from gqbreak.cli import dispatch

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "max_order", "entries", "summary", "findings"],
    "properties": {
        "schema_version": {"const": 1},
        "max_order": {"type": "integer"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "order", "classification", "predicted", "computed", "agree"],
                "properties": {
                    "name": {"type": "string"},
                    "order": {"type": "integer"},
                    "classification": {
                        "type": "object",
                        "required": ["cyclic", "p_group", "generalized_quaternion"],
                    },
                    "predicted": {"type": "object", "required": ["exists", "unique"]},
                    "computed": {"type": "object", "required": ["exists", "count"]},
                    "agree": {"type": "object", "required": ["all"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "failed"],
            "properties": {"total": {"type": "integer"}, "failed": {"type": "integer"}},
        },
        "findings": {"type": "array"},
    },
}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_q16():
    code, out, _ = run("analyze", "--group", "Q16", "--poset", "cyclic")
    assert code == 0
    assert "breaking points: 1\n  n1: order=2" in out


def test_analyze_json():
    code, out, _ = run("analyze", "--group", "Z8", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["breaking"]["count"] == 2
    assert doc["hasse_edges"] == [[0, 1], [1, 2], [2, 3]]


def test_analyze_inline_presentation():
    code, out, _ = run("analyze", "--group", "pres:< a, b | a^2 = b^2, a^4 = 1, b^-1*a*b = a^-1 >")
    assert code == 0 and "breaking points: 1" in out


def test_text_and_json_agree():
    _, text, _ = run("analyze", "--group", "S4", "--poset", "classes")
    _, js, _ = run("analyze", "--group", "S4", "--poset", "classes", "--format", "json")
    doc = json.loads(js)
    assert f"{len(doc['nodes'])} nodes" in text
    assert f"breaking points: {doc['breaking']['count']}" in text


def test_build():
    code, out, _ = run("build", "--presentation", "< a, b | a^4 = b^2, a^8 = 1, b^-1*a*b = a^-1 >")
    assert code == 0 and "order: 16" in out


def test_build_coset_limit_is_error():
    code, _, err = run("build", "--presentation", "< a, b | a^2, b^2 >", "--max-cosets", "500")
    assert code == 2 and "500" in err


def test_verify(tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run("verify", "--max-order", "15", "--report", str(path))
    assert code == 0 and "total: 28, failed: 0" in out
    doc = json.loads(path.read_text())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["summary"]["total"] == 28 and doc["summary"]["failed"] == 0


def test_verify_json_validates():
    code, out, _ = run("verify", "--max-order", "32", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


def test_verify_exit_one_on_failure(monkeypatch):
    from gqbreak import verify

    original = verify._predicted_existence
    monkeypatch.setattr(verify, "_predicted_existence", lambda c: not original(c))
    code, out, _ = run("verify", "--max-order", "4")
    assert code == 1 and "FAIL" in out


def test_search_cbar():
    code, out, _ = run("search-cbar", "--max-order", "30")
    assert code == 0 and out.startswith("scanned")
    code, out, _ = run("search-cbar", "--max-order", "30", "--format", "json")
    assert set(json.loads(out)) == {"schema_version", "max_order", "scanned", "findings"}


def test_hasse(tmp_path):
    path = tmp_path / "q8.dot"
    code, _, _ = run("hasse", "--group", "Q8", "--poset", "cyclic", "--out", str(path))
    dot = path.read_text()
    assert code == 0 and dot.startswith('digraph "Q8 cyclic"')
    assert dot.count("->") == 4 and dot.count("doublecircle") == 1


@pytest.mark.parametrize("argv", [
    ["analyze", "--group", "X9"],
    ["analyze", "--group", "pres:< a | >"],
    ["analyze", "--group", "Z4", "--poset", "nope"],
    ["verify", "--max-order", "65"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv):
    code, _, _ = run(*argv)
    assert code == 2
