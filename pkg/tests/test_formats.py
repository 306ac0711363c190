import json
import sys
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.errors import DimensionMismatch, FieldMismatch, ParseError
from lieball.formats import (
    algebra_document,
    load_algebra_file,
    load_report,
    parse_algebra_document,
    render,
    render_json,
    verdict_from_json,
    verdict_to_json,
)
from lieball.liealg import LieAlgebraBasis, SignatureForm, builtin, sl2
from lieball.models import BatteryItem, Report
from lieball.repcheck import Representation, decide_irreducibility, verify_verdict
from lieball.scalar import Field, QuadExt


def _doc(**overrides):
    doc = {
        "name": "sl2",
        "ambient_dim": 2,
        "generators": [[["0", "1"], ["0", "0"]], [[0, 0], [1, 0]]],
    }
    doc.update(overrides)
    return json.dumps(doc)


def test_parse_valid_document():
    parsed = parse_algebra_document(_doc())
    assert parsed.field is Field.RAT
    assert parsed.D == 3
    assert parsed.ambient_dim == 2
    assert parsed.name == "sl2"
    assert len(parsed.generators) == 2
    assert parsed.generators[1][1, 0] == 1


def test_parse_quadratic_entries_and_signature():
    text = _doc(field="quad", signature=[1, 1], generators=[[["0", "1*sqrt"], ["1*sqrt", "0"]]])
    parsed = parse_algebra_document(text)
    assert parsed.signature == SignatureForm(1, 1)
    assert parsed.generators[0][0, 1] == QuadExt(0, 1, 3)


def test_parse_tolerates_byte_order_mark(tmp_path):
    path = tmp_path / "algebra.json"
    path.write_text("\ufeff" + _doc(), encoding="utf-8")
    assert load_algebra_file(path).name == "sl2"


def test_malformed_json_reports_a_position():
    with pytest.raises(ParseError) as exc:
        parse_algebra_document('{"ambient_dim": 2,')
    assert exc.value.position is not None


def test_bad_entry_is_located():
    with pytest.raises(ParseError) as exc:
        parse_algebra_document(_doc(generators=[[["1/0", "0"], ["0", "0"]]]))
    assert exc.value.position == 2
    assert "generators[0][0][0]" in str(exc.value)


def test_document_errors():
    with pytest.raises(FieldMismatch):
        parse_algebra_document(_doc(generators=[[["(0,1)", "0"], ["0", "0"]]]))
    with pytest.raises(DimensionMismatch):
        parse_algebra_document(_doc(generators=[[["0", "1", "0"], ["0", "0"]]]))
    with pytest.raises(DimensionMismatch):
        parse_algebra_document(_doc(signature=[2, 3]))
    with pytest.raises(ParseError):
        parse_algebra_document(_doc(D=4))
    with pytest.raises(ParseError):
        parse_algebra_document(_doc(field="reals"))
    with pytest.raises(ParseError):
        parse_algebra_document(_doc(generators=[]))
    with pytest.raises(ParseError):
        parse_algebra_document("[1, 2]")


def test_algebra_document_reads_back():
    g = sl2()
    parsed = parse_algebra_document(json.dumps(algebra_document(g)))
    assert LieAlgebraBasis.from_matrices(list(parsed.generators), g.name) == g


@pytest.mark.parametrize(
    "name,params",
    [
        ("SO(p,q)", {"p": 2, "q": 3}),
        ("SO12_BLOCK_P2", {"n": 3}),
        ("APPENDIX_SO12", {}),
    ],
)
def test_verdict_survives_serialization(name, params):
    rep = Representation(builtin(name, params))
    verdict = decide_irreducibility(rep)
    data = json.loads(json.dumps(verdict_to_json(verdict)))
    again = verdict_from_json(data, rep.field, rep.D)
    assert again.verdict is verdict.verdict
    assert verify_verdict(rep, again)


def test_rendering_is_deterministic(tmp_path):
    report = Report(
        command="verify",
        request={"battery": "APPENDIX_A", "seed": 0},
        items=[BatteryItem("first", True), BatteryItem("second", False, "dim 2")],
        tool_version="0.3.0",
    )
    assert render_json(report) == render_json(report)
    doc = json.loads(render_json(report))
    assert list(doc) == ["tool_version", "exact", "command", "request", "items", "passed"]
    assert doc["passed"] is False

    text = render(report, human=True)
    assert "PASS  first" in text
    assert "FAIL  second  (dim 2)" in text
    assert "1 passed, 1 failed" in text

    path = tmp_path / "report.json"
    path.write_text(render_json(report), encoding="utf-8")
    assert load_report(path)["command"] == "verify"
