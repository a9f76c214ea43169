import json
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from monideal import MonomialIdeal, lct
from monideal.harness import SweepConfig, sweep, verify_ideal
from monideal.reports import (
    CheckReport,
    ReportDocument,
    Verdict,
    decode_rational,
    emit_json,
    ideal_from_payload,
    ideal_payload,
)

from conftest import primary_ideals
from hypothesis import given

EX = MonomialIdeal(3, [(5, 0, 0), (0, 4, 0), (0, 0, 2)])
SCHEMA = json.loads(resources.files("monideal").joinpath("report.schema.json").read_text())


def test_rational_encoding():
    doc = ReportDocument({"lct": lct(EX)}, [])
    text = emit_json(doc)
    assert b'"lct":{"den":"20","num":"19"}' in text
    big = Fraction(3**80, 7**40)
    assert decode_rational(json.loads(emit_json(ReportDocument({"x": big}, [])))["config"]["x"]) == big


def test_canonical_form():
    doc = ReportDocument({"b": 1, "a": [Fraction(1, 2)]}, [])
    raw = emit_json(doc)
    assert raw.endswith(b"}\n") and raw.count(b"\n") == 1
    obj = json.loads(raw)
    assert list(obj) == sorted(obj)
    assert list(obj["config"]) == ["a", "b"]
    assert raw == (json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n").encode()


def test_empty_sweep_is_schema_valid():
    doc = sweep(SweepConfig(count=0))
    obj = json.loads(emit_json(doc))
    jsonschema.validate(obj, SCHEMA)
    assert set(obj["summary"].values()) == {0}


def test_verify_document_is_schema_valid():
    for cs in ([1], [Fraction(1, 2), 2]):
        jsonschema.validate(json.loads(emit_json(verify_ideal(EX, cs))), SCHEMA)
    jsonschema.validate(json.loads(emit_json(sweep(SweepConfig(dims=(2, 3), count=3, checks=("lemma_Q",))))), SCHEMA)


def test_schema_rejects_violated_without_witness():
    obj = json.loads(emit_json(verify_ideal(EX, [1])))
    obj["reports"][0]["verdict"] = "VIOLATED"
    obj["reports"][0]["witness"] = None
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(obj, SCHEMA)


def test_violated_report_carries_witness():
    r = CheckReport("demo", EX, Fraction(1), Verdict.VIOLATED, {}, {"u": [1, 1, 1]})
    assert r.to_dict()["witness"] == {"u": [1, 1, 1]}
    assert not r.ok


@given(primary_ideals(dims=(1, 2, 3, 4)))
def test_ideal_payload_round_trip(a):
    payload = json.loads(emit_json(ReportDocument({"ideal": a}, [])))["config"]["ideal"]
    assert payload == ideal_payload(a)
    assert ideal_from_payload(payload) == a


def test_floats_are_shortest_round_trip():
    x = 0.1 + 0.2
    obj = json.loads(emit_json(ReportDocument({"x": x}, [])))
    assert obj["config"]["x"] == x
    with pytest.raises(ValueError):
        emit_json(ReportDocument({"x": float("nan")}, []))
