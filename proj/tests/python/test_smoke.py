import os
from fractions import Fraction
from pathlib import Path

import pytest

import loclaurent

ROOT = Path(os.environ.get("LOCLAURENT_SOURCE_DIR", Path(__file__).resolve().parents[2]))
DATA = ROOT / "data" / "examples"


def test_invert_at_zero_geometric_series():
    s = loclaurent.invert_at_zero({0: 1, 1: -1}, 3)
    assert s["terms"] == {0: 1, 1: 1, 2: 1, 3: 1}
    assert (s["low"], s["high"]) == (0, 3)


def test_invert_at_infinity_mirror():
    s = loclaurent.invert_at_infinity({0: 1, 1: -1}, -3)
    assert s["terms"] == {-1: -1, -2: -1, -3: -1}
    assert loclaurent.invert_at_infinity({0: Fraction(-4, 3)}, -2)["terms"] == {0: Fraction(-3, 4)}


def test_invert_rejects_non_units():
    with pytest.raises(loclaurent.NotAUnit):
        loclaurent.invert_at_zero({}, 4)


def test_character_of_the_sphere():
    report = loclaurent.character(DATA / "sphere-1-1.json", z0=2)
    assert report["character"] == {-1: 1, 0: 1, 1: 1}
    assert report["invariant_part"] == 1
    assert report["dimension"] == 3
    assert report["eval"]["value"] == Fraction(7, 2)
    assert report["paths"]["agree"]


def test_examples_round_trip():
    names = loclaurent.examples()
    assert {"sphere(1,1)", "shifted-sphere", "cp2-triangle", "dual-number-synthetic"} <= set(names)
    for name in names:
        text = loclaurent.emit_example(name)
        assert loclaurent.validate(text) == []
        assert loclaurent.character(text)["invariant_part"] >= 0
    with pytest.raises(KeyError):
        loclaurent.emit_example("nosuch")


def test_verify_and_evaluate():
    report = loclaurent.verify(DATA / "cp2-triangle.json")
    assert report["overall"] == "PASS"
    statuses = {c["check"]: c["status"] for c in report["checks"]}
    assert statuses == {"prop1": "PASS", "prop2": "SKIPPED", "reduction": "PASS"}
    assert loclaurent.evaluate(DATA / "cp2-triangle.json", Fraction(3, 2)) == Fraction(2743, 324)


def test_errors_are_typed():
    with pytest.raises(loclaurent.ParseError):
        loclaurent.character("{ nope")
    issues = loclaurent.validate((DATA / "sphere-1-1.json").read_text().replace('"weight": -1', '"weight": 0', 1))
    assert any("weight 0" in i for i in issues)


def test_cli_entry():
    code, out, _ = loclaurent.run_cli(["character", str(DATA / "point-space.json")])
    assert code == 0
    assert out.startswith("character: 1\n")
