"""Exact equivariant characters of circle actions by K-theoretic localization.

Rationals are returned as fractions.Fraction; datasets are JSON text or a
path to a JSON file.
"""

import json
import os
from fractions import Fraction

from . import _core
from ._core import (
    DenominatorVanishes,
    InconsistentData,
    LoclaurentError,
    NonPolynomialSum,
    NotAUnit,
    ParseError,
    PreconditionViolated,
    WindowError,
    run_cli,
)

__all__ = [
    "DenominatorVanishes",
    "InconsistentData",
    "LoclaurentError",
    "NonPolynomialSum",
    "NotAUnit",
    "ParseError",
    "PreconditionViolated",
    "WindowError",
    "character",
    "emit_example",
    "evaluate",
    "examples",
    "invert_at_infinity",
    "invert_at_zero",
    "run_cli",
    "validate",
    "verify",
]


def _text(dataset):
    if isinstance(dataset, dict):
        return json.dumps(dataset)
    if isinstance(dataset, os.PathLike) or (isinstance(dataset, str) and not dataset.lstrip().startswith("{")):
        with open(dataset, encoding="utf-8") as f:
            return f.read()
    return dataset


def _terms_in(poly):
    return {int(d): str(Fraction(c)) for d, c in poly.items()}


def _series_out(s):
    s["terms"] = {d: Fraction(c) for d, c in s["terms"].items()}
    return s


def invert_at_zero(poly, order):
    """Series of 1/poly in powers of z, exact through z**order.

    poly maps degrees to coefficients (int, Fraction or "p/q").
    """
    return _series_out(_core.invert_at_zero(_terms_in(poly), order))


def invert_at_infinity(poly, order):
    """Series of 1/poly in powers of 1/z, exact down to z**order."""
    return _series_out(_core.invert_at_infinity(_terms_in(poly), order))


def validate(dataset):
    """List of validation issues; empty when the dataset is well formed."""
    return _core.validate(_text(dataset))


def character(dataset, margin=_core.default_margin, z0=None):
    """Character report: {"character": {degree: Fraction}, "invariant_part": ..., ...}."""
    report = json.loads(_core.character(_text(dataset), margin, None if z0 is None else str(Fraction(z0))))
    report["character"] = {d: Fraction(c) for d, c in report["character"]}
    for key in ("invariant_part", "dimension"):
        report[key] = Fraction(report[key])
    if "eval" in report:
        report["eval"] = {k: Fraction(v) for k, v in report["eval"].items()}
    return report


def verify(dataset, against=None, margin=_core.default_margin):
    """Runs every check whose hypotheses hold and returns the report as a dict."""
    other = None if against is None else _text(against)
    return json.loads(_core.verify(_text(dataset), other, margin))


def evaluate(dataset, z0):
    """Exact value of the character at z0."""
    return Fraction(_core.evaluate(_text(dataset), str(Fraction(z0))))


def examples():
    """Names of the bundled example datasets."""
    return list(_core.example_names())


def emit_example(name):
    """Dataset text of a bundled example."""
    return _core.emit_example(name)
