"""The acceptance gate: every criterion at its stated scale, zero tolerance.

Each test prints one pass/fail line; run with `pytest -s tests/test_acceptance.py`
to see them.
"""

import json

import pytest

from arrowcat.generators import Bounds
from arrowcat.rings import GF, ZZ
from arrowcat.selftest import (
    SUITES,
    suite_3x3,
    suite_anaconda,
    suite_classification_ring,
    suite_counterexample,
    suite_les,
    suite_matrix_calculus,
    suite_puppe_ring,
    suite_regularity_goodness,
    suite_short_five,
    suite_snake,
    suite_snf,
    suite_two_puppe,
    suite_universal2,
)

BOUNDS = Bounds(max_dim=2)


def _verdict(criterion: int, name: str, result):
    status = "PASS" if result.failures == 0 else "FAIL"
    notes = f"  {'; '.join(result.notes)}" if result.notes else ""
    print(f"[{status}] criterion {criterion}: {name} "
          f"({result.cases} cases, {result.failures} failures){notes}")
    assert result.failures == 0, f"criterion {criterion} failed: {name}"


def test_criterion_1_snf():
    _verdict(1, "SNF suite, 500 seeded matrices", suite_snf(1001, 500, BOUNDS))


@pytest.mark.parametrize("ring", [GF(2), GF(3), GF(5), ZZ], ids=str)
def test_criterion_2_universal_properties(ring):
    result = suite_universal2(ring)(1002, 200, BOUNDS)
    _verdict(2, f"universal properties over {ring}, 200 squares x 20 rivals", result)


@pytest.mark.parametrize("ring", [GF(2), GF(3), GF(5)], ids=str)
def test_criterion_3_two_abelianness(ring):
    result = suite_two_puppe(ring)(1003, 200, BOUNDS)
    _verdict(3, f"2-abelianness over {ring}, 200 squares", result)


def test_criterion_4_axiom_of_choice_boundary(tmp_path):
    result = suite_counterexample(1004, 1, BOUNDS)
    _verdict(4, "integer counterexample classification", result)
    from arrowcat.cli import main

    out = tmp_path / "demo.json"
    rc = main(["demo-nonsplit", "--out", str(out)])
    rep = json.loads(out.read_text())
    ok = (
        rc == 0
        and rep["result"]["classification"]["faithful"]
        and rep["result"]["classification"]["full"]
        and rep["result"]["classification"]["fullyFaithful"]
        and rep["result"]["classification"]["cofaithful"]
        and rep["result"]["classification"]["fullyCofaithful"]
        and not rep["result"]["classification"]["equivalence"]
        and rep["result"]["equivalenceData"] is None
        and rep["result"]["splitWitness"] is None
    )
    print(f"[{'PASS' if ok else 'FAIL'}] criterion 4: demo-nonsplit reproduces the classification")
    assert ok


@pytest.mark.parametrize("ring", [GF(2), GF(3), GF(5), ZZ], ids=str)
def test_criterion_5_puppe(ring):
    result = suite_puppe_ring(ring)(1005, 100, BOUNDS)
    _verdict(5, f"Puppe sequence over {ring}, 100 squares", result)


def test_criterion_6_snake():
    _verdict(6, "generalized snake, 100 instances", suite_snake(1006, 100, BOUNDS))


def test_criterion_6_three_by_three():
    _verdict(6, "3x3 lemma, 100 instances", suite_3x3(1007, 100, BOUNDS))


def test_criterion_6_short_five():
    _verdict(6, "short five (plain+refined), 100 instances", suite_short_five(1008, 100, BOUNDS))


def test_criterion_6_anaconda():
    _verdict(6, "anaconda, 100 instances", suite_anaconda(1009, 100, BOUNDS))


def test_criterion_7_les():
    _verdict(
        7,
        "long exact sequence of homology, 50 split complex extensions",
        suite_les(1010, 50, BOUNDS),
    )


def test_criterion_8_matrix_calculus():
    _verdict(8, "matrix calculus over F3, 200 grids", suite_matrix_calculus(1011, 200, BOUNDS))


@pytest.mark.parametrize("ring", [GF(2), GF(3), GF(5), ZZ], ids=str)
def test_criterion_9_classification_vs_enumeration(ring):
    result = suite_classification_ring(ring)(1012, 500, BOUNDS)
    _verdict(9, f"classification vs enumeration over {ring}, 500 squares", result)


def test_criterion_10_regularity_goodness():
    _verdict(
        10,
        "regularity and goodness over prime fields, 200 squares",
        suite_regularity_goodness(1013, 200, BOUNDS),
    )
