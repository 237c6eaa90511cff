# tests/test_schemas.py
from fractions import Fraction

import pytest
from pydantic import ValidationError

from wknots.arrows import WheelsPolynomial
from wknots.at import TDerElement, TrElement
from wknots.at.lie import is_lyndon
from wknots.at.words import parse_word
from wknots.expansions import check_action_relations, check_alexander_theorem, knot_z
from wknots.knots import parse_gauss_code
from wknots.kv import KVSolution, solve_kv_full, verify_kv
from wknots.schemas import (
    AlexanderCheckModel,
    BraidRelationReportModel,
    CombinationModel,
    DimensionRowModel,
    KVReportModel,
    KVSolutionModel,
    WheelsPolynomialModel,
    check_rational,
)

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"


# -------------------------------
# Rationals
# -------------------------------


def test_check_rational_normalizes():
    assert check_rational("2/4") == "1/2"
    assert check_rational(" 3 ") == "3"
    assert check_rational(Fraction(-6, 4)) == "-3/2"


@pytest.mark.parametrize("bad", ["x", "1/0", "", "1//2"])
def test_check_rational_rejects(bad):
    with pytest.raises(ValueError):
        check_rational(bad)


# -------------------------------
# Combinations and wheels
# -------------------------------


def test_combination_round_trip():
    value = knot_z(parse_gauss_code(TREFOIL), 2).value
    model = CombinationModel.from_combination(value)
    assert model.skeleton == "line"
    again = CombinationModel.model_validate_json(model.model_dump_json())
    assert again.to_combination() == value


def test_combination_strands():
    model = CombinationModel(skeleton="strands:2", terms={"a12 a21": "-2/4", "1": "1"})
    assert model.skeleton == "Strands(2)"
    assert model.terms["a12 a21"] == "-1/2"
    assert len(model.to_combination().terms) == 2


@pytest.mark.parametrize(
    "payload",
    [
        {"skeleton": "line", "terms": {"T1 H1": "1"}, "extra": 1},
        {"skeleton": "torus", "terms": {}},
        {"skeleton": "line", "terms": {"T1 X1": "1"}},
        {"skeleton": "line", "terms": {"T1 H1": "half"}},
        {"skeleton": "strands:2", "terms": {"a13": "1"}},
        {"skeleton": "line", "degree": -1, "terms": {}},
    ],
)
def test_combination_validation_errors(payload):
    with pytest.raises(ValidationError):
        CombinationModel.model_validate(payload)


def test_wheels_model():
    p = WheelsPolynomial({(): 1, (1,): 3, (2, 2): Fraction(-1, 2)}, 4)
    model = WheelsPolynomialModel.from_wheels(p)
    assert model.terms == {"1": "1", "DA": "3", "w2^2": "-1/2"}
    assert model.to_wheels() == p


@pytest.mark.parametrize("key", ["Q3", "w0", "DA^x", "w2^0"])
def test_wheels_model_rejects_bad_monomials(key):
    with pytest.raises(ValidationError):
        WheelsPolynomialModel(terms={key: "1"})


# -------------------------------
# KV solutions
# -------------------------------


def test_kv_solution_round_trip():
    sol = solve_kv_full(2)
    model = KVSolutionModel.from_solution(sol)
    again = KVSolutionModel.model_validate_json(model.model_dump_json()).to_solution()
    assert again == sol
    assert verify_kv(again).passed


def test_kv_keys_are_lyndon_words():
    model = KVSolutionModel.from_solution(solve_kv_full(2))
    # G_1 = (y/2, 0) becomes D_2 = x1/2 after the strand swap
    assert model.D[1]["x1"] == "1/2"
    assert "x1" not in model.D[0] and "x2" not in model.D[0]
    for comp in model.D:
        assert all(is_lyndon(parse_word(key)) for key in comp)


@pytest.mark.parametrize(
    "payload",
    [
        {"N": 2, "D": [{"x2 x1": "1"}, {}]},
        {"N": 2, "D": [{"x3": "1"}, {}]},
        {"N": 2, "D": [{}]},
        {"N": 0, "D": [{}, {}]},
        {"N": 2, "D": [{}, {}], "b": {"1": "1"}},
        {"N": 2, "D": [{}, {}], "c": {"x2": "1"}},
        {"N": 2, "D": [{}, {}], "b": {"x1 x2": "abc"}},
        {"N": 2, "D": [{}, {}], "a": {}},
    ],
)
def test_kv_validation_errors(payload):
    with pytest.raises(ValidationError):
        KVSolutionModel.model_validate(payload)


# -------------------------------
# Reports
# -------------------------------


def test_dimension_row():
    row = DimensionRowModel(space="w", skeleton="line", dims=[1, 2], capped_at=2)
    assert row.text() == "1 2 [cap reached at degree 2]"
    row.primitives = [2]
    assert row.text().endswith("primitives: 2")
    with pytest.raises(ValidationError):
        DimensionRowModel(space="q", skeleton="line")


def test_kv_report_model():
    zero = KVSolution(1, TDerElement.zero(2, 1), TrElement.zero(2, 1), TrElement.zero(1, 1))
    model = KVReportModel.from_report(verify_kv(zero))
    assert not model.passed
    hard = [c for c in model.checks if c.equation == "hard" and not c.passed]
    assert hard[0].degree == 2
    assert hard[0].residual == {"[x1,x2]": "-1/2"}


def test_braid_relation_report_model():
    model = BraidRelationReportModel.from_report(check_action_relations(3))
    assert model.kind == "action"
    assert model.passed
    uc = next(c for c in model.checks if c.name == "UC 1")
    assert not uc.holds
    assert uc.as_expected
    with pytest.raises(ValidationError):
        BraidRelationReportModel(kind="action", n_strands=1, passed=True, checks=[])


def test_alexander_check_model():
    model = AlexanderCheckModel.from_report(check_alexander_theorem(parse_gauss_code(TREFOIL), 2))
    assert model.passed
    assert model.self_linking == 3
    assert [p.name for p in model.parts] == ["wheels", "reduced"]
