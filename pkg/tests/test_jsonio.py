from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from domcensus.domination import DominationBudget
from domcensus.jsonio import (
    SchemaError,
    anosov_to_json,
    budget_from_json,
    budget_to_json,
    format_rational,
    matrix_entries_from_json,
    parse_rational,
    seifert_from_json,
    seifert_to_json,
)
from domcensus.seifert import SeifertData, normalize
from domcensus.torus_bundle import AnosovMatrix


class TestRationals:
    def test_integer_collapse(self):
        assert format_rational(Fraction(4, 1)) == "4"
        assert format_rational(Fraction(-3)) == "-3"
        assert format_rational(0) == "0"

    def test_lowest_terms_positive_denominator(self):
        assert format_rational(Fraction(6, -4)) == "-3/2"
        assert format_rational(Fraction(1, 3486)) == "1/3486"

    @given(st.fractions())
    def test_round_trip(self, value):
        assert parse_rational(format_rational(value)) == value

    def test_parse_accepts_ints(self):
        assert parse_rational(7) == 7

    def test_parse_rejects_floats_and_junk(self):
        with pytest.raises(SchemaError):
            parse_rational(0.5)
        with pytest.raises(SchemaError):
            parse_rational("1/0")
        with pytest.raises(SchemaError):
            parse_rational(True)
        with pytest.raises(SchemaError):
            parse_rational(None)


class TestSeifertJson:
    def test_round_trip(self):
        data = SeifertData(0, 1, ((2, 1), (3, 1), (7, 1)))
        assert seifert_from_json(seifert_to_json(data)) == data

    def test_emitted_fibers_are_canonically_ordered(self):
        data = normalize(SeifertData(0, 0, ((7, 2), (3, 1), (7, 1))))
        assert seifert_to_json(data)["fibers"] == [[3, 1], [7, 1], [7, 2]]

    def test_schema_errors(self):
        with pytest.raises(SchemaError):
            seifert_from_json([1, 2, 3])
        with pytest.raises(SchemaError):
            seifert_from_json({"genus": 0})
        with pytest.raises(SchemaError):
            seifert_from_json({"genus": 0, "b": 0, "fibers": [[2]]})
        with pytest.raises(SchemaError):
            seifert_from_json({"genus": 0, "b": 0, "fibers": [[2, 1.5]]})
        with pytest.raises(SchemaError):
            seifert_from_json({"genus": True, "b": 0, "fibers": []})


class TestMatrixJson:
    def test_round_trip(self):
        m = AnosovMatrix(2, 1, 1, 1)
        assert matrix_entries_from_json(anosov_to_json(m)) == m.as_tuple()

    def test_schema_errors(self):
        with pytest.raises(SchemaError):
            matrix_entries_from_json({"matrix": [[1, 2], [3]]})
        with pytest.raises(SchemaError):
            matrix_entries_from_json({"matrix": [[1, 2, 3], [4, 5, 6]]})
        with pytest.raises(SchemaError):
            matrix_entries_from_json({})


class TestBudgetJson:
    def test_round_trip(self):
        budget = DominationBudget(72, 4, Fraction(1, 100), 2)
        assert budget_from_json(budget_to_json(budget)) == budget

    def test_sv_bound_accepts_int_or_string(self):
        base = {"torsion_order": 1, "rank_bound": 1, "norm_budget": 0}
        assert budget_from_json({**base, "sv_bound": 4}).sv_bound == 4
        assert budget_from_json({**base, "sv_bound": "1/4000"}).sv_bound == Fraction(1, 4000)

    def test_sv_bound_rejects_float(self):
        with pytest.raises(SchemaError):
            budget_from_json(
                {"torsion_order": 1, "rank_bound": 1, "sv_bound": 0.5, "norm_budget": 0}
            )
