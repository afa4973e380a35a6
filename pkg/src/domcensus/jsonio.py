"""JSON wire formats.

Rationals travel as exact strings "p/q" in lowest terms (q > 0, "p/1"
collapsed to "p"); JSON numbers would silently lose exactness.  Seifert
data is {"genus": int, "b": int, "fibers": [[a, b], ...]} with fibers in
canonical order on output, monodromies are {"matrix": [[a, b], [c, d]]}.
"""

from __future__ import annotations

from fractions import Fraction

from .domination import CensusRecord, Check, DominationBudget
from .seifert import InvariantSummary, SeifertData
from .torus_bundle import AnosovMatrix, Mat2


class SchemaError(ValueError):
    """Input JSON does not match the expected shape."""


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {value!r}: {exc}") from None
    raise SchemaError(f"expected a rational, got {value!r}")


def _require_int(obj, key) -> int:
    value = obj.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"field {key!r} must be an integer, got {value!r}")
    return value


def seifert_to_json(data: SeifertData) -> dict:
    return {
        "genus": data.genus,
        "b": data.b,
        "fibers": [[a, t] for a, t in data.fibers],
    }


def seifert_from_json(obj) -> SeifertData:
    if not isinstance(obj, dict):
        raise SchemaError("Seifert data must be a JSON object")
    genus = _require_int(obj, "genus")
    b = _require_int(obj, "b")
    fibers = obj.get("fibers", [])
    if not isinstance(fibers, list):
        raise SchemaError("'fibers' must be a list of [a, b] pairs")
    pairs = []
    for item in fibers:
        if not isinstance(item, list) or len(item) != 2 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in item
        ):
            raise SchemaError(f"bad fiber entry {item!r}")
        pairs.append((item[0], item[1]))
    return SeifertData(genus, b, tuple(pairs))


def anosov_to_json(matrix: AnosovMatrix) -> dict:
    return {"matrix": [[matrix.a, matrix.b], [matrix.c, matrix.d]]}


def matrix_entries_from_json(obj) -> tuple[int, int, int, int]:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise SchemaError("expected {'matrix': [[a, b], [c, d]]}")
    rows = obj["matrix"]
    if (
        not isinstance(rows, list)
        or len(rows) != 2
        or any(not isinstance(r, list) or len(r) != 2 for r in rows)
        or any(isinstance(x, bool) or not isinstance(x, int) for r in rows for x in r)
    ):
        raise SchemaError("'matrix' must be a 2x2 array of integers")
    return rows[0][0], rows[0][1], rows[1][0], rows[1][1]


def mat2_to_json(matrix: Mat2) -> list[list[int]]:
    return [list(matrix[0]), list(matrix[1])]


def budget_from_json(obj) -> DominationBudget:
    if not isinstance(obj, dict):
        raise SchemaError("budget must be a JSON object")
    return DominationBudget(
        torsion_order=_require_int(obj, "torsion_order"),
        rank_bound=_require_int(obj, "rank_bound"),
        sv_bound=parse_rational(obj.get("sv_bound", 0)),
        norm_budget=_require_int(obj, "norm_budget"),
    )


def budget_to_json(budget: DominationBudget) -> dict:
    return {
        "torsion_order": budget.torsion_order,
        "rank_bound": budget.rank_bound,
        "sv_bound": format_rational(budget.sv_bound),
        "norm_budget": budget.norm_budget,
    }


def summary_to_json(summary: InvariantSummary) -> dict:
    return {
        "e": format_rational(summary.e),
        "chi": format_rational(summary.chi),
        "sv": None if summary.sv is None else format_rational(summary.sv),
        "torsion": summary.torsion_order,
        "geometry": summary.geometry.value,
    }


def check_to_json(check: Check) -> dict:
    return {
        "name": check.name,
        "value": format_rational(check.value),
        "bound": format_rational(check.bound),
        "passed": check.passed,
    }


def record_to_json(record: CensusRecord) -> dict:
    if isinstance(record.target, SeifertData):
        target = seifert_to_json(record.target)
    else:
        target = anosov_to_json(record.target)
    return {
        "case": record.case,
        "target": target,
        "invariants": {
            "e": None if record.e is None else format_rational(record.e),
            "chi": None if record.chi is None else format_rational(record.chi),
            "sv": None if record.sv is None else format_rational(record.sv),
            "torsion": record.torsion,
            "geometry": record.geometry,
        },
        "checks": [check_to_json(c) for c in record.checks],
    }
