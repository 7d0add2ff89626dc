import pytest

from polyproj import ReportRow, from_csv, from_json, render, to_csv, to_json
from polyproj.report import COLUMNS

FULL = ReportRow(
    command="simulate", model="gaussian", family="", n=5, d=2, k=0,
    t=None, value=6.125, stderr=0.03125, method="monte_carlo",
    strict_increase=None, formula_value=6.0999999999, z_score=0.1,
    t_functional=None, wall_time_s=None,
)
SPARSE = ReportRow(command="expected", family="cube", n=4, d=3, k=1, value=24.0,
                   stderr=0.0, method="exact")
FLAGGED = ReportRow(command="monotonicity", model="zonotope", n=3, d=2, k=0,
                    value=6.0, stderr=0.0, method="exact", strict_increase=True)
EDGE = ReportRow(command="simulate", model="zonotope", n=4, d=3, k=0, value=14.0,
                 stderr=0.0, method="monte_carlo", formula_value=14.0,
                 z_score=float("inf"), strict_increase=False)

ROWS = [FULL, SPARSE, FLAGGED, EDGE]


def test_csv_round_trip():
    text = to_csv(ROWS)
    assert text.splitlines()[0] == ",".join(COLUMNS)
    assert from_csv(text) == ROWS


def test_json_round_trip():
    assert from_json(to_json(ROWS)) == ROWS


def test_csv_header_is_checked():
    bad = "a,b,c\n1,2,3\n"
    with pytest.raises(ValueError):
        from_csv(bad)


def test_float_cells_round_trip_exactly():
    row = from_csv(to_csv([FULL]))[0]
    assert row.formula_value == 6.0999999999
    assert row.stderr == 0.03125


def test_bool_cells():
    lines = to_csv([FLAGGED, EDGE]).splitlines()
    assert ",true," in lines[1]
    assert ",false," in lines[2]


def test_missing_cells_are_empty_or_null():
    text = to_csv([SPARSE])
    line = text.splitlines()[1]
    assert line.split(",")[6] == ""  # the t column
    js = to_json([SPARSE])
    assert '"t": null' in js


def test_json_missing_keys_default():
    rows = from_json('[{"command": "expected", "n": 3}]')
    assert rows[0].command == "expected"
    assert rows[0].n == 3
    assert rows[0].model == ""
    assert rows[0].value is None


def test_render_dispatch():
    assert render(ROWS, "csv") == to_csv(ROWS)
    assert render(ROWS, "json") == to_json(ROWS)
    with pytest.raises(ValueError):
        render(ROWS, "xml")


def test_serialization_is_deterministic():
    assert to_csv(ROWS) == to_csv(list(ROWS))
    assert to_json(ROWS) == to_json(list(ROWS))
