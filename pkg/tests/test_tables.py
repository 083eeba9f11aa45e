import time

import numpy as np
import pytest

from quasispectral import tables
from quasispectral.tables import TABLE_IDS, compute_table, load_errata, load_reference, match_column, parse_value


def _column(table_id, col, errata=False):
    return {c.row: c for c in compute_table(table_id, errata=errata).cells if c.col == col}


def test_fixture_shape():
    ref = load_reference()
    assert {t for t, _ in ref} == set(TABLE_IDS)
    assert sum(len(v) for v in ref.values()) == 209
    assert all(src.startswith(f"Table {t},") for (t, _), cells in ref.items() for _, src in cells.values())
    for (t, col), cells in ref.items():
        assert len(tables.TABLES[t].columns) >= col
        assert sorted(cells) == list(range(1, len(cells) + 1))


def test_parse_value():
    assert parse_value("0.3-0.6i") == 0.3 - 0.6j
    assert parse_value("-0.670332i") == -0.670332j
    assert parse_value("1") == 1


def test_errata_rows_point_at_fixture_cells():
    ref = load_reference()
    for e in load_errata():
        if e.row is None:
            assert e.kind == "header"
        else:
            assert ref[(e.table_id, e.col)][e.row][0] == parse_value(e.printed)


def test_match_column_assignment():
    pairs = match_column({1: 1.0, 2: -1.0}, np.array([-1.0 + 1e-7, 1.0]))
    assert {r: d < 1e-6 for r, _, _, d in pairs} == {1: True, 2: True}
    with pytest.raises(ValueError):
        match_column({1: 0.0}, np.array([0.0, 1.0]))


@pytest.mark.parametrize("table_id", TABLE_IDS)
def test_all_tables_with_errata(table_id):
    res = compute_table(table_id, errata=True)
    assert res.ok, res.failures()


@pytest.mark.parametrize("table_id,cells", [(1, {(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)}), (8, {(3, 2)}), (9, {(3, 3)})])
def test_literal_failures_are_exactly_the_errata(table_id, cells):
    assert {(c.row, c.col) for c in compute_table(table_id).failures()} == cells


def test_header_erratum_recovers_printed_values():
    # the printed first column of table 1 belongs to gamma = 1, not 3
    got = np.sort(tables.qc_jacobi_constant(-0.5, 0.0, 1.0, 5).real)
    assert np.allclose(got, [-1.23179, -0.60752, 0.00608, 0.59528, 0.95223], atol=1e-4)


def test_headline_cells():
    assert abs(_column(1, 1, errata=True)[1].computed - (-1.23179)) < 1e-4
    assert abs(_column(1, 4)[6].computed - 2.14008) < 1e-4
    for col, last in ((1, 7), (2, 8), (3, 9), (4, 10)):
        assert abs(_column(2, col)[last].computed - 1) < 1e-10
    assert abs(_column(5, 1)[1].computed - (-0.407194)) < 1e-4
    assert abs(_column(6, 1)[1].computed) < 1e-12 and abs(_column(6, 2)[1].computed) < 1e-12
    assert abs(_column(7, 3)[1].computed) < 1e-12
    assert max(abs(c.computed) for c in _column(9, 5).values()) < 1e-12
    assert abs(_column(10, 3)[1].computed - 1.0616j) < 1e-4
    assert abs(_column(10, 2)[5].computed - (-0.670332j)) < 1e-4
    col3 = _column(3, 3)
    assert abs(col3[max(col3)].computed - 1) < 1e-10


def test_unknown_table():
    with pytest.raises(KeyError):
        compute_table(11)


def test_runtime():
    t0 = time.perf_counter()
    for t in TABLE_IDS:
        compute_table(t)
    assert time.perf_counter() - t0 < 5
