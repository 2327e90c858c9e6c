import pytest

from conich1.enumeration import (
    D6_FIXTURES,
    TABLE_ROWS,
    clean_elements,
    enumerate_wdn,
    match_table_row,
    verify_tables,
)
from conich1.groups import are_conjugate, closure
from conich1.signedperm import parse_element


def test_table_row_counts():
    assert {n: len(rows) for n, rows in TABLE_ROWS.items()} == {4: 1, 5: 3, 6: 15, 7: 10, 8: 4, 9: 13}


def test_d6_fixture_rows_present():
    assert sorted(D6_FIXTURES) == [
        "D6(10)", "D6(12)", "D6(13)", "D6(14)", "D6(15)", "D6(4)", "D6(7)", "D6(8)", "D6(9)",
    ]


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_verify_tables(n):
    rep = verify_tables(n)
    assert rep.all_ok, [r.row_id for r in rep.rows if not r.all_ok]
    assert rep.pairwise_distinct


def test_verify_tables_unknown_rank():
    with pytest.raises(ValueError):
        verify_tables(11)


def test_clean_elements_small():
    clean = clean_elements(4)
    # the Klein-type flip c1c2c3c4 has Lambda = 4, so it is not clean
    assert parse_element("c1 c2 c3 c4", 4).enc not in clean
    assert parse_element("c1 c2", 4).enc in clean
    assert parse_element("(1,2,3)", 4).enc in clean


def test_enumerate_4_both_modes():
    full = enumerate_wdn(4, "full")
    guided = enumerate_wdn(4, "generator_guided")
    assert len(full.entries) == len(guided.entries) == 1
    assert full.entries[0].class_id == 1 and full.entries[0].name == "S_3"
    assert {e.canonical_key for e in full.entries} == {e.canonical_key for e in guided.entries}


def test_enumerate_rejects_bad_modes():
    with pytest.raises(ValueError):
        enumerate_wdn(6, "full")
    with pytest.raises(ValueError):
        enumerate_wdn(8, "generator_guided")
    with pytest.raises(ValueError):
        enumerate_wdn(5, "nope")


def test_match_table_row():
    grp = closure([parse_element(t, 4) for t in ("c1 c2 c3 c4 (2,3)", "(1,2,3)")])
    name, cid, params = match_table_row(grp)
    assert name == "S_3" and cid == 1 and params == {"n": 1}
    unknown = closure([parse_element("c1 c2", 4)])
    name, cid, params = match_table_row(unknown)
    assert cid is None and "order 2" in name


@pytest.mark.heavy
def test_enumerate_5_both_modes_heavy():
    full = enumerate_wdn(5, "full")
    guided = enumerate_wdn(5, "generator_guided")
    assert len(full.entries) == len(guided.entries) == 3
    assert {e.canonical_key for e in full.entries} == {e.canonical_key for e in guided.entries}


@pytest.mark.heavy
def test_enumerate_6_matches_table(guided_enumeration):
    res = guided_enumeration(6)
    assert len(res.entries) == 15
    # row-for-row: every enumerated class is conjugate to exactly one table row
    rows = [(row, row.build(6)) for row in TABLE_ROWS[6]]
    matched = set()
    for e in res.entries:
        grp = closure([parse_element(t, 6) for t in e.generators], n=6)
        hits = [row.row_id for row, R in rows if R.order == grp.order and are_conjugate(grp, R)]
        assert len(hits) == 1, (e.order, hits)
        matched.add(hits[0])
    assert len(matched) == 15


@pytest.mark.heavy
def test_enumerate_7_matches_table(guided_enumeration):
    res = guided_enumeration(7)
    assert len(res.entries) == 10
    rows = [(row, row.build(7)) for row in TABLE_ROWS[7]]
    matched = set()
    for e in res.entries:
        grp = closure([parse_element(t, 7) for t in e.generators], n=7)
        hits = [row.row_id for row, R in rows if R.order == grp.order and are_conjugate(grp, R)]
        assert len(hits) >= 1, (e.order, hits)
        matched.update(hits)
    assert len(matched) == 10
