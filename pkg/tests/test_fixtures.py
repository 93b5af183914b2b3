from giftex.core import build_e_table, e1_closed, e_multinomial
from giftex.fixtures import (column_checks, compare_all, compare_bfile, compute, load_fixtures, read_bfile,
                             row_sum_checks)
from giftex.series import egf_bivariate_e


def test_fixture_set_shape():
    recs = load_fixtures()
    assert len(recs) == 5 * 9 * 14 + 9 * 6 + 1
    assert all(r.source for r in recs)
    assert len({r.source for r in recs if r.kind == "E"}) == 5
    assert all(isinstance(r.value, int) for r in recs)


def test_spot_values():
    by_label = {(r.kind, r.sigma, r.indices): r for r in load_fixtures()}
    rec = by_label[("E", 3, (4, 13))]
    assert rec.value == 725725 and compute(rec) == 725725
    rec = by_label[("G", 8, (5,))]
    assert rec.value == 476872353039366288373555323 == compute(rec)
    assert compute(by_label[("H", 1, (3,))]) == 42


def test_single_mismatch_is_table3_cell():
    bad = compare_all()
    assert [(m.record.kind, m.record.sigma, m.record.indices) for m in bad] == [("E", 1, (8, 13))]
    assert bad[0].record.value == 945945 and bad[0].computed == 270270


def test_table3_cell_by_independent_routes():
    assert e1_closed(8, 13) == 270270
    assert e_multinomial(1, 8, 13) == 270270
    assert egf_bivariate_e(1, 8, 13)[8][13] == 270270
    assert build_e_table(1, 8)(8, 13) == 270270


def test_cross_checks():
    assert row_sum_checks() == []
    assert column_checks() == []


def test_row_sum_check_catches_a_bad_value():
    recs = list(load_fixtures())
    i = next(i for i, r in enumerate(recs) if (r.kind, r.sigma, r.indices) == ("E", 2, (4, 10)))
    r = recs[i]
    recs[i] = type(r)(r.kind, r.sigma, r.indices, r.value + 1, r.source)
    assert len(row_sum_checks(recs)) == 1


def test_bfile(tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("# G_2\n0 1\n1 3\n\n2 31  # note\n3 842\n4 45297\n")
    snap = read_bfile(p)
    assert snap == {0: 1, 1: 3, 2: 31, 3: 842, 4: 45297}
    diffs = compare_bfile(snap, 2)
    assert len(diffs) == 1 and "45297" in diffs[0]
