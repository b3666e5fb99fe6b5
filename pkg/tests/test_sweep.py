import math

import pytest

from sombortree.graph import validate
from sombortree.sweep import (
    CSV_HEADER,
    SweepRecord,
    evaluate_sequence,
    generate_degree_sequences,
    read_csv,
    sweep,
    write_csv,
)


def degrees_set(max_n, n):
    return {d.degrees for d in generate_degree_sequences(max_n) if d.vertex_count == n}


def test_generate_n4():
    assert degrees_set(4, 4) == {(3,), (2, 2)}


def test_generate_n5():
    assert degrees_set(5, 5) == {(4,), (3, 2), (2, 2, 2)}


def test_generate_n6():
    assert degrees_set(6, 6) == {(5,), (4, 2), (3, 3), (3, 2, 2), (2, 2, 2, 2)}


def test_generate_no_duplicates_and_feasible():
    seqs = generate_degree_sequences(10)
    assert len(seqs) == len({(d.vertex_count, d.degrees) for d in seqs})
    for d in seqs:
        assert validate(d.degrees).degrees == d.degrees


def test_sweep_row_count_n6(tmp_path):
    out = tmp_path / "report.csv"
    records = sweep(6, out_csv=out)
    assert len(records) == 11  # 1 + 2 + 3 + 5
    assert all(r.optimal for r in records)
    assert all(r.local_max for r in records)


def test_sweep_path_rows_match_closed_form():
    for m in (2, 3, 4):
        record, _, _ = evaluate_sequence(validate([2] * m))
        expected = 2 * math.sqrt(5) + (m - 1) * math.sqrt(8)
        assert record.constructed_so == pytest.approx(expected, rel=1e-12)
        assert record.oracle_so == pytest.approx(expected, rel=1e-12)


def test_csv_roundtrip(tmp_path):
    records = sweep(6)
    out = tmp_path / "report.csv"
    write_csv(records, out)
    text = out.read_text()
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    parsed = read_csv(out)
    assert len(parsed) == len(records)
    for a, b in zip(parsed, records):
        assert a.degrees == b.degrees
        assert (a.n, a.m, a.optimal, a.capped, a.local_max) == (
            b.n,
            b.m,
            b.optimal,
            b.capped,
            b.local_max,
        )
        assert a.constructed_so == pytest.approx(b.constructed_so, rel=1e-11)
        assert a.oracle_so == pytest.approx(b.oracle_so, rel=1e-11)
        assert a.theorem1_violations == b.theorem1_violations
        assert a.enumerated == b.enumerated


def test_capped_sweep_flags_rows(tmp_path):
    records = sweep(6, cap=3, out_csv=tmp_path / "r.csv")
    assert any(r.capped for r in records)
    # capped rows are inconclusive; they never produce witness dumps
    assert list(tmp_path.glob("witness_*")) == []


def test_record_gap_invariant():
    for d in generate_degree_sequences(7):
        record, _, _ = evaluate_sequence(d)
        assert record.gap >= -1e-9 * record.oracle_so
        if record.optimal:
            assert record.local_max
