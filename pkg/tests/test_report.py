"""Serialization formats for reports and verification rows."""

from epgraph.report import (
    REPORT_CSV_HEADER,
    InvariantReport,
    MatchingEstimate,
    VerificationRow,
    make_row,
    reports_to_csv,
    rows_to_csv,
)


def test_kv_block_has_fixed_keys_and_dash_for_absent():
    rep = InvariantReport(label="Z_5", source="formula", size=5,
                          min_degree=4, independence_number=1,
                          vertex_cover_number=4)
    text = rep.to_kv_text()
    assert "label=Z_5" in text
    assert "min_degree=4" in text
    assert "edge_connectivity=-" in text
    assert text.endswith("perfect_verdict=-\n")


def test_report_csv_row_matches_header():
    rep = InvariantReport(label="Q_8", source="oracle", size=8, matching_number=4)
    csv_text = reports_to_csv([rep])
    header, row = csv_text.strip().split("\n")
    assert header == ",".join(REPORT_CSV_HEADER)
    assert len(row.split(",")) == len(REPORT_CSV_HEADER)
    assert row.startswith("Q_8,oracle,8,")


def test_matching_estimate_formats():
    assert str(MatchingEstimate(3, 3)) == "3"
    assert str(MatchingEstimate(2, 4)) == "2..4"
    assert MatchingEstimate(3, 3).exact


def test_make_row_verdicts():
    assert make_row("g", "x", 3, 3).verdict == "match"
    assert make_row("g", "x", 3, 4).verdict == "mismatch"
    assert make_row("g", "x", MatchingEstimate(2, 4), 3).verdict == "match"
    assert make_row("g", "x", MatchingEstimate(2, 4), 5).verdict == "mismatch"
    assert make_row("g", "x", 3, None, oracle_skipped=True).verdict == "oracle-skipped(budget)"


def test_rows_csv_shape():
    rows = [VerificationRow("dihedral:3", "min_degree", 1, 1, "match")]
    text = rows_to_csv(rows)
    assert text == ("group,invariant,formula,oracle,verdict\n"
                    "dihedral:3,min_degree,1,1,match\n")
