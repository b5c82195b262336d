"""Invariant reports and verification rows, with their flat text formats.

Serialized forms are fixed so golden files diff cleanly:
  * key=value block: one `key=value` line per field below, `-` for absent;
  * report CSV row:  label,source,size,<fields in REPORT_FIELDS order>;
  * verification CSV: group,invariant,formula,oracle,verdict.
Matching bounds (inexact even-order estimates) print as `lo..hi`.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, fields
from typing import NamedTuple

from .errors import InvalidParameterError

REPORT_FIELDS = (
    "min_degree",
    "independence_number",
    "matching_number",
    "vertex_cover_number",
    "edge_cover_number",
    "clique_number",
    "edge_connectivity",
    "strong_metric_dimension",
    "perfect_verdict",
)

REPORT_CSV_HEADER = ("label", "source", "size") + REPORT_FIELDS

VERIFY_CSV_HEADER = ("group", "invariant", "formula", "oracle", "verdict")

VERDICT_MATCH = "match"
VERDICT_MISMATCH = "mismatch"
VERDICT_SKIPPED = "oracle-skipped(budget)"


class MatchingEstimate(NamedTuple):
    """Inclusive lower/upper estimate; lower == upper means exact."""

    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __str__(self) -> str:
        return str(self.lower) if self.exact else f"{self.lower}..{self.upper}"


def _fmt(value) -> str:
    if value is None:
        return "-"
    return str(value)


@dataclass
class InvariantReport:
    """Named invariant values plus their provenance (oracle vs formula)."""

    label: str
    source: str  # "oracle" | "formula"
    size: int
    min_degree: int | None = None
    independence_number: int | None = None
    matching_number: int | MatchingEstimate | None = None
    vertex_cover_number: int | None = None
    edge_cover_number: int | None = None
    clique_number: int | None = None
    edge_connectivity: int | None = None
    strong_metric_dimension: int | None = None
    perfect_verdict: str | None = None

    def __post_init__(self):
        if self.source not in ("oracle", "formula"):
            raise InvalidParameterError(f"bad report source {self.source!r}")
        a, b = self.independence_number, self.vertex_cover_number
        if a is not None and b is not None and a + b != self.size:
            raise InvalidParameterError(
                f"independence {a} + vertex cover {b} != {self.size}")
        m, ec = self.matching_number, self.edge_cover_number
        if isinstance(m, int) and ec is not None and m + ec != self.size:
            raise InvalidParameterError(
                f"matching {m} + edge cover {ec} != {self.size}")

    def values(self) -> dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)
                if f.name in REPORT_FIELDS}

    def to_kv_text(self) -> str:
        lines = [f"label={self.label}", f"source={self.source}", f"size={self.size}"]
        lines += [f"{k}={_fmt(v)}" for k, v in self.values().items()]
        return "\n".join(lines) + "\n"

    def to_csv_row(self) -> tuple[str, ...]:
        return (self.label, self.source, str(self.size)) + tuple(
            _fmt(v) for v in self.values().values())


@dataclass(frozen=True)
class VerificationRow:
    group: str
    invariant: str
    formula: int | MatchingEstimate | None
    oracle: int | None
    verdict: str

    def to_csv_row(self) -> tuple[str, ...]:
        return (self.group, self.invariant, _fmt(self.formula), _fmt(self.oracle), self.verdict)


def make_row(group: str, invariant: str, formula, oracle,
             oracle_skipped: bool = False) -> VerificationRow:
    """Build a row with the verdict decided by value comparison.

    A MatchingEstimate formula matches when the oracle value lies inside
    the inclusive bounds; exact values must be equal.
    """
    if oracle_skipped:
        verdict = VERDICT_SKIPPED
    elif formula is None or oracle is None:
        verdict = VERDICT_MISMATCH
    elif isinstance(formula, MatchingEstimate):
        verdict = VERDICT_MATCH if formula.lower <= oracle <= formula.upper else VERDICT_MISMATCH
    else:
        verdict = VERDICT_MATCH if formula == oracle else VERDICT_MISMATCH
    return VerificationRow(group, invariant, formula, oracle, verdict)


def rows_to_csv(rows) -> str:
    out = io.StringIO()
    out.write(",".join(VERIFY_CSV_HEADER) + "\n")
    for row in rows:
        out.write(",".join(row.to_csv_row()) + "\n")
    return out.getvalue()


def reports_to_csv(reports) -> str:
    out = io.StringIO()
    out.write(",".join(REPORT_CSV_HEADER) + "\n")
    for rep in reports:
        out.write(",".join(rep.to_csv_row()) + "\n")
    return out.getvalue()
