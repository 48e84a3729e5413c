"""Rendering of ranking reports and single-number summaries."""
import json

from bnnctl.config import DEFAULT_PRECISION

from .aggregation import Operator
from .bnn import Bnn, accuracy, certainty, format_bnn, format_real, score
from .mcdm import RankingReport

OPERATOR_TITLES = {
    Operator.AVERAGE: "weighted average (A_w)",
    Operator.GEOMETRIC: "weighted geometric (G_w)",
}

REPORT_STYLES = ("table", "json")


def report_to_dict(report: RankingReport) -> dict:
    """Full-precision JSON-ready form of a report."""
    return {
        "operator": report.operator.value,
        "tie_tolerance": report.tie_tolerance,
        "alternatives": [
            {
                "label": r.label,
                "aggregate": list(r.aggregate.astuple()),
                "score": r.score,
                "accuracy": r.accuracy,
                "certainty": r.certainty,
                "rank": r.rank,
            }
            for r in report.results
        ],
        "ordering": [list(group) for group in report.ordering],
        "ordering_line": report.ordering_line(),
    }


def _table(report: RankingReport, precision: int) -> str:
    header = ("Alternative", "Aggregate", "Score", "Accuracy", "Certainty", "Rank")
    rows = [
        (
            r.label,
            format_bnn(r.aggregate, precision),
            format_real(r.score, precision),
            format_real(r.accuracy, precision),
            format_real(r.certainty, precision),
            str(r.rank),
        )
        for r in report.results
    ]
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header))]

    lines = [f"Operator: {OPERATOR_TITLES[report.operator]}", ""]
    for row in [header, *rows]:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    lines += ["", report.ordering_line()]
    return "\n".join(lines) + "\n"


def render_report(report: RankingReport, style: str = "table", precision: int = DEFAULT_PRECISION) -> bytes:
    """Render as an aligned table (truncated to ``precision``) or full-precision JSON."""
    if style == "json":
        text = json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"
    elif style == "table":
        text = _table(report, precision)
    else:
        raise ValueError(f"Unknown report style '{style}'. Available: {', '.join(REPORT_STYLES)}")
    return text.encode("utf-8")


def render_summary(a: Bnn, precision: int) -> str:
    """Score, accuracy and certainty of a single number, one per line."""
    return "\n".join([
        f"bnn:       {format_bnn(a, precision)}",
        f"score:     {format_real(score(a), precision)}",
        f"accuracy:  {format_real(accuracy(a), precision)}",
        f"certainty: {format_real(certainty(a), precision)}",
    ])
