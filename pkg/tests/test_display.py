"""Tests for the report and summary rendering."""
import json

import pytest
from samples import car_selection

from bnnctl.lib.aggregation import Operator
from bnnctl.lib.bnn import Bnn
from bnnctl.lib.display import render_report, render_summary, report_to_dict
from bnnctl.lib.mcdm import rank, validate_problem


@pytest.fixture(scope="module")
def report():
    return rank(car_selection())


class TestTable:
    def test_ends_with_ordering_line(self, report):
        text = render_report(report, "table", 2).decode("utf-8")
        assert text.rstrip("\n").splitlines()[-1] == "A3 > A4 > A2 > A1"

    def test_precision_three_row(self, report):
        text = render_report(report, "table", 3).decode("utf-8")
        row = next(line for line in text.splitlines() if line.startswith("A4 "))
        assert "⟨0.751, 0.513, 0.266, -0.517, -0.580, -0.221⟩" in row
        assert row.split()[-1] == "2"

    def test_header_and_title(self, report):
        lines = render_report(report).decode("utf-8").splitlines()
        assert lines[0] == "Operator: weighted average (A_w)"
        assert lines[2].split() == ["Alternative", "Aggregate", "Score", "Accuracy", "Certainty", "Rank"]

    def test_rows_in_problem_order(self, report):
        lines = render_report(report).decode("utf-8").splitlines()
        assert [line.split()[0] for line in lines[3:7]] == ["A1", "A2", "A3", "A4"]

    def test_geometric_title(self):
        text = render_report(rank(car_selection(), Operator.GEOMETRIC)).decode("utf-8")
        assert text.startswith("Operator: weighted geometric (G_w)")

    def test_single_alternative(self):
        p = validate_problem({
            "alternatives": ["Only"], "criteria": ["C1"], "weights": [1],
            "matrix": [[[0.5, 0.5, 0.5, -0.5, -0.5, -0.5]]],
        })
        text = render_report(rank(p)).decode("utf-8")
        assert text.rstrip("\n").splitlines()[-1] == "Only"

    def test_unknown_style(self, report):
        with pytest.raises(ValueError):
            render_report(report, "yaml")


class TestJson:
    def test_full_precision(self, report):
        doc = json.loads(render_report(report, "json"))
        assert doc["operator"] == "average"
        assert doc["ordering"] == [["A3"], ["A4"], ["A2"], ["A1"]]
        assert doc["ordering_line"] == "A3 > A4 > A2 > A1"
        first = doc["alternatives"][0]
        assert first["label"] == "A1"
        assert first["aggregate"] == list(report.results[0].aggregate.astuple())
        assert first["score"] == report.results[0].score

    def test_dict_matches_rendered(self, report):
        assert json.loads(render_report(report, "json")) == report_to_dict(report)


class TestSummary:
    def test_maximal_number(self):
        text = render_summary(Bnn(1, 0, 0, 0, -1, -1), 6)
        assert "score:     1.000000" in text
        assert "accuracy:  2.000000" in text
        assert "certainty: 2.000000" in text

    def test_lists_the_number(self):
        text = render_summary(Bnn(0.5, 0.5, 0.5, -0.5, -0.5, -0.5), 1)
        assert text.splitlines()[0] == "bnn:       ⟨0.5, 0.5, 0.5, -0.5, -0.5, -0.5⟩"
