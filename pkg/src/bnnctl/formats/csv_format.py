"""CSV problem documents.

Layout::

    alternative,C1,C2,...
    #weights,0.5,0.25,...                    (optional; equal weights if absent)
    A1,0.5|0.7|0.2|-0.7|-0.3|-0.6,...

The first header cell is a free-text corner label. Each cell joins the six
components (t+, i+, f+, t-, i-, f-) with "|", so ordinary comma-separated
tooling still splits the columns correctly.
"""
import csv
import io

from bnnctl.lib.bnn import COMPONENTS, make_bnn, parse_real
from bnnctl.lib.errors import BnnError, DimensionMismatch, MalformedDocument, WrongTupleArity
from bnnctl.lib.mcdm import DecisionProblem, validate_problem

from .base import ProblemFormat

WEIGHTS_MARKER = "#weights"
CELL_SEPARATOR = "|"


def _read_rows(data: bytes) -> list[tuple[int, list[str]]]:
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise MalformedDocument(f"not UTF-8 text ({e.reason})") from None

    reader = csv.reader(io.StringIO(text, newline=""))
    rows = []
    try:
        for row in reader:
            if not any(cell.strip() for cell in row):
                continue
            rows.append((reader.line_num, [cell.strip() for cell in row]))
    except csv.Error as e:
        raise MalformedDocument(str(e), f"row {reader.line_num}") from None
    return rows


def _parse_cell(text: str, location: str):
    parts = text.split(CELL_SEPARATOR)
    try:
        if len(parts) != len(COMPONENTS):
            raise WrongTupleArity(len(parts))
        return make_bnn(*(parse_real(p) for p in parts))
    except BnnError as e:
        raise e.at(location) from None


def parse_problem_csv(data: bytes, normalize_weights: bool = False) -> DecisionProblem:
    rows = _read_rows(data)
    if not rows:
        raise MalformedDocument("empty document, expected a header row")

    _, header = rows[0]
    criteria = header[1:]
    if not criteria:
        raise MalformedDocument("header row lists no criteria", "row 1")

    body = rows[1:]
    if body and body[0][1][0] == WEIGHTS_MARKER:
        line, cells = body[0]
        body = body[1:]
        if len(cells) - 1 != len(criteria):
            raise DimensionMismatch(
                f"{len(criteria)} criteria but {len(cells) - 1} weight(s)", f"row {line}"
            )
        weights = []
        for col, text in enumerate(cells[1:], start=2):
            try:
                weights.append(parse_real(text))
            except BnnError as e:
                raise e.at(f"row {line}, column {col}") from None
    else:
        weights = [1.0 / len(criteria)] * len(criteria)

    alternatives = []
    matrix = []
    for line, cells in body:
        label = cells[0]
        if len(cells) - 1 != len(criteria):
            raise DimensionMismatch(
                f"'{label}' has {len(cells) - 1} cell(s), expected {len(criteria)}", f"row {line}"
            )
        alternatives.append(label)
        matrix.append([
            _parse_cell(text, f"row {line}, column {col} ({label}, {criteria[col - 2]})")
            for col, text in enumerate(cells[1:], start=2)
        ])

    return validate_problem(
        {"alternatives": alternatives, "criteria": criteria, "weights": weights, "matrix": matrix},
        normalize_weights=normalize_weights,
    )


def render_problem_csv(problem: DecisionProblem) -> bytes:
    out = io.StringIO(newline="")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["alternative", *problem.criteria])
    writer.writerow([WEIGHTS_MARKER, *(repr(w) for w in problem.weights)])
    for label, row in zip(problem.alternatives, problem.matrix):
        writer.writerow([
            label,
            *(CELL_SEPARATOR.join(repr(v) for v in cell.astuple()) for cell in row),
        ])
    return out.getvalue().encode("utf-8")


class CsvFormat(ProblemFormat):
    name = "csv"
    suffixes = (".csv",)

    def parse(self, data: bytes, normalize_weights: bool = False) -> DecisionProblem:
        return parse_problem_csv(data, normalize_weights)

    def render(self, problem: DecisionProblem) -> bytes:
        return render_problem_csv(problem)
