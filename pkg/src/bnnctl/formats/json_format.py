"""JSON problem documents.

Schema::

    {"alternatives": ["A1", ...],
     "criteria": ["C1", ...],
     "weights": [0.5, ...],
     "matrix": [[[t+, i+, f+, t-, i-, f-], ...], ...]}

Numbers are written with Python's shortest round-trip repr, so parsing a
rendered problem gives back the exact same components.
"""
import json

from bnnctl.lib.errors import MalformedDocument
from bnnctl.lib.mcdm import DecisionProblem, validate_problem

from .base import ProblemFormat


def _decode(data: bytes) -> object:
    try:
        return json.loads(data.decode("utf-8-sig"))
    except UnicodeDecodeError as e:
        raise MalformedDocument(f"not UTF-8 text ({e.reason})") from None
    except json.JSONDecodeError as e:
        raise MalformedDocument(e.msg, f"line {e.lineno}, column {e.colno}") from None


def parse_problem_json(data: bytes, normalize_weights: bool = False) -> DecisionProblem:
    doc = _decode(data)
    if not isinstance(doc, dict):
        raise MalformedDocument("expected a JSON object at the top level")
    return validate_problem(doc, normalize_weights=normalize_weights)


def problem_to_dict(problem: DecisionProblem) -> dict:
    return {
        "alternatives": list(problem.alternatives),
        "criteria": list(problem.criteria),
        "weights": list(problem.weights),
        "matrix": [[list(cell.astuple()) for cell in row] for row in problem.matrix],
    }


def render_problem_json(problem: DecisionProblem) -> bytes:
    return (json.dumps(problem_to_dict(problem), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


class JsonFormat(ProblemFormat):
    name = "json"
    suffixes = (".json",)

    def parse(self, data: bytes, normalize_weights: bool = False) -> DecisionProblem:
        return parse_problem_json(data, normalize_weights)

    def render(self, problem: DecisionProblem) -> bytes:
        return render_problem_json(problem)
