"""Decision problems: validate, aggregate each alternative, score and rank.

The algorithm:
  1. build the alternatives x criteria matrix of Bnn evaluations,
  2. aggregate each row with A_w (default) or G_w,
  3. compute score, accuracy and certainty of each aggregate,
  4. order the alternatives by lexicographic comparison, reporting ties.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from bnnctl.config import TIE_TOLERANCE

from .aggregation import Operator, WeightVector, aggregate, make_weights
from .bnn import Bnn, RankOrdering, accuracy, bnn_from_sequence, certainty, compare, score
from .errors import BnnError, DimensionMismatch, DuplicateLabel, MalformedDocument


@dataclass(frozen=True)
class DecisionProblem:
    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    weights: WeightVector
    matrix: tuple[tuple[Bnn, ...], ...]

    def row(self, alternative: str) -> tuple[Bnn, ...]:
        return self.matrix[self.alternatives.index(alternative)]


@dataclass(frozen=True)
class AlternativeResult:
    label: str
    aggregate: Bnn
    score: float
    accuracy: float
    certainty: float
    rank: int


@dataclass(frozen=True)
class RankingReport:
    """Per-alternative results (in problem order) and the tie-aware ordering."""

    results: tuple[AlternativeResult, ...]
    ordering: tuple[tuple[str, ...], ...]
    operator: Operator
    tie_tolerance: float = TIE_TOLERANCE

    def result(self, label: str) -> AlternativeResult:
        return next(r for r in self.results if r.label == label)

    def ordering_line(self) -> str:
        """Best first, e.g. 'A3 > A4 > A2 = A1'."""
        return " > ".join(" = ".join(group) for group in self.ordering)


def _labels(values: Any, kind: str) -> tuple[str, ...]:
    if not isinstance(values, Sequence) or isinstance(values, str):
        raise MalformedDocument(f"'{kind}' must be a list of labels")
    labels = tuple(str(v) for v in values)
    seen = set()
    for label in labels:
        if label != label.strip():
            raise MalformedDocument(f"label '{label}' has leading or trailing whitespace", kind)
        if label in seen:
            raise DuplicateLabel(label, kind)
        seen.add(label)
    return labels


def _cell(value: Any, alternative: str, criterion: str) -> Bnn:
    try:
        if isinstance(value, Bnn):
            return value
        if not isinstance(value, Sequence) or isinstance(value, str):
            raise MalformedDocument("cell must be a list of 6 numbers")
        cell = bnn_from_sequence(value)
    except BnnError as e:
        raise e.at(f"cell ({alternative}, {criterion})") from None

    # Implied by the component ranges
    total = cell.t_pos + cell.i_pos + cell.f_pos - cell.t_neg - cell.i_neg - cell.f_neg
    if not 0.0 <= total <= 6.0:
        raise BnnError(f"component sum {total!r} outside [0, 6]", f"cell ({alternative}, {criterion})")
    return cell


def validate_problem(raw: Mapping[str, Any], normalize_weights: bool = False) -> DecisionProblem:
    """Turn a raw mapping (alternatives, criteria, weights, matrix) into a DecisionProblem.

    ``weights`` may be a WeightVector or a list of numbers; matrix cells may be
    Bnn instances or 6-element sequences.
    """
    for key in ("alternatives", "criteria", "weights", "matrix"):
        if key not in raw:
            raise MalformedDocument(f"missing key '{key}'")

    alternatives = _labels(raw["alternatives"], "alternatives")
    criteria = _labels(raw["criteria"], "criteria")
    if not alternatives:
        raise DimensionMismatch("no alternatives to rank")

    weights = raw["weights"]
    if not isinstance(weights, WeightVector):
        if not isinstance(weights, Sequence) or isinstance(weights, str):
            raise MalformedDocument("'weights' must be a list of numbers")
        try:
            weights = make_weights(list(weights), normalize=normalize_weights)
        except BnnError as e:
            raise e.at("weights") from None
    if len(weights) != len(criteria):
        raise DimensionMismatch(f"{len(criteria)} criteria but {len(weights)} weight(s)")

    matrix = raw["matrix"]
    if not isinstance(matrix, Sequence) or isinstance(matrix, str):
        raise MalformedDocument("'matrix' must be a list of rows")
    if len(matrix) != len(alternatives):
        raise DimensionMismatch(f"{len(alternatives)} alternatives but {len(matrix)} matrix row(s)")

    rows = []
    for alternative, row in zip(alternatives, matrix):
        if not isinstance(row, Sequence) or isinstance(row, str):
            raise MalformedDocument(f"row for '{alternative}' must be a list of cells")
        if len(row) != len(criteria):
            raise DimensionMismatch(
                f"row '{alternative}' has {len(row)} cell(s), expected {len(criteria)}"
            )
        rows.append(tuple(_cell(v, alternative, c) for v, c in zip(row, criteria)))

    return DecisionProblem(alternatives, criteria, weights, tuple(rows))


def aggregate_rows(p: DecisionProblem, operator: Operator = Operator.AVERAGE) -> list[Bnn]:
    """One aggregate per alternative, in row order."""
    return [aggregate(row, p.weights, operator) for row in p.matrix]


def rank(
    p: DecisionProblem,
    operator: Operator = Operator.AVERAGE,
    tie_tolerance: float = TIE_TOLERANCE,
) -> RankingReport:
    """Rank alternatives by comparing their full-precision aggregates.

    An alternative's rank is one plus the number of alternatives that compare
    strictly greater, so ties share a rank (competition ranking: 1, 2, 2, 4)
    and tied alternatives keep their problem order inside the ordering.

    Ties within ``tie_tolerance`` are not transitive. In a chain where a ties
    b and b ties c but c beats a, b shares c's rank while a ranks below both,
    so a and b end up with different ranks although they compare equal.
    """
    aggregates = aggregate_rows(p, operator)
    indices = range(len(aggregates))

    ranks = {
        i: 1 + sum(
            compare(aggregates[j], aggregates[i], tie_tolerance) is RankOrdering.GREATER
            for j in indices
        )
        for i in indices
    }

    groups: list[list[int]] = []
    for i in sorted(indices, key=lambda i: (ranks[i], i)):
        if groups and ranks[groups[-1][0]] == ranks[i]:
            groups[-1].append(i)
        else:
            groups.append([i])

    results = tuple(
        AlternativeResult(
            label=label,
            aggregate=agg,
            score=score(agg),
            accuracy=accuracy(agg),
            certainty=certainty(agg),
            rank=ranks[i],
        )
        for i, (label, agg) in enumerate(zip(p.alternatives, aggregates))
    )
    ordering = tuple(tuple(p.alternatives[i] for i in group) for group in groups)
    return RankingReport(results, ordering, operator, tie_tolerance)
