"""Weighted average (A_w) and weighted geometric (G_w) operators.

Each output component is a weighted product prod(x_j ** w_j) of one input
component family, or 1 minus such a product. Products are taken in the log
domain over the positive factors; a zero factor with positive weight makes
the product exactly 0, and a zero weight drops its factor (x ** 0 == 1,
including 0 ** 0), so a zero-weight criterion never affects the result.
"""

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from bnnctl.config import WEIGHT_SUM_TOLERANCE

from .bnn import Bnn
from .errors import (
    EmptyFamily,
    EmptyWeights,
    LengthMismatch,
    NonFiniteComponent,
    WeightOutOfRange,
    WeightsDontSumToOne,
    ZeroWeightSum,
)


class Operator(Enum):
    AVERAGE = "average"
    GEOMETRIC = "geometric"

    @classmethod
    def from_name(cls, name: str) -> "Operator":
        """Accept 'avg'/'geo' (CLI spelling) as well as the full names."""
        aliases = {"avg": cls.AVERAGE, "geo": cls.GEOMETRIC}
        key = name.strip().lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative criterion weights summing to 1.

    ``rescaled_from`` holds the original sum when normalisation changed the
    weights, so callers can tell the user.
    """

    weights: tuple[float, ...]
    rescaled_from: float | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[float]:
        return iter(self.weights)

    def __getitem__(self, index: int) -> float:
        return self.weights[index]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


def make_weights(raw: Sequence[float], normalize: bool = False) -> WeightVector:
    """Validate raw weights; with ``normalize`` divide them by their sum."""
    if len(raw) == 0:
        raise EmptyWeights()

    values = []
    for index, w in enumerate(raw):
        if isinstance(w, bool) or not isinstance(w, (int, float, np.number)):
            raise NonFiniteComponent(f"weight #{index + 1}", w)
        w = float(w)
        if not math.isfinite(w):
            raise NonFiniteComponent(f"weight #{index + 1}", w)
        if w < 0.0 or (not normalize and w > 1.0):
            raise WeightOutOfRange(index, w)
        values.append(w)

    total = math.fsum(values)
    if normalize:
        if total <= 0.0:
            raise ZeroWeightSum()
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            return WeightVector(tuple(w / total for w in values), rescaled_from=total)
        values = [w / total for w in values]
    elif abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise WeightsDontSumToOne(total)

    return WeightVector(tuple(values))


def _weighted_product(bases: np.ndarray, weights: np.ndarray) -> float:
    """prod(bases ** weights) with 0 ** 0 == 1 and 0 ** w == 0 for w > 0."""
    active = weights > 0.0
    bases = bases[active]
    if np.any(bases == 0.0):
        return 0.0
    return float(np.exp(np.dot(weights[active], np.log(bases))))


def _columns(items: Sequence[Bnn], w: WeightVector) -> tuple[np.ndarray, np.ndarray]:
    if len(items) == 0:
        raise EmptyFamily()
    if len(items) != len(w):
        raise LengthMismatch(len(items), len(w))
    # Weights are accepted within a tolerance of 1; the exponents must sum to 1
    exponents = w.as_array() / math.fsum(w)
    # One row per item, one column per component
    return np.array([a.astuple() for a in items], dtype=float), exponents


def weighted_average(items: Sequence[Bnn], w: WeightVector) -> Bnn:
    """A_w: the weighted sum of the items under the scalar and sum rules."""
    m, weights = _columns(items, w)
    return Bnn(
        1.0 - _weighted_product(1.0 - m[:, 0], weights),
        _weighted_product(m[:, 1], weights),
        _weighted_product(m[:, 2], weights),
        -_weighted_product(-m[:, 3], weights),
        -(1.0 - _weighted_product(1.0 + m[:, 4], weights)),
        -(1.0 - _weighted_product(1.0 + m[:, 5], weights)),
    )


def weighted_geometric(items: Sequence[Bnn], w: WeightVector) -> Bnn:
    """G_w: the weighted product of the items under the power and product rules."""
    m, weights = _columns(items, w)
    return Bnn(
        _weighted_product(m[:, 0], weights),
        1.0 - _weighted_product(1.0 - m[:, 1], weights),
        1.0 - _weighted_product(1.0 - m[:, 2], weights),
        -(1.0 - _weighted_product(1.0 + m[:, 3], weights)),
        -_weighted_product(-m[:, 4], weights),
        -_weighted_product(-m[:, 5], weights),
    )


AGGREGATORS = {
    Operator.AVERAGE: weighted_average,
    Operator.GEOMETRIC: weighted_geometric,
}


def aggregate(items: Sequence[Bnn], w: WeightVector, operator: Operator = Operator.AVERAGE) -> Bnn:
    return AGGREGATORS[operator](items, w)
