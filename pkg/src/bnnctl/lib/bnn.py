"""Bipolar neutrosophic numbers.

A bipolar neutrosophic number (BNN) is a 6-tuple ⟨T+, I+, F+, T-, I-, F-⟩.
The positive triple lies in [0, 1] and measures how far a property holds;
the negative triple lies in [-1, 0] and measures its implicit
counter-property. Every function here is pure and every ``Bnn`` is immutable.
"""

import math
import numbers
import re
from dataclasses import astuple, dataclass, fields
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal
from enum import Enum

from bnnctl.config import DEFAULT_PRECISION, TIE_TOLERANCE

from .errors import (
    BnnError,
    ComponentOutOfRange,
    NonFiniteComponent,
    NonPositiveLambda,
    WrongTupleArity,
)

COMPONENTS = ("t_pos", "i_pos", "f_pos", "t_neg", "i_neg", "f_neg")

_REAL_RE = re.compile(r"^[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?$")
_BRACKETS = "⟨⟩<>()[]"
NOISE_DECIMALS = 12


@dataclass(frozen=True)
class Bnn:
    """A validated bipolar neutrosophic number."""

    t_pos: float
    i_pos: float
    f_pos: float
    t_neg: float
    i_neg: float
    f_neg: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise NonFiniteComponent(f.name, value)
            value = float(value)
            if not math.isfinite(value):
                raise NonFiniteComponent(f.name, value)
            if f.name.endswith("_pos"):
                if not 0.0 <= value <= 1.0:
                    raise ComponentOutOfRange(f.name, value, "[0, 1]")
            elif not -1.0 <= value <= 0.0:
                raise ComponentOutOfRange(f.name, value, "[-1, 0]")
            # Adding 0.0 turns -0.0 into 0.0
            object.__setattr__(self, f.name, value + 0.0)

        total = self.t_pos + self.i_pos + self.f_pos - self.t_neg - self.i_neg - self.f_neg
        if not 0.0 <= total <= 6.0:
            raise BnnError(f"component sum {total!r} is outside [0, 6]")

    def astuple(self) -> tuple[float, float, float, float, float, float]:
        return astuple(self)

    def __add__(self, other: "Bnn") -> "Bnn":
        if not isinstance(other, Bnn):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other: "Bnn") -> "Bnn":
        if not isinstance(other, Bnn):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, lam: float) -> "Bnn":
        if not isinstance(lam, numbers.Real):
            return NotImplemented
        return scale(lam, self)

    def __pow__(self, lam: float) -> "Bnn":
        if not isinstance(lam, numbers.Real):
            return NotImplemented
        return power(self, lam)

    def __invert__(self) -> "Bnn":
        return element_complement(self)

    def __str__(self) -> str:
        return format_bnn(self)


class RankOrdering(Enum):
    """Outcome of comparing two numbers; the value is the ordering symbol."""

    GREATER = ">"
    LESS = "<"
    EQUAL = "="


def make_bnn(t_pos, i_pos, f_pos, t_neg, i_neg, f_neg) -> Bnn:
    """Build a Bnn from raw reals, rejecting (never clamping) bad components."""
    return Bnn(t_pos, i_pos, f_pos, t_neg, i_neg, f_neg)


def bnn_from_sequence(values) -> Bnn:
    """Build a Bnn from any 6-element sequence in canonical order."""
    values = list(values)
    if len(values) != len(COMPONENTS):
        raise WrongTupleArity(len(values))
    return make_bnn(*values)


def _check_lambda(lam: float) -> float:
    if isinstance(lam, bool) or not isinstance(lam, numbers.Real) or not lam > 0:
        raise NonPositiveLambda(lam)
    if not math.isfinite(lam):
        raise NonPositiveLambda(lam)
    return float(lam)


def _co(x: float, y: float) -> float:
    """Probabilistic sum x + y - xy for x, y in [0, 1]."""
    return 1.0 - (1.0 - x) * (1.0 - y)


def scale(lam: float, a: Bnn) -> Bnn:
    """Scalar multiple λa, λ > 0.

    The negative indeterminacy follows the same dual form as the negative
    falsity, which keeps λa consistent with repeated addition.
    """
    lam = _check_lambda(lam)
    return Bnn(
        1.0 - (1.0 - a.t_pos) ** lam,
        a.i_pos ** lam,
        a.f_pos ** lam,
        -((-a.t_neg) ** lam),
        -(1.0 - (1.0 + a.i_neg) ** lam),
        -(1.0 - (1.0 + a.f_neg) ** lam),
    )


def power(a: Bnn, lam: float) -> Bnn:
    """Power a^λ, λ > 0."""
    lam = _check_lambda(lam)
    return Bnn(
        a.t_pos ** lam,
        1.0 - (1.0 - a.i_pos) ** lam,
        1.0 - (1.0 - a.f_pos) ** lam,
        -(1.0 - (1.0 + a.t_neg) ** lam),
        -((-a.i_neg) ** lam),
        -((-a.f_neg) ** lam),
    )


def add(a: Bnn, b: Bnn) -> Bnn:
    """Sum a + b."""
    return Bnn(
        _co(a.t_pos, b.t_pos),
        a.i_pos * b.i_pos,
        a.f_pos * b.f_pos,
        -(a.t_neg * b.t_neg),
        -_co(-a.i_neg, -b.i_neg),
        -_co(-a.f_neg, -b.f_neg),
    )


def multiply(a: Bnn, b: Bnn) -> Bnn:
    """Product a · b."""
    return Bnn(
        a.t_pos * b.t_pos,
        _co(a.i_pos, b.i_pos),
        _co(a.f_pos, b.f_pos),
        -_co(-a.t_neg, -b.t_neg),
        -(a.i_neg * b.i_neg),
        -(a.f_neg * b.f_neg),
    )


def score(a: Bnn) -> float:
    """Score in [0, 1]: (T+ + 1 - I+ + 1 - F+ + 1 + T- - I- - F-) / 6."""
    return (
        a.t_pos
        + (1.0 - a.i_pos)
        + (1.0 - a.f_pos)
        + (1.0 + a.t_neg)
        - a.i_neg
        - a.f_neg
    ) / 6.0


def accuracy(a: Bnn) -> float:
    """Accuracy in [-2, 2]: T+ - F+ + T- - F-."""
    return a.t_pos - a.f_pos + a.t_neg - a.f_neg


def certainty(a: Bnn) -> float:
    """Certainty in [0, 2]: T+ - F-."""
    return a.t_pos - a.f_neg


def compare(a: Bnn, b: Bnn, tol: float = TIE_TOLERANCE) -> RankOrdering:
    """Lexicographic comparison on (score, accuracy, certainty).

    Two tiers are tied when they differ by at most ``tol``.
    """
    for tier in (score, accuracy, certainty):
        x, y = tier(a), tier(b)
        if abs(x - y) > tol:
            return RankOrdering.GREATER if x > y else RankOrdering.LESS
    return RankOrdering.EQUAL


def element_complement(a: Bnn) -> Bnn:
    """Complement: 1 minus each positive part, -1 minus each negative part."""
    return Bnn(
        1.0 - a.t_pos,
        1.0 - a.i_pos,
        1.0 - a.f_pos,
        -1.0 - a.t_neg,
        -1.0 - a.i_neg,
        -1.0 - a.f_neg,
    )


def parse_real(text: str) -> float:
    """Parse a plain decimal number ('.' decimal point only, no nan/inf)."""
    text = text.strip()
    if not _REAL_RE.match(text):
        raise BnnError(f"'{text}' is not a number")
    return float(text)


def parse_bnn(text: str, sep: str = ",") -> Bnn:
    """Parse "t+,i+,f+,t-,i-,f-", optionally wrapped in brackets."""
    parts = text.strip().strip(_BRACKETS).split(sep)
    if len(parts) != len(COMPONENTS):
        raise WrongTupleArity(len(parts))
    return make_bnn(*(parse_real(p) for p in parts))


def format_real(value: float, precision: int = DEFAULT_PRECISION) -> str:
    """Render value with ``precision`` decimals, truncating toward zero.

    Below 12 decimals float noise is rounded away first, so
    0.49999999999999994 shows as 0.500 rather than 0.499. From 12 decimals
    on the shortest repr of the value is truncated as is.
    """
    shown = Decimal(repr(value))
    if precision < NOISE_DECIMALS:
        shown = shown.quantize(Decimal(1).scaleb(-NOISE_DECIMALS), rounding=ROUND_HALF_EVEN)
    shown = shown.quantize(Decimal(1).scaleb(-precision), rounding=ROUND_DOWN)
    if shown.is_zero():
        shown = abs(shown)
    return f"{shown:f}"


def format_bnn(a: Bnn, precision: int = DEFAULT_PRECISION) -> str:
    """Canonical text form ⟨t+, i+, f+, t-, i-, f-⟩."""
    return "⟨" + ", ".join(format_real(v, precision) for v in a.astuple()) + "⟩"
