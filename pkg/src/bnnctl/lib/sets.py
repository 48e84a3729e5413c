"""Bipolar neutrosophic sets over a finite universe.

Union and intersection average the indeterminacy components, so they are
commutative and idempotent but not associative: n-ary folds depend on
grouping. Union does not necessarily contain its operands either, since the
averaged I+ can drop below an operand's value.
"""

import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import reduce
from typing import Callable

from bnnctl.config import SET_EQUALITY_TOLERANCE

from .bnn import COMPONENTS, Bnn, bnn_from_sequence, element_complement
from .errors import (
    BnnError,
    ComponentOutOfRange,
    DuplicateLabel,
    MalformedDocument,
    MissingAssignment,
    NonFiniteComponent,
    UniverseMismatch,
)


@dataclass(frozen=True)
class BnsSet:
    """A bipolar neutrosophic set: one Bnn per label of an ordered universe."""

    universe: tuple[str, ...]
    membership: Mapping[str, Bnn]

    def __getitem__(self, label: str) -> Bnn:
        return self.membership[label]

    def __contains__(self, label: object) -> bool:
        return label in self.membership

    def __iter__(self) -> Iterator[tuple[str, Bnn]]:
        return ((label, self.membership[label]) for label in self.universe)

    def __len__(self) -> int:
        return len(self.universe)


@dataclass(frozen=True)
class BipolarFuzzySet:
    """Bipolar fuzzy set: (mu_pos in [0, 1], mu_neg in [-1, 0]) per label."""

    universe: tuple[str, ...]
    membership: Mapping[str, tuple[float, float]]


@dataclass(frozen=True)
class SvnSet:
    """Single-valued neutrosophic set: (t, i, f) in [0, 1]^3 per label."""

    universe: tuple[str, ...]
    membership: Mapping[str, tuple[float, float, float]]


def _check_universe(universe: Iterable[str], assignments: Mapping) -> tuple[str, ...]:
    labels = tuple(universe)
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabel(label)
        seen.add(label)
    for label in labels:
        if label not in assignments:
            raise MissingAssignment(label)
    extra = sorted(set(assignments) - seen)
    if extra:
        raise UniverseMismatch(f"label(s) outside the universe: {', '.join(map(str, extra))}")
    return labels


def make_set(universe: Iterable[str], assignments: Mapping) -> BnsSet:
    """Validated BnsSet. Values may be Bnn instances or 6-element sequences."""
    labels = _check_universe(universe, assignments)
    membership = {}
    for label in labels:
        value = assignments[label]
        try:
            membership[label] = value if isinstance(value, Bnn) else bnn_from_sequence(value)
        except BnnError as e:
            raise e.at(f"'{label}'") from None
    return BnsSet(labels, membership)


def _check_range(label, name, value, low, high):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise NonFiniteComponent(name, value, f"'{label}'")
    if not low <= value <= high:
        raise ComponentOutOfRange(name, value, f"[{low:g}, {high:g}]", f"'{label}'")


def make_bipolar_fuzzy_set(universe: Iterable[str], assignments: Mapping) -> BipolarFuzzySet:
    labels = _check_universe(universe, assignments)
    membership = {}
    for label in labels:
        mu_pos, mu_neg = assignments[label]
        _check_range(label, "mu_pos", mu_pos, 0, 1)
        _check_range(label, "mu_neg", mu_neg, -1, 0)
        membership[label] = (float(mu_pos), float(mu_neg))
    return BipolarFuzzySet(labels, membership)


def make_svn_set(universe: Iterable[str], assignments: Mapping) -> SvnSet:
    labels = _check_universe(universe, assignments)
    membership = {}
    for label in labels:
        t, i, f = assignments[label]
        for name, value in (("t", t), ("i", i), ("f", f)):
            _check_range(label, name, value, 0, 1)
        membership[label] = (float(t), float(i), float(f))
    return SvnSet(labels, membership)


def _require_same_universe(a: BnsSet, b: BnsSet) -> None:
    if set(a.universe) != set(b.universe):
        only_a = sorted(set(a.universe) - set(b.universe))
        only_b = sorted(set(b.universe) - set(a.universe))
        raise UniverseMismatch(
            f"universes differ (only in first: {only_a}, only in second: {only_b})"
        )


def _pointwise(a: BnsSet, b: BnsSet, rule: Callable[[Bnn, Bnn], Bnn]) -> BnsSet:
    _require_same_universe(a, b)
    return BnsSet(a.universe, {x: rule(a[x], b[x]) for x in a.universe})


def _union_rule(p: Bnn, q: Bnn) -> Bnn:
    return Bnn(
        max(p.t_pos, q.t_pos),
        (p.i_pos + q.i_pos) / 2,
        min(p.f_pos, q.f_pos),
        min(p.t_neg, q.t_neg),
        (p.i_neg + q.i_neg) / 2,
        max(p.f_neg, q.f_neg),
    )


def _intersection_rule(p: Bnn, q: Bnn) -> Bnn:
    return Bnn(
        min(p.t_pos, q.t_pos),
        (p.i_pos + q.i_pos) / 2,
        max(p.f_pos, q.f_pos),
        max(p.t_neg, q.t_neg),
        (p.i_neg + q.i_neg) / 2,
        min(p.f_neg, q.f_neg),
    )


def union(a: BnsSet, b: BnsSet) -> BnsSet:
    return _pointwise(a, b, _union_rule)


def intersection(a: BnsSet, b: BnsSet) -> BnsSet:
    return _pointwise(a, b, _intersection_rule)


def fold_union(sets: Sequence[BnsSet]) -> BnsSet:
    """Left fold ((A1 ∪ A2) ∪ A3) ∪ ...

    The result depends on grouping because I+ and I- are averaged pairwise.
    """
    if not sets:
        raise BnnError("cannot fold an empty sequence of sets")
    return reduce(union, sets)


def fold_intersection(sets: Sequence[BnsSet]) -> BnsSet:
    """Left fold of intersection; grouping-dependent like fold_union."""
    if not sets:
        raise BnnError("cannot fold an empty sequence of sets")
    return reduce(intersection, sets)


def complement(a: BnsSet) -> BnsSet:
    return BnsSet(a.universe, {x: element_complement(v) for x, v in a})


def _is_sub(p: Bnn, q: Bnn) -> bool:
    # I+ is ordered like T+, not like F+
    return (
        p.t_pos <= q.t_pos
        and p.i_pos <= q.i_pos
        and p.f_pos >= q.f_pos
        and p.t_neg >= q.t_neg
        and p.i_neg >= q.i_neg
        and p.f_neg <= q.f_neg
    )


def is_subset(a: BnsSet, b: BnsSet) -> bool:
    _require_same_universe(a, b)
    return all(_is_sub(a[x], b[x]) for x in a.universe)


def set_equals(a: BnsSet, b: BnsSet, tol: float = SET_EQUALITY_TOLERANCE) -> bool:
    _require_same_universe(a, b)
    return all(
        abs(p - q) <= tol
        for x in a.universe
        for p, q in zip(a[x].astuple(), b[x].astuple())
    )


def embed_bipolar_fuzzy(bf: BipolarFuzzySet) -> BnsSet:
    """Bipolar fuzzy set as a BnsSet with zero indeterminacy and falsity."""
    return BnsSet(
        bf.universe,
        {x: Bnn(mu_pos, 0.0, 0.0, mu_neg, 0.0, 0.0) for x, (mu_pos, mu_neg) in bf.membership.items()},
    )


def embed_svn(s: SvnSet) -> BnsSet:
    """Single-valued neutrosophic set as a BnsSet with zero negative parts."""
    return BnsSet(
        s.universe,
        {x: Bnn(t, i, f, 0.0, 0.0, 0.0) for x, (t, i, f) in s.membership.items()},
    )


def set_to_dict(a: BnsSet) -> dict:
    return {
        "universe": list(a.universe),
        "membership": {x: list(v.astuple()) for x, v in a},
    }


def dump_set_json(a: BnsSet) -> bytes:
    """Serialize as {"universe": [...], "membership": {label: [6 numbers]}}."""
    return (json.dumps(set_to_dict(a), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def load_set_json(data: bytes) -> BnsSet:
    try:
        doc = json.loads(data.decode("utf-8-sig"))
    except UnicodeDecodeError as e:
        raise MalformedDocument(f"not UTF-8 text ({e.reason})") from None
    except json.JSONDecodeError as e:
        raise MalformedDocument(e.msg, f"line {e.lineno}, column {e.colno}") from None

    if not isinstance(doc, dict):
        raise MalformedDocument("expected a JSON object with 'universe' and 'membership'")
    universe = doc.get("universe")
    membership = doc.get("membership")
    if not isinstance(universe, list) or not all(isinstance(x, str) for x in universe):
        raise MalformedDocument("'universe' must be a list of strings")
    if not isinstance(membership, dict):
        raise MalformedDocument("'membership' must be an object mapping labels to 6-tuples")
    for label, value in membership.items():
        if not isinstance(value, list):
            raise MalformedDocument(
                f"membership of '{label}' must be a list of {len(COMPONENTS)} numbers"
            )
    return make_set(universe, membership)
