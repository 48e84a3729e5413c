"""Algebraic laws of the number operations over large random samples."""
import pytest
from hypothesis import given
from samples import bnns, dyadic_bnns, lambdas, random_bnn, rng

from bnnctl.lib.bnn import (
    Bnn,
    RankOrdering,
    accuracy,
    add,
    certainty,
    compare,
    element_complement,
    multiply,
    power,
    scale,
    score,
)

N = 10_000
TOL = 1e-12


def close(a: Bnn, b: Bnn, tol: float = TOL) -> bool:
    return all(abs(x - y) <= tol for x, y in zip(a.astuple(), b.astuple()))


@pytest.fixture(scope="module")
def pairs():
    gen = rng()
    return [(random_bnn(gen), random_bnn(gen), random_bnn(gen), float(gen.uniform(0.01, 10.0)))
            for _ in range(N)]


class TestClosure:
    def test_every_operation_yields_a_valid_number(self, pairs):
        # Bnn validates on construction, so reaching the end means closure held
        for a, b, _, lam in pairs:
            for result in (add(a, b), multiply(a, b), scale(lam, a), power(a, lam), element_complement(a)):
                assert isinstance(result, Bnn)

    @given(bnns, lambdas)
    def test_scale_and_power_with_extreme_lambdas(self, a, lam):
        scale(lam, a)
        power(a, lam)
        scale(1 / lam, a)
        power(a, 1 / lam)


class TestIdentities:
    def test_lambda_one(self, pairs):
        for a, *_ in pairs:
            assert close(scale(1, a), a)
            assert close(power(a, 1), a)

    def test_add_self_is_scale_two(self, pairs):
        for a, *_ in pairs:
            assert close(add(a, a), scale(2, a))

    def test_multiply_self_is_power_two(self, pairs):
        for a, *_ in pairs:
            assert close(multiply(a, a), power(a, 2))

    def test_scale_splits_over_lambda_sum(self, pairs):
        for a, _, _, lam in pairs:
            assert close(scale(lam + 1.5, a), add(scale(lam, a), scale(1.5, a)))

    def test_neutral_elements(self, pairs):
        zero = Bnn(0, 1, 1, -1, 0, 0)
        one = Bnn(1, 0, 0, 0, -1, -1)
        for a, *_ in pairs:
            assert close(add(a, zero), a)
            assert close(multiply(a, one), a)


class TestCommutativityAndAssociativity:
    def test_commutative(self, pairs):
        for a, b, *_ in pairs:
            assert add(a, b) == add(b, a)
            assert multiply(a, b) == multiply(b, a)

    def test_associative(self, pairs):
        for a, b, c, _ in pairs:
            assert close(add(add(a, b), c), add(a, add(b, c)))
            assert close(multiply(multiply(a, b), c), multiply(a, multiply(b, c)))

    @given(bnns, bnns)
    def test_commutative_on_arbitrary_floats(self, a, b):
        assert add(a, b) == add(b, a)
        assert multiply(a, b) == multiply(b, a)


class TestComplement:
    @given(dyadic_bnns)
    def test_involution_is_exact_on_dyadic_numbers(self, a):
        assert element_complement(element_complement(a)) == a

    def test_involution_within_one_rounding(self, pairs):
        for a, *_ in pairs:
            assert close(element_complement(element_complement(a)), a, 2.0 ** -53)


class TestScoreRanges:
    def test_ranges(self, pairs):
        for a, *_ in pairs:
            assert 0.0 <= score(a) <= 1.0
            assert -2.0 <= accuracy(a) <= 2.0
            assert 0.0 <= certainty(a) <= 2.0


class TestComparePreorder:
    def test_reflexive_and_antisymmetric(self, pairs):
        flipped = {RankOrdering.GREATER: RankOrdering.LESS,
                   RankOrdering.LESS: RankOrdering.GREATER,
                   RankOrdering.EQUAL: RankOrdering.EQUAL}
        for a, b, *_ in pairs:
            assert compare(a, a) is RankOrdering.EQUAL
            assert compare(b, a) is flipped[compare(a, b)]

    def test_transitive(self, pairs):
        for a, b, c, _ in pairs[:2000]:
            ranked = sorted([a, b, c], key=lambda x: (score(x), accuracy(x), certainty(x)), reverse=True)
            if compare(ranked[0], ranked[1]) is RankOrdering.GREATER and \
               compare(ranked[1], ranked[2]) is RankOrdering.GREATER:
                assert compare(ranked[0], ranked[2]) is RankOrdering.GREATER
