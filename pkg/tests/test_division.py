import random

import pytest
from hypothesis import given, settings, strategies as st

from eucgb.division import (
    Expression,
    Step,
    check_euclidean,
    check_strong_standard,
    compose_representations,
    euclidean_divide,
    exact_divide,
    lead_reduce,
)
from eucgb.polyvec import PolyVector, deg_delta, div_delta_leq

from helpers import F1, LEX, QXY, R1, ZXY, p, v, vectors


class TestEuclideanDivide:
    def test_first_step(self):
        f, g = v(F1), v(R1)
        expr = euclidean_divide(f, [g], LEX)
        a, gamma, h = expr.steps[0]
        assert (a, gamma, h) == (10, (1, 2), g)
        assert f.add_scaled(-a, gamma, g) == v("(20*x*y^3 + y, -10*x*y^2, x)")

    def test_complete_run(self):
        f, g = v(F1), v(R1)
        expr = euclidean_divide(f, [g], LEX)
        assert [(s.coeff, s.gamma) for s in expr.steps] == [(10, (1, 2)), (20, (0, 3))]
        assert expr.remainder == v("(40*y^4 + y, -10*x*y^2 - 20*y^3, x)")
        assert expr.reconstruct(ZXY, 3) == f
        assert check_euclidean(f, [g], expr, LEX)

    def test_divisor_in_set(self):
        f = v(F1)
        expr = euclidean_divide(f, [f], LEX)
        assert expr.remainder.is_zero()
        assert expr.steps == [Step(1, (0, 0), f)]

    def test_prefers_small_leading_grade(self):
        expr = euclidean_divide(p("6*x"), [p("3*x"), p("x + y")], LEX)
        assert expr.steps[0].divisor == p("x + y")

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            euclidean_divide(ZXY.zero(1), [p("x")], LEX)
        with pytest.raises(ValueError):
            euclidean_divide(p("x"), [ZXY.zero(1)], LEX)

    def test_rational_remainder(self):
        expr = euclidean_divide(QXY.poly("3*x^2 + 1"), [QXY.poly("2*x")], LEX)
        assert expr.remainder == QXY.poly("1")

    @settings(max_examples=150)
    @given(vectors(nonzero=True), st.lists(vectors(nonzero=True, max_terms=3), min_size=1, max_size=3))
    def test_postconditions(self, f, G):
        expr = euclidean_divide(f, G, LEX)
        assert expr.reconstruct(ZXY, f.rank) == f
        assert all(a != 0 for a, _, _ in expr.steps)
        assert check_euclidean(f, G, expr, LEX)
        r = expr.remainder
        if r:
            assert not any(div_delta_leq(deg_delta(g, LEX), deg_delta(r, LEX)) for g in G)


class TestCheckEuclidean:
    def test_rejects_high_step(self):
        f, g = v(F1), v(R1)
        bad = Expression([Step(1, (3, 3), g), Step(-1, (3, 3), g)], f)
        assert bad.reconstruct(ZXY, 3) == f
        assert not check_euclidean(f, [g], bad, LEX)

    def test_rejects_reducible_remainder(self):
        f, g = v(F1), v(R1)
        full = euclidean_divide(f, [g], LEX)
        a, gamma, _ = full.steps[0]
        early = Expression(full.steps[:1], f.add_scaled(-a, gamma, g))
        assert early.reconstruct(ZXY, 3) == f
        assert not check_euclidean(f, [g], early, LEX)

    def test_rejects_wrong_reconstruction(self):
        f, g = v(F1), v(R1)
        expr = euclidean_divide(f, [g], LEX)
        assert not check_euclidean(f, [g], Expression(expr.steps, f), LEX)

    def test_rejects_foreign_divisor(self):
        f, g = v(F1), v(R1)
        assert not check_euclidean(f, [g], Expression([Step(1, (0, 0), f)], ZXY.zero(3)), LEX)


class TestStrongStandard:
    def test_single_summand(self):
        g = v(R1)
        f = g.mul_term(3, (1, 0))
        assert check_strong_standard(f, [g], [Step(3, (1, 0), g)], LEX)

    def test_two_summands_at_top(self):
        g = v(R1)
        f = g.mul_term(3, (1, 0))
        assert not check_strong_standard(f, [g], [Step(2, (1, 0), g), Step(1, (1, 0), g)], LEX)

    def test_lead_reduce_gives_representation(self):
        g1, g2 = p("2*x"), p("3*y")
        f = g1.mul_term(5, (0, 2)) + g2.mul_term(-1, (1, 0))
        expr = lead_reduce(f, [g1, g2], LEX)
        assert expr.remainder.is_zero()
        assert check_strong_standard(f, [g1, g2], expr.steps, LEX)


def _random_ssr(rng, target_pool, ring, rank, max_extra=2):
    """A vector with a strong standard representation by ``target_pool``."""
    while True:
        h1 = rng.choice(target_pool)
        gamma = (rng.randint(0, 2), rng.randint(0, 2))
        top = h1.mul_term(1, gamma).lm(LEX)
        steps = [Step(rng.choice([1, -1, 2, 3]), gamma, h1)]
        for _ in range(rng.randint(0, max_extra)):
            h = rng.choice(target_pool)
            g2 = (rng.randint(0, 2), rng.randint(0, 2))
            if LEX.key(h.mul_term(1, g2).lm(LEX)) < LEX.key(top):
                steps.append(Step(rng.randint(-4, 4) or 1, g2, h))
        f = Expression(steps, None).reconstruct(ring, rank)
        if f and check_strong_standard(f, target_pool, steps, LEX):
            return f, steps


@pytest.mark.parametrize("seed", range(40))
def test_composition_of_representations(seed):
    rng = random.Random(seed)
    H = [
        PolyVector.from_terms(ZXY, 2, [(rng.randint(-5, 5) or 1, ((rng.randint(0, 2), rng.randint(0, 2)), rng.randrange(2)))
                                      for _ in range(rng.randint(1, 3))])
        for _ in range(3)
    ]
    H = [h for h in H if h]
    inner = {}
    G = []
    for _ in range(3):
        g, steps = _random_ssr(rng, H, ZXY, 2)
        if g not in inner:
            inner[g] = steps
            G.append(g)
    f, outer = _random_ssr(rng, G, ZXY, 2)
    composed = compose_representations(outer, inner)
    assert check_strong_standard(f, H, composed, LEX)


class TestExactDivide:
    def test_quotient(self):
        assert exact_divide(p("6*x^2*y - 4*x*y"), p("2*x"), LEX) == p("3*x*y - 2*y")

    def test_not_divisible(self):
        with pytest.raises(ArithmeticError):
            exact_divide(p("x + 1"), p("2*x"), LEX)

    def test_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(p("x"), ZXY.zero(1), LEX)

    @given(vectors(rank=1, nonzero=True, max_terms=3), vectors(rank=1, nonzero=True, max_terms=3))
    def test_product_roundtrip(self, a, b):
        assert exact_divide(a * b, b, LEX) == a
