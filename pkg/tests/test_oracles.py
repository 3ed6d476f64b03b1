import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eucgb.division import euclidean_divide
from eucgb.euclid import QQ, ZZ
from eucgb.groebner import member, reduced_strong_groebner
from eucgb.linsys import PolyMatrix, kernel
from eucgb.oracles import (
    SUITE_BOUNDS,
    OracleCapacityError,
    hermite_rows,
    in_truncated_span,
    integer_kernel,
    kernel_bruteforce,
    membership_bruteforce,
    monomials_up_to,
    random_element,
    random_instance,
    rational_kernel,
    rref_rows,
)
from eucgb.polyvec import PolyRing, lex_order

from helpers import QXY, ZXY, p, v

ZX = PolyRing(ZZ, ["x"])
QX = PolyRing(QQ, ["x"])


class TestMembership:
    def test_combination_within_bound(self):
        assert membership_bruteforce(p("x*y"), [p("2*x"), p("3*y")], 1)

    def test_parity_obstruction(self):
        assert not membership_bruteforce(p("x"), [p("2*x"), p("3*y")], 2)

    def test_generator_itself(self):
        g = v("(x + 1, y)")
        assert membership_bruteforce(g, [g], 0)

    def test_bound_too_small(self):
        assert not membership_bruteforce(p("x^2"), [p("x")], 0)
        assert membership_bruteforce(p("x^2"), [p("x")], 1)

    def test_capacity(self):
        R = PolyRing(ZZ, ["x", "y", "z"])
        with pytest.raises(OracleCapacityError):
            membership_bruteforce(R.poly("x"), [R.poly("x^3*y^3*z^3 + 1")] * 30, 25)


class TestKernel:
    def test_worked_generators_in_span(self):
        A = PolyMatrix.from_entries(ZXY, [["10*y", "0", "4*x"]])
        span = kernel_bruteforce(A, 1)
        assert in_truncated_span(v("(2*x, 0, -5*y)"), span)
        assert in_truncated_span(v("(0, 1, 0)"), span)
        assert not in_truncated_span(v("(1, 0, 0)"), span)

    def test_identity(self):
        A = PolyMatrix.from_entries(ZX, [[1, 0], [0, 1]])
        assert kernel_bruteforce(A, 2) == []

    def test_syzygy(self):
        A = PolyMatrix.from_entries(QX, [["x", "-x"]])
        span = kernel_bruteforce(A, 0)
        assert len(span) == 1 and in_truncated_span(QX.vector(["1", "1"]), span)

    @pytest.mark.parametrize("seed", range(15))
    def test_bruteforce_vectors_reduce_against_kernel(self, seed):
        rng = random.Random(seed)
        ring = PolyRing(QQ if seed % 2 else ZZ, ["x", "y"][: 1 + seed % 2])
        A = PolyMatrix(ring, 3, [random_element(rng, ring, 3, max_degree=1, coeff_bound=4)])
        D = kernel(A).rows
        for k in kernel_bruteforce(A, 1):
            assert euclidean_divide(k, D, lex_order()).remainder.is_zero()


class TestLinearAlgebra:
    def test_monomials(self):
        assert monomials_up_to(2, 1) == [(0, 0), (1, 0), (0, 1)]
        assert len(monomials_up_to(3, 2)) == 10

    def test_hermite(self):
        assert hermite_rows([[4, 1], [6, 1]]) == [[2, 0], [0, 1]]
        assert hermite_rows([[0, 0]]) == []

    def test_integer_kernel(self):
        assert integer_kernel([[2], [3]]) == [[3, -2]] or integer_kernel([[2], [3]]) == [[-3, 2]]

    def test_rref_and_rational_kernel(self):
        assert rref_rows([[2, 4], [1, 2]]) == [[1, 2]]
        (k,) = rational_kernel([[1, 2], [2, 4]])
        assert k[0] * 1 + k[1] * 2 == 0

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2), min_size=1, max_size=4))
    def test_integer_kernel_vectors_vanish(self, rows):
        for c in integer_kernel(rows):
            assert all(sum(ci * r[j] for ci, r in zip(c, rows)) == 0 for j in range(2))


class TestGenerators:
    def test_bounds(self):
        rng = random.Random(0)
        for _ in range(100):
            ring, rank, F = random_instance(rng)
            assert 1 <= ring.nvars <= SUITE_BOUNDS["max_vars"]
            assert 1 <= rank <= SUITE_BOUNDS["max_rank"]
            assert 1 <= len(F) <= SUITE_BOUNDS["max_generators"]
            for f in F:
                assert f and f.rank == rank and len(f.terms) <= SUITE_BOUNDS["max_terms"]
                assert all(sum(a) <= SUITE_BOUNDS["max_degree"] for a, _ in f.terms)
                assert all(abs(c) <= SUITE_BOUNDS["coeff_bound"] for c in f.terms.values())

    def test_rational_coefficients(self):
        rng = random.Random(3)
        ring, _, F = random_instance(rng, domain=QQ)
        assert ring.domain is QQ and all(isinstance(c, Fraction) for f in F for c in f.terms.values())


@pytest.mark.parametrize("seed", range(40))
def test_member_agrees_with_oracle(seed):
    rng = random.Random(seed)
    ring, rank, F = random_instance(rng, max_vars=2, max_rank=2, max_generators=3)
    G = reduced_strong_groebner(F, lex_order())
    f = random_element(rng, ring, rank)
    if rng.random() < 0.5:
        f = ring.zero(rank)
        for g in F:
            f = f + g.mul_poly(random_element(rng, ring, 1, max_degree=1, max_terms=2, coeff_bound=3))
    truth = member(f, G, lex_order())
    if membership_bruteforce(f, F, 2):
        assert truth
    elif not truth:
        assert not membership_bruteforce(f, F, 2)
