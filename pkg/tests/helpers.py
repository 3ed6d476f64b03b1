"""Shared fixtures data and hypothesis strategies for the test suite."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from eucgb import PolyRing, PolyVector, QQ, ZZ, lex_order
from eucgb.polyvec import AdmissibleOrder, MatrixOrder

ZXY = PolyRing(ZZ, ["x", "y"])
QXY = PolyRing(QQ, ["x", "y"])
LEX = lex_order()

# the worked example of the introduction: f, g and the reducer (x - 2y, 1, 0)
F1 = "(10*x^2*y^2 + y, 0, x)"
G1 = "(4*x^3*y + x^2, 1, 0)"
R1 = "(x - 2*y, 1, 0)"


def v(text: str, ring: PolyRing = ZXY) -> PolyVector:
    return ring.vector(text)


def p(text: str, ring: PolyRing = ZXY) -> PolyVector:
    return ring.poly(text)


integers = st.integers(min_value=-20, max_value=20)
nonzero_integers = integers.filter(bool)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
nonzero_rationals = rationals.filter(bool)


def exponents(nvars: int, max_degree: int = 3):
    return st.tuples(*[st.integers(0, max_degree)] * nvars)


def monomials(nvars: int, rank: int, max_degree: int = 3):
    return st.tuples(exponents(nvars, max_degree), st.integers(0, rank - 1))


@st.composite
def vectors(draw, ring: PolyRing = ZXY, rank: int = 2, max_terms: int = 4, max_degree: int = 3,
            nonzero: bool = False):
    coeff = nonzero_rationals if ring.domain is QQ else nonzero_integers
    terms = draw(st.lists(st.tuples(coeff, monomials(ring.nvars, rank, max_degree)),
                          min_size=1 if nonzero else 0, max_size=max_terms))
    out = PolyVector.from_terms(ring, rank, terms)
    if nonzero and not out:
        out = PolyVector.from_terms(ring, rank, [terms[0]])
    return out


@st.composite
def matrix_orders(draw, nvars: int = 2):
    """Valid integer weight matrices: a nonnegative row with positive entries
    followed by a lex tie-break, with optional component permutation."""
    weights = draw(st.lists(st.integers(1, 4), min_size=nvars, max_size=nvars))
    rows = [weights] + [[int(i == j) for j in range(nvars)] for i in range(nvars)]
    return MatrixOrder(rows)


@st.composite
def admissible_orders(draw, nvars: int = 2, rank: int = 2):
    term = draw(st.one_of(st.just(None), matrix_orders(nvars)))
    perm = draw(st.one_of(st.just(None), st.permutations(list(range(rank)))))
    return AdmissibleOrder(term, perm)
