from fractions import Fraction

import pytest
from hypothesis import given

from eucgb.parsing import ParseError, format_element, format_polynomial, format_vector, parse_element
from eucgb.polyvec import PolyVector

from helpers import LEX, QXY, ZXY, p, v, vectors


class TestParse:
    def test_polynomial(self):
        f = p("10*x^2*y^2 + y - 3")
        assert f.terms == {((2, 2), 0): 10, ((0, 1), 0): 1, ((0, 0), 0): -3}

    def test_repeated_variables_multiply(self):
        assert p("x*x*y") == p("x^2*y")

    def test_like_terms_collect(self):
        assert p("x + x - 2*x").is_zero()

    def test_vector(self):
        f = v("(x, 0, -y)")
        assert f.rank == 3 and f.entry(2) == p("-y")

    def test_rational_coefficients(self):
        assert QXY.poly("1/2*x + 2/4").terms == {((1, 0), 0): Fraction(1, 2), ((0, 0), 0): Fraction(1, 2)}

    def test_element_dispatch(self):
        assert parse_element(" (x)", ZXY).rank == 1
        assert parse_element("x", ZXY) == p("x")


class TestParseErrors:
    @pytest.mark.parametrize("text, col", [
        ("x +* y", 4),
        ("x + z", 5),
        ("2*x^0", 5),
        ("x $ y", 3),
        ("(x, y", 6),
        ("", 1),
    ])
    def test_column_reported(self, text, col):
        with pytest.raises(ParseError) as err:
            parse_element(text, ZXY)
        assert err.value.col == col
        assert err.value.line == 1

    def test_fraction_in_integer_ring(self):
        with pytest.raises(ParseError, match="coefficient"):
            p("1/2*x")

    def test_relocated_line(self):
        with pytest.raises(ParseError) as err:
            p("x +")
        moved = err.value.at_line(7)
        assert (moved.line, moved.col) == (7, err.value.col)
        assert "line 7" in str(moved)


class TestFormat:
    def test_canonical_order(self):
        assert format_polynomial(p("y + x^2 - 3 + x*y")) == "x^2 + x*y + y - 3"

    def test_unit_coefficients(self):
        assert format_polynomial(p("-x + 1")) == "-x + 1"
        assert format_polynomial(p("-1")) == "-1"

    def test_zero(self):
        assert format_polynomial(ZXY.zero(1)) == "0"
        assert format_vector(ZXY.zero(2)) == "(0, 0)"

    def test_worked_vector(self):
        assert format_vector(v("(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)")) == \
            "(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)"

    def test_rationals(self):
        assert format_polynomial(QXY.poly("x + 1/3")) == "x + 1/3"

    @given(vectors(ZXY, rank=3))
    def test_vector_roundtrip(self, f):
        assert v(format_vector(f, LEX)) == f

    @given(vectors(QXY, rank=1))
    def test_polynomial_roundtrip(self, f):
        assert QXY.poly(format_polynomial(f)) == f

    @given(vectors(ZXY, rank=2))
    def test_deterministic(self, f):
        g = PolyVector.from_terms(ZXY, 2, [(c, m) for m, c in reversed(list(f.terms.items()))])
        assert format_element(f) == format_element(g)
