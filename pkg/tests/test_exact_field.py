import pytest
import sympy
from hypothesis import given, strategies as st

from g2forge.exact_field import (
    LAMBDA,
    SQRT15,
    QuadScalar,
    UniPoly,
    as_scalar,
    char_poly,
    factor_weights,
    mpq,
    parts,
    quad,
    weight_polynomial,
)

rationals = st.fractions(max_denominator=50).map(lambda f: mpq(f.numerator, f.denominator))
quads = st.builds(QuadScalar, rationals, rationals)


def test_sqrt15_squares_to_15():
    assert SQRT15 * SQRT15 == 15


def test_inverse_of_one_plus_sqrt15():
    x = 1 / (1 + SQRT15)
    assert x == quad(mpq(-1, 14), mpq(1, 14))
    assert x * (1 + SQRT15) == 1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QuadScalar(1, 1) / QuadScalar(0, 0)


def test_rational_collapse():
    assert as_scalar(QuadScalar(3, 0)) == 3
    assert parts(mpq(2, 3)) == (mpq(2, 3), 0)
    assert parts(quad(1, 2)) == (1, 2)


@given(quads, quads, quads)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if x:
        assert x * (1 / x) == 1


@given(quads)
def test_matches_sympy(x):
    s = sympy.Rational(int(x.a.numerator), int(x.a.denominator)) + sympy.Rational(
        int(x.b.numerator), int(x.b.denominator)
    ) * sympy.sqrt(15)
    a, b = parts(x * x)
    expect = sympy.expand(s * s)
    got = sympy.Rational(int(a.numerator), int(a.denominator)) + sympy.Rational(
        int(b.numerator), int(b.denominator)
    ) * sympy.sqrt(15)
    assert sympy.simplify(expect - got) == 0


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4))
def test_char_poly_matches_sympy(rows):
    got = char_poly(rows)
    lam = sympy.Symbol("lam")
    ref = sympy.Poly(sympy.Matrix(rows).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
    assert [int(c) for c in got.coeffs] == [int(c) for c in ref]


def test_weight_polynomial_round_trip():
    p = weight_polynomial(1, {1: 1, 2: 1, 3: 1})
    assert factor_weights(p) == (1, {1: 1, 2: 1, 3: 1})
    assert p == LAMBDA * UniPoly([1, 0, 1]) * UniPoly([4, 0, 1]) * UniPoly([9, 0, 1])


def test_factor_weights_rejects_other_factors():
    with pytest.raises(ValueError):
        factor_weights(UniPoly([-1, 0, 1]))
