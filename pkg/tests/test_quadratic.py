import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subrec import ONE, ZERO, QuadraticReal

GOLDEN = QuadraticReal(Fraction(-1, 2), Fraction(1, 2), 5)
SQRT2M1 = QuadraticReal(-1, 1, 2)


def test_basic_values():
    assert float(GOLDEN) == pytest.approx((math.sqrt(5) - 1) / 2)
    assert float(SQRT2M1) == pytest.approx(math.sqrt(2) - 1)
    assert ZERO == 0
    assert ONE == 1
    assert QuadraticReal(Fraction(3, 7)) == Fraction(3, 7)


def test_radicand_reduction():
    assert QuadraticReal(0, 1, 8) == QuadraticReal(0, 2, 2)
    assert QuadraticReal(0, 1, 45) == QuadraticReal(0, 3, 5)


def test_perfect_square_radicand_folds_to_rational():
    x = QuadraticReal(1, 1, 4)
    assert x.is_rational
    assert x == 3
    assert QuadraticReal(0, 2, 9) == 6
    assert QuadraticReal(Fraction(1, 2), Fraction(1, 2), 1) == 1


def test_arithmetic_golden_identity():
    # x = (sqrt(5)-1)/2 satisfies x^2 + x - 1 = 0
    assert GOLDEN * GOLDEN + GOLDEN - 1 == 0
    assert 1 / GOLDEN == GOLDEN + 1
    assert SQRT2M1 * (SQRT2M1 + 2) == 1


def test_mixed_radicand_needs_rational_operand():
    s2 = QuadraticReal(0, 1, 2)
    s3 = QuadraticReal(0, 1, 3)
    with pytest.raises(ValueError):
        s2 + s3
    assert s2 + Fraction(1, 2) == QuadraticReal(Fraction(1, 2), 1, 2)


def test_comparisons_near_ties():
    # sqrt(2) vs 1.41421356...: rational splits that need exact signs
    s2 = QuadraticReal(0, 1, 2)
    assert s2 > Fraction(141421356, 100000000)
    assert s2 < Fraction(141421357, 100000000)
    assert GOLDEN < Fraction(618034, 1000000)
    assert GOLDEN > Fraction(618033, 1000000)


def test_floor_and_mod1():
    assert (GOLDEN + 3).floor() == 3
    assert (-GOLDEN).floor() == -1
    assert QuadraticReal(Fraction(7, 2)).floor() == 3
    assert QuadraticReal(-2).floor() == -2
    x = (GOLDEN + 3).mod1()
    assert x == GOLDEN
    y = (-GOLDEN).mod1()
    assert y == 1 - GOLDEN


rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
radicands = st.sampled_from([2, 3, 5, 7, 10])


@st.composite
def quads(draw, d=None):
    if d is None:
        d = draw(radicands)
    return QuadraticReal(draw(rationals), draw(rationals), d)


@given(radicands.flatmap(lambda d: st.tuples(quads(d=d), quads(d=d))))
def test_field_axioms_same_radicand(pair):
    x, y = pair
    assert x + y == y + x
    assert x * y == y * x
    assert x - y == -(y - x)
    if y != 0:
        assert (x / y) * y == x


@given(quads())
def test_floor_bracket(x):
    f = x.floor()
    assert isinstance(f, int)
    assert QuadraticReal(f) <= x < QuadraticReal(f + 1)
    m = x.mod1()
    assert ZERO <= m < ONE
    assert x - m == f


@given(radicands.flatmap(lambda d: st.tuples(quads(d=d), quads(d=d))))
def test_float_agrees_with_exact_comparison(pair):
    # when floats are clearly apart the exact order must agree
    x, y = pair
    fx, fy = float(x), float(y)
    if abs(fx - fy) > 1e-9:
        assert (x < y) == (fx < fy)
