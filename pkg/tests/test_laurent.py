from fractions import Fraction

import pytest

from surgtorsion.cyclotomic import CyclotomicNumber
from surgtorsion.laurent import LaurentPoly, LaurentRational, poly_gcd, t_variable


def test_arithmetic_and_shift():
    t = t_variable()
    p = (t - 1) * (t + 1)
    assert p == LaurentPoly([-1, 0, 1])
    assert p.shift(-2) == LaurentPoly([-1, 0, 1], -2)
    assert str(LaurentPoly([-1, 0, 1])) == "t^2 - 1"


def test_exact_division():
    t = t_variable()
    p = (t ** 3 - 1)
    assert p.exact_div(t - 1) == t ** 2 + t + 1
    with pytest.raises(ArithmeticError):
        p.exact_div(t + 1)


def test_gcd_is_monic_with_lowest_exponent_zero():
    t = t_variable()
    a = (t - 1) * (t + 2) * 3
    b = (t - 1).shift(5) * (t - 3)
    assert poly_gcd(a, b) == t - 1


def test_rational_normalisation_and_equality():
    t = t_variable()
    q = LaurentRational((t - 1) * (t + 1), (t - 1) * 2)
    assert q.is_polynomial()
    assert q == LaurentRational((t + 1) * Fraction(1, 2))
    assert q.den.coeffs == (1,)


def test_rational_arithmetic():
    t = t_variable()
    a = LaurentRational(LaurentPoly.constant(1), t - 1)
    b = LaurentRational(t, t - 1)
    assert b - a == 1
    assert (a * (t - 1)) == 1
    assert a.inverse() == LaurentRational(t - 1)


def test_evaluate_at_integers_and_roots_of_unity():
    t = t_variable()
    p = t ** 2 - t + 1
    assert p.evaluate(2) == 3
    z = CyclotomicNumber.zeta(6)
    assert not p.evaluate(z)
    inverse = LaurentPoly.monomial(-1)
    assert inverse.evaluate(z) == z ** 5


def test_rational_evaluation_fails_on_vanishing_denominator():
    t = t_variable()
    q = LaurentRational(LaurentPoly.constant(1), t - 1)
    with pytest.raises(ZeroDivisionError):
        q.evaluate(1)
    assert q.evaluate(CyclotomicNumber.zeta(6)) == 1 / (CyclotomicNumber.zeta(6) - 1)
