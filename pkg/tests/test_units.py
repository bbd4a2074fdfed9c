from fractions import Fraction

import pytest

from surgtorsion.cyclotomic import CyclotomicNumber
from surgtorsion.laurent import LaurentPoly, LaurentRational, t_variable
from surgtorsion.units import TorsionValue, UnitGroupSpec, canonicalize


@pytest.fixture
def sixth_roots():
    return UnitGroupSpec.generated([CyclotomicNumber.zeta(6)], order=6)


def test_generated_group_has_all_roots(sixth_roots):
    assert len(sixth_roots.root_units) == 6
    # -1 = z^3 is already a root, so signs add nothing
    assert len(sixth_roots.multipliers()) == 6


def test_canonical_twenty_nine(sixth_roots):
    z = CyclotomicNumber.zeta(6)
    v = TorsionValue.of(z * -29, sixth_roots)
    assert v.value.coeffs == (29, 0)
    assert v == TorsionValue.of(CyclotomicNumber.rational(6, 29), sixth_roots)
    assert str(v) == "29"


def test_canonicalize_is_idempotent(sixth_roots):
    z = CyclotomicNumber.zeta(6)
    v = TorsionValue(z * 3 + 1, sixth_roots)
    once = canonicalize(v)
    twice = canonicalize(TorsionValue(once.value, sixth_roots))
    assert once.value == twice.value
    for k in range(6):
        assert TorsionValue.of((z * 3 + 1) * z ** k, sixth_roots) == once


def test_rational_values_up_to_sign_and_shift():
    t = t_variable()
    units = UnitGroupSpec(sign=True, t_shift=True)
    a = TorsionValue.of(LaurentRational(t - 1), units)
    b = TorsionValue.of(LaurentRational((t - 1).shift(3) * -1), units)
    assert a == b
    assert hash(a) == hash(b)
    assert a.kind == "rational"


def test_without_t_shift_powers_of_t_are_distinct():
    t = t_variable()
    units = UnitGroupSpec(sign=True, t_shift=False)
    assert TorsionValue.of(LaurentRational(t - 1), units) != TorsionValue.of(LaurentRational(t * t - t), units)


def test_scaling_does_not_identify_different_moduli(sixth_roots):
    assert TorsionValue.of(CyclotomicNumber.rational(6, 2), sixth_roots) != \
        TorsionValue.of(CyclotomicNumber.rational(6, 1), sixth_roots)


def test_zero_class(sixth_roots):
    zero = TorsionValue.zero(sixth_roots)
    assert zero.is_zero()
    assert zero.kind == "zero"
    assert TorsionValue.of(CyclotomicNumber.rational(6, 0), sixth_roots) == zero
    assert zero.sort_key() < TorsionValue.of(CyclotomicNumber.rational(6, 1), sixth_roots).sort_key()


def test_integers_become_scalars():
    units = UnitGroupSpec()
    v = TorsionValue.of(Fraction(-3, 2), units)
    assert v.kind == "scalar"
    assert v.value == Fraction(3, 2)


def test_polynomials_become_rationals():
    v = TorsionValue.of(LaurentPoly([1, 1]), UnitGroupSpec(t_shift=True))
    assert isinstance(v.value, LaurentRational)
    assert v.value.is_polynomial()


def test_infinite_generators_rejected():
    with pytest.raises(ValueError):
        UnitGroupSpec.generated([CyclotomicNumber.rational(1, 2)])
