import pytest

from surgtorsion.chain import complex_torsion, lens_space_complex
from surgtorsion.cyclotomic import CyclotomicNumber
from surgtorsion.exceptions import HypothesisError, InputParseError, NonAcyclicError
from surgtorsion.homs import SearchConstraint, enumerate_surjections
from surgtorsion.laurent import LaurentPoly, LaurentRational, t_variable
from surgtorsion.surgery import (evaluate_at_root, filling_classes, glue_torsion, knot_character, parse_slope,
                                 root_units, slope, surgered_presentation, surgery_invariant_set)
from surgtorsion.units import TorsionValue, UnitGroupSpec


@pytest.mark.parametrize("p, q", [(6, 1), (6, 5), (7, 2), (5, -3), (1, 0), (0, 1), (1, 4)])
def test_slope_companions(p, q):
    s = slope(p, q)
    assert s.p * s.s - s.q * s.r == 1
    assert s.p >= 0


def test_slope_normalisation():
    assert slope(-6, -1) == slope(6, 1)
    assert str(slope(6, 5)) == "6/5"
    assert parse_slope(" 6/5 ") == slope(6, 5)
    assert parse_slope("6") == slope(6, 1)


@pytest.mark.parametrize("text", ["4/2", "a/b", "1/2/3", ""])
def test_bad_slopes(text):
    with pytest.raises(InputParseError):
        parse_slope(text)


def test_shifted_companions_still_satisfy_the_determinant():
    s = slope(6, 5).shifted(-3)
    assert s.p * s.s - s.q * s.r == 1


@pytest.mark.parametrize("p, q", [(5, 1), (7, 2), (5, 2)])
def test_unknot_surgery_is_a_lens_space(unknot_group, trivial, trivial_rep, p, q):
    s = slope(p, q)
    result = surgery_invariant_set(unknot_group, s, trivial, trivial_rep)
    expected = TorsionValue.of(complex_torsion(lens_space_complex(p, q)), root_units(p, trivial_rep))
    assert result.values == (expected,)
    assert not result.violations


def test_companion_shift_does_not_change_the_set(unknot_group, trivial, trivial_rep):
    s = slope(7, 2)
    base = surgery_invariant_set(unknot_group, s, trivial, trivial_rep)
    for k in (-2, 1, 3):
        assert surgery_invariant_set(unknot_group, s.shifted(k), trivial, trivial_rep).same_values(base)


@pytest.mark.parametrize("q", [1, 5])
@pytest.mark.parametrize("a", [1, 5])
def test_abelian_kt_surgery_is_trivial(kt, trivial, trivial_rep, q, a):
    beta = knot_character(kt, 6, a)
    result = surgery_invariant_set(kt, slope(6, q), trivial, trivial_rep, beta)
    assert result.values == (TorsionValue.of(CyclotomicNumber.rational(6, 1), root_units(6, trivial_rep)),)


def test_surgered_kt_has_cyclic_homology(kt):
    for q in (1, 5):
        assert surgered_presentation(kt, slope(6, q)).abelian_invariants() == [6]


def test_character_requires_a_unit(kt):
    with pytest.raises(HypothesisError):
        knot_character(kt, 6, 2)
    beta = knot_character(kt, 6, 5)
    assert beta.exponent(kt.meridian) == 5
    assert set(beta.as_dict()) == set(kt.generators)


def test_zero_slope_is_rejected(unknot_group, trivial, trivial_rep):
    with pytest.raises(HypothesisError):
        surgery_invariant_set(unknot_group, slope(0, 1), trivial, trivial_rep)


def test_evaluation_at_a_pole():
    t = t_variable()
    tau = TorsionValue.of(LaurentRational(LaurentPoly.constant(1), t - 1), UnitGroupSpec(t_shift=True))
    with pytest.raises(HypothesisError):
        evaluate_at_root(tau, 6, 0)
    assert evaluate_at_root(tau, 6, 1) == TorsionValue.of(CyclotomicNumber.rational(6, 1),
                                                          UnitGroupSpec.generated([CyclotomicNumber.zeta(6)], 6))


def test_gluing_along_a_degenerate_core():
    units = UnitGroupSpec.generated([CyclotomicNumber.zeta(6)], 6)
    tau = TorsionValue.of(CyclotomicNumber.rational(6, 3), units)
    with pytest.raises(NonAcyclicError):
        glue_torsion(tau, CyclotomicNumber.rational(6, 0))
    assert glue_torsion(tau, CyclotomicNumber.rational(6, 3)) == TorsionValue.of(CyclotomicNumber.rational(6, 1), units)
    assert glue_torsion(TorsionValue.zero(units), CyclotomicNumber.rational(6, 2)).is_zero()


@pytest.mark.slow
@pytest.mark.parametrize("q", [1, 5])
def test_kt_filling_counts(kt, a4, a5, kt_a5_classes, q):
    s = slope(6, q)
    assert filling_classes(kt, a4, s) == []
    assert len(filling_classes(kt, a5, s, kt_a5_classes)) == 2
    constraint = SearchConstraint(conjugate_generators=kt.generators)
    assert len(enumerate_surjections(surgered_presentation(kt, s), a5, constraint)) == 2


@pytest.mark.slow
@pytest.mark.parametrize("q", [1, 5])
def test_kt_surgery_value_is_twenty_nine(kt, a5, a5_standard, kt_a5_classes, q):
    result = surgery_invariant_set(kt, slope(6, q), a5, a5_standard, classes=kt_a5_classes)
    expected = TorsionValue.of(CyclotomicNumber.rational(6, 29), root_units(6, a5_standard))
    assert result.values == (expected,)
    assert result.values[0].value.coeffs == (29, 0)
