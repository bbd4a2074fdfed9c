import pytest

from surgtorsion.exceptions import HypothesisError, InputParseError
from surgtorsion.fox import alexander_polynomial
from surgtorsion.knots import MarkedPresentation, parse_pd, wirtinger
from surgtorsion.laurent import LaurentPoly
from surgtorsion.presentation import FinitePresentation, GroupWord


def test_pd_text_and_list_forms_agree():
    text = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    listed = parse_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    assert text == listed
    assert str(text) == "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_writhe():
    assert abs(parse_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).writhe) == 3
    assert parse_pd([[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).writhe == 0


def test_wirtinger_shape(trefoil, figure8):
    assert trefoil.generators == ("x1", "x2", "x3")
    assert len(trefoil.relators) == 3
    assert trefoil.meridian == "x1"
    assert len(figure8.generators) == 4
    assert trefoil.presentation.abelian_invariants() == [0]


def test_longitudes_are_null_homologous(trefoil, figure8, kt):
    for marked in (trefoil, figure8, kt):
        alpha = marked.grading()
        assert sum(alpha[g] * e for g, e in marked.longitude.letters) == 0


@pytest.mark.parametrize("name, coeffs", [
    ("trefoil", [1, -1, 1]),
    ("figure8", [1, -3, 1]),
    ("kt", [1]),
])
def test_alexander_polynomials(request, name, coeffs):
    marked = request.getfixturevalue(name)
    assert alexander_polynomial(marked) == LaurentPoly(coeffs)


def test_unknot_alexander_polynomial(unknot_group):
    assert alexander_polynomial(unknot_group) == LaurentPoly([1])


def test_mirror_reverses_longitude(trefoil):
    mirror = trefoil.mirrored()
    assert mirror.longitude == trefoil.longitude.inverse()
    assert mirror.orientation == -1
    assert mirror.mirrored().longitude == trefoil.longitude


@pytest.mark.parametrize("pd", [
    [[1, 2, 3, 4]],
    [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 7]],
    [[2, 4, 1, 3], [4, 2, 3, 1]],
    "X(1,4,2,5) Y(3,6,4,1)",
    [[1, 4, 2]],
])
def test_invalid_pd_codes(pd):
    with pytest.raises(InputParseError):
        parse_pd(pd)


def test_two_component_diagram_rejected():
    # Hopf link
    with pytest.raises(InputParseError):
        parse_pd([[4, 1, 3, 2], [2, 3, 1, 4]])


def test_grading_requires_rank_one():
    marked = MarkedPresentation(FinitePresentation(("a", "b")), "a", GroupWord())
    with pytest.raises(HypothesisError):
        marked.grading()


def test_wirtinger_mirror_flag():
    d = parse_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    assert wirtinger(d, mirror=True).longitude == wirtinger(d).longitude.inverse()


@pytest.mark.parametrize("pd", [[], "", "[]"])
def test_empty_pd_is_the_unknot(pd):
    d = parse_pd(pd)
    assert d.size == 0
    assert d.writhe == 0
    marked = wirtinger(d, "unknot")
    assert marked.generators == ("x1",)
    assert marked.relators == ()
    assert marked.longitude == GroupWord()
    assert alexander_polynomial(marked) == LaurentPoly([1])
    assert wirtinger(d, mirror=True).orientation == -1


def test_non_planar_code_rejected():
    # labels, orientation and component count are consistent, but the map has 3 faces, not 13
    code = [[4, 2, 5, 1], [8, 4, 9, 3], [12, 9, 13, 10], [2, 12, 3, 11], [14, 5, 15, 6], [16, 8, 17, 7],
            [20, 15, 21, 16], [10, 14, 11, 13], [22, 18, 1, 17], [6, 19, 7, 20], [18, 22, 19, 21]]
    with pytest.raises(InputParseError, match="not planar"):
        parse_pd(code)


def test_one_crossing_kink_is_planar():
    d = parse_pd([[1, 2, 2, 1]])
    assert d.size == 1
    assert wirtinger(d).presentation.abelian_invariants() == [0]
