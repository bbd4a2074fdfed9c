import pytest

from surgtorsion.exceptions import InputParseError
from surgtorsion.presentation import FinitePresentation, GroupWord, commutator, evaluate_word


def test_word_parsing_and_printing():
    w = GroupWord.parse("x y1^-1 x^3")
    assert len(w) == 5
    assert str(w) == "x y1^-1 x^3"
    assert w.exponent_sum("x") == 4
    assert str(GroupWord.parse("1")) == "1"
    assert GroupWord.parse("a*b") == GroupWord.parse("a b")


def test_inverse_and_free_reduction():
    w = GroupWord.parse("a b^2 c^-1")
    assert (w * w.inverse()).reduced() == GroupWord()
    assert str(w ** -1) == "c b^-2 a^-1"
    assert str(commutator(GroupWord.parse("x"), GroupWord.parse("y"))) == "x y x^-1 y^-1"


def test_malformed_letter():
    with pytest.raises(InputParseError):
        GroupWord.parse("a ^2")


def test_presentation_file_format():
    text = """
    # torus knot T(2,3)
    generators: x, y
    relators: x y x y^-1 x^-1 y^-1
    """
    p = FinitePresentation.parse(text)
    assert p.generators == ("x", "y")
    assert p.deficiency == 1
    assert p.abelian_invariants() == [0]
    assert str(p) == "< x, y | x y x y^-1 x^-1 y^-1 >"


def test_relators_on_separate_lines():
    p = FinitePresentation.parse("generators: a b\nrelators:\na^5\nb a b^-1 a^-1\n")
    assert len(p.relators) == 2
    assert p.abelian_invariants() == [5, 0]


@pytest.mark.parametrize("text", ["relators: a", "generators: a\nb^2"])
def test_presentation_errors(text):
    with pytest.raises(InputParseError):
        FinitePresentation.parse(text)


def test_lens_space_homology():
    p = FinitePresentation(("a",), (GroupWord.generator("a", 7),))
    assert p.abelian_invariants() == [7]
    assert p.without_relator(0).abelian_invariants() == [0]


def test_evaluate_word(a5):
    x = a5.parse_idx("(1 2 3)")
    w = GroupWord.parse("x^3")
    assert evaluate_word(w, {"x": x}, a5) == 0
    assert evaluate_word(GroupWord.parse("x^-1"), {"x": x}, a5) == a5.parse_idx("(1 3 2)")
