import pytest

from surgtorsion.exceptions import HypothesisError, InputParseError
from surgtorsion.matrix import Matrix
from surgtorsion.representations import (Representation, matrix_from_rows, permutation_representation,
                                         standard_rep_A5, standard_representation, trivial_representation)


def test_standard_character_is_fixed_points_minus_one(a5):
    for g in a5.elements:
        fixed = sum(1 for i, x in enumerate(g) if i == x)
        assert standard_rep_A5(g).trace() == fixed - 1


def test_standard_rep_needs_degree_five():
    with pytest.raises(ValueError):
        standard_rep_A5((1, 0, 2, 3))


def test_standard_representation_is_multiplicative(a5, a5_standard):
    rng = range(0, a5.order, 7)
    for a in rng:
        for b in rng:
            assert a5_standard.matrix_idx(a5.mult_idx(a, b)) == a5_standard.matrix_idx(a) * a5_standard.matrix_idx(b)
    assert a5_standard.matrix_idx(0) == Matrix.identity(4)


def test_determinants(a4, a5_standard):
    assert a5_standard.determinants == (1,)
    assert set(permutation_representation(a4).determinants) == {1}
    assert len(trivial_representation(a4, 3).determinants) == 1


def test_conjugated_representation_keeps_traces(a5, a5_standard):
    p = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
    conjugated = a5_standard.conjugated(p)
    for a in range(a5.order):
        assert conjugated.trace_idx(a) == a5_standard.trace_idx(a)


def test_non_homomorphism_is_rejected(a4):
    images = [Matrix([[1, 1], [0, 1]])] * len(a4.generators)
    with pytest.raises(HypothesisError):
        Representation(a4, images, "shear")
    with pytest.raises(InputParseError):
        Representation(a4, [Matrix.identity(2), Matrix.identity(3)][:len(a4.generators)], "mixed")


def test_standard_representation_needs_a_moving_point(trivial):
    with pytest.raises(HypothesisError):
        standard_representation(trivial)


def test_matrix_from_rows():
    m = matrix_from_rows([[1, "1/2"], ["-3", 0]])
    assert m * Matrix.identity(2) == m
    with pytest.raises(InputParseError):
        matrix_from_rows([[1, 2], [3]])
    with pytest.raises(InputParseError):
        matrix_from_rows([["x"]])
