"""
Linear representations of permutation groups, stored as one matrix per group element.
"""
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import CyclotomicNumber
from .exceptions import HypothesisError, InputParseError
from .groups import Permutation, PermGroup
from .matrix import Matrix


class Representation:
    """
    A homomorphism phi: G -> GL_n given by the images of the group generators.

    Args:
        group (PermGroup): Source group.
        generator_images: One n x n matrix per generator of the group.
        name (str): Display name.
        dimension (int, optional): n, needed only when the group has no generators.

    Raises:
        HypothesisError: If the images do not define a homomorphism.
    """

    def __init__(self, group: PermGroup, generator_images: Sequence[Matrix], name: str = "rep",
                 dimension: Optional[int] = None):
        if len(generator_images) != len(group.generators):
            raise InputParseError(f"{name}: expected {len(group.generators)} generator images, "
                                  f"got {len(generator_images)}")
        self.group = group
        self.name = name
        if generator_images:
            self.dimension = generator_images[0].rows
        else:
            self.dimension = dimension or 1
        for m in generator_images:
            if (m.rows, m.cols) != (self.dimension, self.dimension):
                raise InputParseError(f"{name}: generator images must be {self.dimension}x{self.dimension}")
        self._generator_images = tuple(generator_images)
        self._matrices = self._extend()

    def _extend(self) -> Tuple[Matrix, ...]:
        group = self.group
        matrices: List[Optional[Matrix]] = [None] * group.order
        matrices[0] = Matrix.identity(self.dimension)
        frontier = [0]
        gens = list(zip(group.generator_indices, self._generator_images))
        while frontier:
            new = []
            for x in frontier:
                for g, m in gens:
                    y = group.mult_idx(g, x)
                    image = m * matrices[x]
                    if matrices[y] is None:
                        matrices[y] = image
                        new.append(y)
                    elif matrices[y] != image:
                        raise HypothesisError(f"{self.name} is not a homomorphism on {group.name}")
            frontier = new
        return tuple(matrices)

    def matrix_idx(self, a: int) -> Matrix:
        return self._matrices[a]

    def __call__(self, g: Permutation) -> Matrix:
        return self._matrices[self.group.index[tuple(g)]]

    def inverse_idx(self, a: int) -> Matrix:
        return self._matrices[self.group.inv_idx(a)]

    def trace_idx(self, a: int):
        return self._matrices[a].trace()

    @cached_property
    def determinants(self) -> Tuple:
        """Distinct determinants of the image (roots of unity for a finite group)."""
        seen = []
        for m in self._matrices:
            d = m.determinant()
            if d not in seen:
                seen.append(d)
        return tuple(seen)

    def determinant_units(self, order: int = 1) -> List[CyclotomicNumber]:
        out = []
        for d in self.determinants:
            if isinstance(d, CyclotomicNumber):
                out.append(d)
            else:
                out.append(CyclotomicNumber.rational(order, d))
        return out

    def conjugated(self, p: Matrix) -> "Representation":
        """The representation P phi P^-1."""
        inverse = p.inverse()
        images = [p * m * inverse for m in self._generator_images]
        return Representation(self.group, images, f"{self.name}^P", self.dimension)


def permutation_matrix(g: Permutation) -> Matrix:
    """Matrix with e_i -> e_{g(i)}."""
    n = len(g)
    return Matrix([[1 if g[j] == i else 0 for j in range(n)] for i in range(n)], n)


def standard_matrix(g: Permutation) -> Matrix:
    """The permutation action on C^d / C(1, ..., 1) in the basis e_i - e_d."""
    d = len(g)
    last = d - 1
    rows = [[0] * last for _ in range(last)]
    for i in range(last):
        if g[i] != last:
            rows[g[i]][i] += 1
        if g[last] != last:
            rows[g[last]][i] -= 1
    return Matrix(rows, last)


def standard_rep_A5(sigma: Permutation) -> Matrix:
    """
    4 x 4 integer matrix of a degree-5 permutation in the standard representation.

    Raises:
        ValueError: For permutations of other degrees.
    """
    if len(sigma) != 5:
        raise ValueError(f"Expected a permutation of degree 5, got degree {len(sigma)}")
    return standard_matrix(tuple(sigma))


def standard_representation(group: PermGroup) -> Representation:
    if group.degree < 2:
        raise HypothesisError(f"{group.name} has no standard representation")
    return Representation(group, [standard_matrix(g) for g in group.generators], f"standard-{group.name}")


def permutation_representation(group: PermGroup) -> Representation:
    return Representation(group, [permutation_matrix(g) for g in group.generators], f"permutation-{group.name}")


def trivial_representation(group: PermGroup, n: int = 1) -> Representation:
    return Representation(group, [Matrix.identity(n) for _ in group.generators], f"trivial-{n}", n)


def matrix_from_rows(rows: Sequence[Sequence], name: str = "matrix") -> Matrix:
    """
    Builds a matrix from JSON-style rows of integers or "a/b" strings.

    Raises:
        InputParseError: On non-rational entries or ragged rows.
    """
    try:
        entries = [[Fraction(x) if isinstance(x, str) else int(x) for x in row] for row in rows]
        entries = [[int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in row]
                   for row in entries]
        return Matrix(entries)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputParseError(f"Invalid {name}: {e}")
