"""
Torsion of based acyclic chain complexes.

A complex C_m -> ... -> C_0 is given by its boundary matrices acting on
column vectors in the standard bases, so d_i has shape dim C_{i-1} x dim C_i.
"""
from dataclasses import dataclass
from math import gcd
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cyclotomic import CyclotomicNumber
from .exceptions import NonAcyclicError
from .laurent import LaurentPoly, LaurentRational
from .matrix import Matrix, column_pivots, determinant


def _as_field(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, LaurentPoly):
        return LaurentRational.from_poly(x)
    return x


def _zero_like(m: Matrix):
    for row in m.entries:
        for x in row:
            return x - x
    return 0


class BasedComplex:
    """
    A finite chain complex with the standard basis in every degree.

    Args:
        dims: Dimensions n_0, ..., n_m.
        boundaries: Matrices d_1, ..., d_m with d_i of shape n_{i-1} x n_i.

    Raises:
        ValueError: If shapes disagree or consecutive boundaries do not compose to zero.
    """

    def __init__(self, dims: Sequence[int], boundaries: Sequence[Matrix]):
        self.dims: Tuple[int, ...] = tuple(dims)
        if len(boundaries) != len(self.dims) - 1:
            raise ValueError(f"Expected {len(self.dims) - 1} boundary maps, got {len(boundaries)}")
        for i, d in enumerate(boundaries, start=1):
            if (d.rows, d.cols) != (self.dims[i - 1], self.dims[i]):
                raise ValueError(f"d_{i} has shape {d.rows}x{d.cols}, expected {self.dims[i - 1]}x{self.dims[i]}")
        self.boundaries: Tuple[Matrix, ...] = tuple(boundaries)
        for i in range(1, len(self.boundaries)):
            product = self.boundaries[i - 1] * self.boundaries[i]
            if any(x for row in product.entries for x in row):
                raise ValueError(f"d_{i} d_{i + 1} is not zero")

    @classmethod
    def from_boundaries(cls, boundaries: Sequence[Matrix]) -> "BasedComplex":
        if not boundaries:
            raise ValueError("A complex needs at least one boundary map")
        dims = [boundaries[0].rows] + [d.cols for d in boundaries]
        return cls(dims, boundaries)

    @property
    def length(self) -> int:
        return len(self.dims) - 1

    def boundary(self, i: int) -> Matrix:
        """d_i : C_i -> C_{i-1}; zero maps outside 1..m."""
        if 1 <= i <= self.length:
            return self.boundaries[i - 1]
        if i == 0:
            return Matrix.zeros(0, self.dims[0])
        return Matrix.zeros(self.dims[self.length], 0)

    def ranks(self) -> List[int]:
        return [len(column_pivots(d)) for d in self.boundaries]

    def is_acyclic(self) -> bool:
        ranks = [0] + self.ranks() + [0]
        return all(ranks[i] + ranks[i + 1] == n for i, n in enumerate(self.dims))


@dataclass(frozen=True)
class ImageBasisChoice:
    """
    Pivot columns per degree: columns[i] selects columns of d_i whose images
    form the basis b_{i-1} of im d_i; the lifts are the matching standard basis vectors of C_i.
    """
    columns: Tuple[Tuple[int, ...], ...]

    def image_columns(self, i: int) -> Tuple[int, ...]:
        return self.columns[i] if 0 <= i < len(self.columns) else ()


def image_basis_choice(c: BasedComplex, reverse: bool = False) -> ImageBasisChoice:
    """Column-pivoted choice of image bases, scanning columns from the left (or right)."""
    columns = [()]
    for d in c.boundaries:
        columns.append(tuple(column_pivots(d, reverse=reverse)))
    return ImageBasisChoice(tuple(columns))


def _degree_matrix(c: BasedComplex, choice: ImageBasisChoice, i: int) -> Matrix:
    n = c.dims[i]
    upper = c.boundary(i + 1) if i < c.length else None
    image = list(choice.image_columns(i + 1)) if upper is not None else []
    lifts = list(choice.image_columns(i))
    if len(image) + len(lifts) != n:
        raise NonAcyclicError(f"Chain complex is not acyclic in degree {i}")
    zero = _zero_like(upper) if upper is not None and upper.entries else 0
    one = zero + 1
    columns = [upper.column(j) for j in image]
    for j in lifts:
        columns.append(tuple(one if k == j else zero for k in range(n)))
    return Matrix([[col[r] for col in columns] for r in range(n)], n)


def complex_torsion(c: BasedComplex, choice: Optional[ImageBasisChoice] = None):
    """
    Torsion prod_i [b_i b_{i-1} / c_i]^((-1)^(i+1)) of an acyclic based complex.

    Args:
        c (BasedComplex): The complex.
        choice (ImageBasisChoice, optional): Image bases; pivot columns from the left by default.

    Returns:
        The torsion as a field element (Fraction, CyclotomicNumber or LaurentRational).

    Raises:
        NonAcyclicError: If the complex has homology in some degree.
    """
    if not c.is_acyclic():
        raise NonAcyclicError("Chain complex is not acyclic")
    if choice is None:
        choice = image_basis_choice(c)
    result = Fraction(1)
    for i in range(c.length + 1):
        det = _as_field(determinant(_degree_matrix(c, choice, i)))
        if not det:
            raise NonAcyclicError(f"Chosen image basis is degenerate in degree {i}")
        result = result * det if i % 2 else result / det
    return result


@dataclass(frozen=True)
class ShortExactSequence:
    """Degreewise inclusions sub -> total and projections total -> quot."""
    inclusions: Tuple[Matrix, ...]
    projections: Tuple[Matrix, ...]


def _is_zero_matrix(m: Matrix) -> bool:
    return not any(x for row in m.entries for x in row)


def _lifts(projection: Matrix) -> Matrix:
    """Right inverse of a surjective projection, supported on its pivot columns."""
    pivots = column_pivots(projection)
    square = projection.select(range(projection.rows), pivots)
    inverse = square.inverse()
    rows = []
    for k in range(projection.cols):
        if k in pivots:
            rows.append(list(inverse.entries[pivots.index(k)]))
        else:
            rows.append([Fraction(0)] * projection.rows)
    return Matrix(rows, projection.rows)


def compatibility_determinants(sub: BasedComplex, total: BasedComplex, quot: BasedComplex,
                               compat: ShortExactSequence) -> List:
    """
    Validates a short exact sequence of complexes and returns [c'_i c''_i / c_i] per degree.

    Raises:
        ValueError: If the maps are not chain maps or not degreewise exact.
    """
    degrees = len(total.dims)
    if len(sub.dims) != degrees or len(quot.dims) != degrees:
        raise ValueError("Complexes in a short exact sequence must have the same length")
    if len(compat.inclusions) != degrees or len(compat.projections) != degrees:
        raise ValueError("Need one inclusion and one projection per degree")
    dets = []
    for k in range(degrees):
        inc, proj = compat.inclusions[k], compat.projections[k]
        if sub.dims[k] + quot.dims[k] != total.dims[k]:
            raise ValueError(f"Dimensions do not add up in degree {k}")
        if not _is_zero_matrix(proj * inc):
            raise ValueError(f"Projection does not kill the inclusion in degree {k}")
        if len(column_pivots(inc)) != sub.dims[k] or len(column_pivots(proj.transpose())) != quot.dims[k]:
            raise ValueError(f"Maps are not injective/surjective in degree {k}")
        if k:
            if total.boundary(k) * inc != compat.inclusions[k - 1] * sub.boundary(k):
                raise ValueError(f"Inclusion is not a chain map in degree {k}")
            if quot.boundary(k) * proj != compat.projections[k - 1] * total.boundary(k):
                raise ValueError(f"Projection is not a chain map in degree {k}")
        if total.dims[k] == 0:
            dets.append(Fraction(1))
            continue
        basis = inc.hstack(_lifts(proj)) if quot.dims[k] else inc
        dets.append(_as_field(determinant(basis)))
    return dets


def multiplicativity_sign(sub: BasedComplex, quot: BasedComplex) -> int:
    """
    The sign of the product formula: moving the lifts of the sub image bases past the
    quotient image bases in every degree costs (-1)^(rank d''_(i+1) rank d'_i).
    """
    sub_ranks, quot_ranks = sub.ranks(), quot.ranks()
    exponent = sum(quot_ranks[i] * sub_ranks[i - 1] for i in range(1, min(len(sub_ranks), len(quot_ranks))))
    return -1 if exponent % 2 else 1


def check_multiplicativity(sub: BasedComplex, total: BasedComplex, quot: BasedComplex,
                           compat: ShortExactSequence) -> bool:
    """
    Checks tau(total) = tau(sub) tau(quot) after correcting by the compatibility determinants.

    The identity is signed: tau(total) = (-1)^e tau(sub) tau(quot) prod_i [c'_i c''_i / c_i]^((-1)^(i+1)),
    e = sum_i rank d''_(i+1) rank d'_i (see ``multiplicativity_sign``).

    Raises:
        ValueError: If compat is not a short exact sequence of chain complexes.
    """
    dets = compatibility_determinants(sub, total, quot, compat)
    expected = complex_torsion(sub) * complex_torsion(quot)
    for i, d in enumerate(dets):
        expected = expected * d if i % 2 else expected / d
    return complex_torsion(total) == expected * multiplicativity_sign(sub, quot)


def lens_space_complex(p: int, q: int, power: int = 1) -> BasedComplex:
    """
    Twisted cellular complex of L(p, q), one cell per dimension, with the
    generator of pi_1 acting by z^power in Q(z_p).

    Args:
        p (int): Order of pi_1, p >= 2.
        q (int): Coprime to p.
        power (int): Exponent of the character, coprime to p.

    Raises:
        ValueError: If q or power is not a unit mod p.
    """
    if p < 2 or gcd(p, q) != 1 or gcd(p, power) != 1:
        raise ValueError(f"Invalid lens space data L({p}, {q}) with character power {power}")
    q_inverse = pow(q, -1, p)
    t = CyclotomicNumber.zeta(p, power)
    one = CyclotomicNumber.rational(p, 1)
    norm = CyclotomicNumber.rational(p, 0)
    for k in range(p):
        norm = norm + t ** k
    d1 = Matrix([[t - one]])
    d2 = Matrix([[norm]])
    d3 = Matrix([[t ** q_inverse - one]])
    return BasedComplex([1, 1, 1, 1], [d1, d2, d3])
