"""
Fox calculus and the torsion of presentation 2-complexes.

Generator images are square matrices over Z[t, t^-1] (LaurentPoly entries),
Q or Q(z_p).  Inverse images are supplied with the images so that Laurent
entries never leave the Laurent ring.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from .chain import BasedComplex
from .cyclotomic import CyclotomicNumber
from .exceptions import HypothesisError
from .groups import PermGroup
from .homs import HomClass
from .laurent import LaurentPoly, LaurentRational
from .matrix import Matrix, determinant
from .presentation import FinitePresentation, GroupWord
from .representations import Representation, trivial_representation
from .units import TorsionValue, UnitGroupSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatrixAssignment:
    """Images and inverse images of the generators of a presentation."""
    images: Dict[str, Matrix]
    inverses: Dict[str, Matrix]
    dimension: int
    one: object = 1

    def identity(self) -> Matrix:
        return Matrix.identity(self.dimension, self.one)

    def letter(self, name: str, exponent: int) -> Matrix:
        return self.images[name] if exponent > 0 else self.inverses[name]

    def word(self, word: GroupWord) -> Matrix:
        result = self.identity()
        for name, e in word.letters:
            result = result * self.letter(name, e)
        return result


def twisted_assignment(generators: Sequence[str], hom: Optional[HomClass], rep: Representation,
                       grading: Dict[str, int], order: int = 1, power: Optional[int] = None) -> MatrixAssignment:
    """
    The assignment gamma -> alpha(gamma) * phi(rho(gamma)).

    With ``power`` unset, alpha(gamma) = t^grading and entries are Laurent polynomials;
    otherwise t is specialised to z_order^power and entries are cyclotomic numbers.

    Args:
        generators: Generator names.
        hom (HomClass, optional): rho; None for the trivial group.
        rep (Representation): phi on the target group of rho.
        grading: alpha as integer exponents of t.
        order (int): Cyclotomic order for the specialisation.
        power (int, optional): Exponent k with t = z^k.
    """
    images, inverses = {}, {}
    for g in generators:
        a = hom.image(g) if hom is not None else 0
        m = rep.matrix_idx(a)
        m_inv = rep.inverse_idx(a)
        degree = grading[g]
        if power is None:
            images[g] = m.map(lambda x, d=degree: LaurentPoly.monomial(d, x) if x else LaurentPoly())
            inverses[g] = m_inv.map(lambda x, d=degree: LaurentPoly.monomial(-d, x) if x else LaurentPoly())
        else:
            z = CyclotomicNumber.zeta(order, power * degree)
            z_inv = CyclotomicNumber.zeta(order, -power * degree)
            images[g] = m.map(lambda x, u=z: u * x)
            inverses[g] = m_inv.map(lambda x, u=z_inv: u * x)
    if power is None:
        one = LaurentPoly.constant(1)
    else:
        one = CyclotomicNumber.rational(order, 1)
    return MatrixAssignment(images, inverses, rep.dimension, one)


def _is_identity(m: Matrix) -> bool:
    return all((x == 1) if i == j else (not x) for i, row in enumerate(m.entries) for j, x in enumerate(row))


def check_relators(presentation: FinitePresentation, rho: MatrixAssignment) -> None:
    """
    Raises:
        HypothesisError: If some relator does not map to the identity.
    """
    for r in presentation.relators:
        if not _is_identity(rho.word(r)):
            raise HypothesisError(f"Relator {r} does not map to the identity")


def fox_derivative(word: GroupWord, generator: str, rho: MatrixAssignment) -> Matrix:
    """rho(d word / d generator) by the product rule."""
    n = rho.dimension
    total = Matrix.zeros(n, n, rho.one - rho.one)
    prefix = rho.identity()
    for name, e in word.letters:
        step = rho.letter(name, e)
        if name == generator:
            if e > 0:
                total = total + prefix
            else:
                total = total - prefix * step
        prefix = prefix * step
    return total


def fox_matrix(presentation: FinitePresentation, rho: MatrixAssignment, check: bool = True) -> Matrix:
    """
    Block matrix with block (j, i) = rho(d r_j / d x_i); rows are relators, columns generators.

    Raises:
        HypothesisError: If some relator does not map to the identity.
    """
    if check:
        check_relators(presentation, rho)
    n = rho.dimension
    blocks = [[fox_derivative(r, g, rho) for g in presentation.generators] for r in presentation.relators]
    if not blocks:
        return Matrix.zeros(0, n * len(presentation.generators))
    return Matrix.block(blocks)


def _relators_for_deficiency_one(presentation: FinitePresentation, drop: Optional[int]) -> FinitePresentation:
    if presentation.deficiency == 1 and drop is None:
        return presentation
    if presentation.deficiency == 0:
        k = len(presentation.relators) - 1 if drop is None else drop
        if not 0 <= k < len(presentation.relators):
            raise HypothesisError(f"Cannot drop relator {k}")
        return presentation.without_relator(k)
    raise HypothesisError(f"Presentation has deficiency {presentation.deficiency}; "
                          "need 1 (or 0 with a dropped relator)")


def _subtract_identity(m: Matrix, one) -> Matrix:
    return m - Matrix.identity(m.rows, one)


def _quotient(num, den):
    if isinstance(num, LaurentPoly) or isinstance(den, LaurentPoly):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly.constant(num)
        den = den if isinstance(den, LaurentPoly) else LaurentPoly.constant(den)
        return LaurentRational(num, den)
    if isinstance(num, int) and isinstance(den, int):
        return CyclotomicNumber.rational(1, num) / den
    return num / den


def presentation_torsion(presentation: FinitePresentation, rho: MatrixAssignment, deleted: str,
                         units: UnitGroupSpec, drop: Optional[int] = None) -> TorsionValue:
    """
    Torsion det(A) / det(rho(deleted) - I) of a deficiency-one presentation.

    A is the Fox matrix with the deleted generator's block column removed.

    Args:
        presentation (FinitePresentation): Deficiency one, or zero with one relator dropped.
        rho (MatrixAssignment): Generator images respecting the relators.
        deleted (str): Generator whose column is removed.
        units (UnitGroupSpec): Unit group of the result.
        drop (int, optional): Index of the relator to drop (the last one by default).

    Returns:
        TorsionValue: Canonical value; the zero class when det(A) vanishes.

    Raises:
        HypothesisError: On wrong deficiency, relator check failure or det(rho(deleted) - I) = 0.
    """
    check_relators(presentation, rho)
    reduced = _relators_for_deficiency_one(presentation, drop)
    n = rho.dimension
    denominator = determinant(_subtract_identity(rho.images[deleted], rho.one))
    if not denominator:
        raise HypothesisError(f"det(rho({deleted}) - I) vanishes")
    fox = fox_matrix(reduced, rho, check=False)
    k = reduced.generators.index(deleted)
    a = fox.delete(cols=range(k * n, (k + 1) * n))
    numerator = determinant(a)
    if not numerator:
        return TorsionValue.zero(units)
    return TorsionValue.of(_quotient(numerator, denominator), units)


def presentation_complex(presentation: FinitePresentation, rho: MatrixAssignment,
                         drop: Optional[int] = None) -> BasedComplex:
    """
    Twisted cellular chain complex of the presentation 2-complex: d_2 is the
    transposed Fox matrix and d_1 the transposed column of blocks rho(x_i) - I.
    """
    reduced = _relators_for_deficiency_one(presentation, drop)
    n = rho.dimension
    g = len(reduced.generators)
    d1 = Matrix.block([[_subtract_identity(rho.images[x], rho.one).transpose() for x in reduced.generators]])
    if reduced.relators:
        d2 = fox_matrix(reduced, rho).transpose()
    else:
        d2 = Matrix.zeros(n * g, 0)
    return BasedComplex([n, n * g, n * len(reduced.relators)], [d1, d2])


def abelian_assignment(generators: Sequence[str], grading: Dict[str, int],
                       order: int = 1, power: Optional[int] = None) -> MatrixAssignment:
    """The 1-dimensional assignment gamma -> t^alpha(gamma) (or z^(power * alpha))."""
    trivial = trivial_representation(PermGroup(1, [], "trivial"), 1)
    return twisted_assignment(generators, None, trivial, grading, order, power)


def alexander_polynomial(marked) -> LaurentPoly:
    """
    Alexander polynomial normalised to lowest exponent 0 and positive constant term.

    Computed as the numerator of the abelian torsion times (t - 1).
    """
    grading = marked.grading()
    rho = abelian_assignment(marked.generators, grading)
    units = UnitGroupSpec(sign=True, t_shift=True)
    tau = presentation_torsion(marked.presentation, rho, marked.meridian, units)
    if tau.is_zero():
        return LaurentPoly()
    value = tau.value * LaurentRational(LaurentPoly([-1, 1]))
    if not value.is_polynomial():
        raise HypothesisError(f"{marked.name}: abelian torsion times (t - 1) is not a polynomial")
    poly = value.num.shift(-value.num.low)
    if poly.coeffs[0] < 0:
        poly = -poly
    return poly
