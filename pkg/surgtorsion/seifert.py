"""
Seifert fibered spaces M(p_1/q_1, ..., p_m/q_m) over S^2: presentations,
the sets S_G, characters, the closed torsion formula and modulus profiles.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .chain import BasedComplex, complex_torsion
from .cyclotomic import CyclotomicNumber, abs_square
from .exceptions import HypothesisError, InconsistencyError, InputParseError, NonAcyclicError
from .fox import MatrixAssignment, presentation_complex
from .groups import PermGroup
from .matrix import Matrix, determinant
from .presentation import FinitePresentation, GroupWord, commutator
from .representations import Representation
from .smith import abelian_invariants, smith_normal_form
from .surgery import CharacterBeta, ManifoldInvariantSet, glue_torsion, root_units, slope
from .units import TorsionValue, UnitGroupSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeifertParams:
    """
    Exceptional fibres p_i/q_i, normalised to p_i >= 2, with companions r_i, s_i (p_i s_i - q_i r_i = 1).
    """
    fibres: Tuple[Tuple[int, int], ...]
    companions: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_fractions(cls, fractions: Sequence[Tuple[int, int]]) -> "SeifertParams":
        """
        Raises:
            InputParseError: If m < 2, some p_i/q_i is reducible or |p_i| < 2.
        """
        if len(fractions) < 2:
            raise InputParseError("A Seifert manifold needs at least two exceptional fibres")
        fibres, companions = [], []
        for p, q in fractions:
            if p < 0:
                p, q = -p, -q
            if gcd(p, q) != 1 or p < 2:
                raise InputParseError(f"Invalid exceptional fibre {p}/{q}")
            s = slope(p, q)
            fibres.append((p, q))
            companions.append((s.r, s.s))
        return cls(tuple(fibres), tuple(companions))

    @property
    def m(self) -> int:
        return len(self.fibres)

    def homology_order(self) -> int:
        """|sum_i q_i prod_{j != i} p_j|."""
        total = 0
        for i, (_, q) in enumerate(self.fibres):
            term = q
            for j, (p, _) in enumerate(self.fibres):
                if j != i:
                    term *= p
            total += term
        return abs(total)

    def __str__(self) -> str:
        return ",".join(f"{p}/{q}" for p, q in self.fibres)


def parse_params(text: str) -> SeifertParams:
    """
    Parses "3/2,-3,-5" (an integer n means n/1).

    Raises:
        InputParseError: On malformed fractions or invalid fibres.
    """
    fractions = []
    for token in text.replace(";", ",").split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if "/" in token:
                a, b = token.split("/")
                fractions.append((int(a), int(b)))
            else:
                fractions.append((int(token), 1))
        except ValueError:
            raise InputParseError(f"Malformed Seifert parameter {token!r}")
    return SeifertParams.from_fractions(fractions)


def seifert_presentation(params: SeifertParams) -> FinitePresentation:
    """<x, y_1..y_m | y_1...y_m, [x, y_i], x^q_i y_i^p_i>."""
    ys = [f"y{i + 1}" for i in range(params.m)]
    x = GroupWord.generator("x")
    relators = [reduce(lambda a, b: a * b, (GroupWord.generator(y) for y in ys))]
    relators += [commutator(x, GroupWord.generator(y)) for y in ys]
    relators += [GroupWord.generator("x", q) * GroupWord.generator(y, p) for (p, q), y in zip(params.fibres, ys)]
    return FinitePresentation(("x",) + tuple(ys), tuple(relators))


SGClass = Tuple[int, ...]


def _sg_tuples(group: PermGroup, g: int, allowed: Tuple[Tuple[int, ...], ...]) -> Tuple[SGClass, ...]:
    found = {}
    last = set(allowed[-1])

    def extend(prefix: List[int], product: int) -> None:
        if len(prefix) == len(allowed) - 1:
            closing = group.inv_idx(product)
            if closing in last:
                items = [g] + prefix + [closing]
                if group.generates_idx(items):
                    found.setdefault(group.orbit_representative_idx(items))
            return
        for h in allowed[len(prefix)]:
            extend(prefix + [h], group.mult_idx(product, h))

    extend([], 0)
    return tuple(sorted(found))


def _enumerate_SG(params: SeifertParams, group: PermGroup) -> List[SGClass]:
    out: List[SGClass] = []
    for g in group.center:
        allowed = []
        for p, q in params.fibres:
            gq = group.power_idx(g, q)
            allowed.append(tuple(h for h in range(group.order)
                                 if group.mult_idx(gq, group.power_idx(h, p)) == 0))
        out.extend(_sg_tuples(group, g, tuple(allowed)))
    return sorted(set(out))


def enumerate_SG(params: SeifertParams, group: PermGroup, cache=None) -> List[SGClass]:
    """
    S_G(p_1/q_1, ...): orbit representatives [g, h_1, ..., h_m] with g central,
    h_1...h_m = 1, g^q_i h_i^p_i = 1 and <g, h_1, ..., h_m> = G.

    ``cache`` is an optional HomCache, shared with the knot group enumerations.
    """
    if cache is None:
        return _enumerate_SG(params, group)
    digest = cache.key_digest("S_G", params.fibres, group.degree, group.generators)
    return [tuple(c) for c in cache.lookup(digest, lambda: _enumerate_SG(params, group))]


@dataclass(frozen=True)
class SeifertCharacter:
    """Exponents x -> z^a, y_i -> z^b_i of a surjection onto <z_order>."""
    order: int
    a: int
    b: Tuple[int, ...]

    def as_beta(self) -> CharacterBeta:
        names = ("x",) + tuple(f"y{i + 1}" for i in range(len(self.b)))
        return CharacterBeta(self.order, tuple(zip(names, (self.a,) + self.b)))


def enumerate_characters(source: Union[SeifertParams, FinitePresentation], order: int) -> List[Dict[str, int]]:
    """
    All surjections H_1 -> Z/order as generator exponent maps.

    Raises:
        HypothesisError: If H_1 is not cyclic of the given order.
    """
    presentation = seifert_presentation(source) if isinstance(source, SeifertParams) else source
    relations = presentation.abelianization_matrix()
    n = len(presentation.generators)
    invariants = abelian_invariants(relations, n)
    if invariants != ([order] if order > 1 else []):
        raise HypothesisError(f"H_1 = {invariants or 'trivial'} is not cyclic of order {order}")
    snf = smith_normal_form(relations, n)
    diagonal = snf.diagonal + [0] * (n - len(snf.diagonal))
    # the single non-unit invariant factor sits last
    k = max(i for i, d in enumerate(diagonal) if d != 1) if order > 1 else n - 1
    column = snf.right.column(k)
    characters = []
    for u in range(1, order + 1):
        if gcd(u, order) != 1:
            continue
        characters.append({g: (u * c) % order for g, c in zip(presentation.generators, column)})
    return characters


def seifert_characters(params: SeifertParams, order: Optional[int] = None) -> List[SeifertCharacter]:
    order = order or params.homology_order()
    out = []
    for chi in enumerate_characters(params, order):
        out.append(SeifertCharacter(order, chi["x"], tuple(chi[f"y{i + 1}"] for i in range(params.m))))
    return out


def _det_minus_identity(m: Matrix, one):
    return determinant(m - Matrix.identity(m.rows, one))


def _one_like(m: Matrix):
    for row in m.entries:
        for x in row:
            return x * 0 + 1
    return 1


def seifert_torsion(params: SeifertParams, rho_x: Matrix, rho_y: Sequence[Matrix],
                    units: UnitGroupSpec) -> TorsionValue:
    """
    [det(rho(x) - I)^(m-2) / prod_i det(rho(x^s_i y_i^r_i) - I)].

    Raises:
        HypothesisError: If det(rho(x) - I) = 0.
        NonAcyclicError: If some filling factor vanishes.
    """
    one = _one_like(rho_x)
    fibre = _det_minus_identity(rho_x, one)
    if not fibre:
        raise HypothesisError("det(rho(x) - I) vanishes")
    value = fibre ** (params.m - 2)
    for (r, s), y in zip(params.companions, rho_y):
        factor = _det_minus_identity((rho_x ** s) * (y ** r), one)
        if not factor:
            raise NonAcyclicError(f"Filling factor vanishes for companion ({r}, {s})")
        value = value / factor
    return TorsionValue.of(value, units)


def _character_images(rep: Representation, order: int, chi: SeifertCharacter,
                      cls: SGClass) -> Tuple[Matrix, List[Matrix]]:
    g, hs = cls[0], cls[1:]
    zx = CyclotomicNumber.zeta(order, chi.a)
    rho_x = rep.matrix_idx(g).map(lambda v: zx * v)
    rho_y = []
    for b, h in zip(chi.b, hs):
        zy = CyclotomicNumber.zeta(order, b)
        rho_y.append(rep.matrix_idx(h).map(lambda v, u=zy: u * v))
    return rho_x, rho_y


def seifert_invariant_set(params: SeifertParams, group: PermGroup, rep: Representation,
                          chi: SeifertCharacter, classes: Optional[List[SGClass]] = None,
                          verify: bool = False) -> ManifoldInvariantSet:
    """
    T_{M, chi}^phi: one value per S_G class by the closed formula.

    Classes with det(z^a phi(g) - I) = 0 are recorded as violations; a vanishing
    filling factor gives the zero class.  With ``verify`` every value is recomputed
    by gluing the link exterior complex.

    Raises:
        InconsistencyError: If a verified value disagrees with the gluing computation.
    """
    order = chi.order
    units = root_units(order, rep)
    result = ManifoldInvariantSet()
    if classes is None:
        classes = enumerate_SG(params, group)
    for cls in classes:
        label = "[" + ", ".join(group.format_idx(x) for x in cls) + "]"
        rho_x, rho_y = _character_images(rep, order, chi, cls)
        try:
            value = seifert_torsion(params, rho_x, rho_y, units)
        except NonAcyclicError:
            value = TorsionValue.zero(units)
        except HypothesisError as e:
            result.violations.append(f"{label}: {e}")
            continue
        if verify:
            try:
                glued = glued_seifert_torsion(params, rho_x, rho_y, units)
            except NonAcyclicError:
                glued = TorsionValue.zero(units)
            if glued != value:
                raise InconsistencyError(f"M({params}) class {label}: closed form {value} != glued {glued}")
        result.add(value, label)
    return result


def modulus_profile(v: TorsionValue) -> Fraction:
    """
    |v|^2 as an exact rational.

    Raises:
        ValueError: If |v|^2 is irrational.
    """
    if v.is_zero():
        return Fraction(0)
    value = v.value
    if not isinstance(value, CyclotomicNumber):
        raise ValueError("Modulus profile needs a value in a cyclotomic field")
    return abs_square(value, rational=True)


def link_presentation(m: int) -> FinitePresentation:
    """<x, y_1..y_m | [x, y_i]>, the group of the exterior of the chain link."""
    ys = [f"y{i + 1}" for i in range(m)]
    x = GroupWord.generator("x")
    return FinitePresentation(("x",) + tuple(ys), tuple(commutator(x, GroupWord.generator(y)) for y in ys))


def link_exterior_complex(m: int, rho_x: Matrix, rho_y: Sequence[Matrix]) -> BasedComplex:
    """Twisted chain complex of the presentation 2-complex of the link exterior."""
    images = {"x": rho_x}
    inverses = {"x": rho_x.inverse()}
    for i, y in enumerate(rho_y):
        images[f"y{i + 1}"] = y
        inverses[f"y{i + 1}"] = y.inverse()
    one = _one_like(rho_x)
    rho = MatrixAssignment(images, inverses, rho_x.rows, one)
    return presentation_complex(link_presentation(m), rho)


def glued_seifert_torsion(params: SeifertParams, rho_x: Matrix, rho_y: Sequence[Matrix],
                          units: UnitGroupSpec) -> TorsionValue:
    """
    Seifert torsion by gluing: the link exterior complex, then the central filling
    (core x) and the m exceptional fillings (cores x^s_i y_i^r_i).
    """
    one = _one_like(rho_x)
    tau = TorsionValue(complex_torsion(link_exterior_complex(params.m, rho_x, rho_y)), units)
    tau = glue_torsion(tau, _det_minus_identity(rho_x, one), units)
    for (r, s), y in zip(params.companions, rho_y):
        tau = glue_torsion(tau, _det_minus_identity((rho_x ** s) * (y ** r), one), units)
    return tau


def iter_seifert_candidates(order: int, bound: int = 16, m: int = 3) -> Iterator[SeifertParams]:
    """
    Unordered m-tuples of fibres p/q with 2 <= p <= bound, |q| < p, gcd(p, q) = 1
    and first homology of the given order.
    """
    fibres = [(p, q) for p in range(2, bound + 1) for q in range(-p + 1, p) if q and gcd(p, q) == 1]
    for combo in combinations_with_replacement(fibres, m):
        total = 0
        for i, (_, q) in enumerate(combo):
            term = q
            for j, (p, _) in enumerate(combo):
                if j != i:
                    term *= p
            total += term
        if abs(total) == order:
            yield SeifertParams.from_fractions(combo)
