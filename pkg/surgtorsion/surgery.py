"""
Dehn surgery on knots: slopes, characters, gluing, evaluation at roots of unity
and the surgery formula for the twisted torsion of K(p/q).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .cyclotomic import CyclotomicNumber
from .exceptions import HypothesisError, InputParseError, NonAcyclicError
from .groups import PermGroup
from .homs import HomClass
from .knots import MarkedPresentation
from .laurent import LaurentRational
from .matrix import Matrix, determinant
from .presentation import FinitePresentation, GroupWord
from .representations import Representation
from .twisted import knot_classes, knot_invariant_sets, peripheral_class
from .units import TorsionValue, UnitGroupSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurgerySlope:
    """p/q with companions r, s such that ps - qr = 1."""
    p: int
    q: int
    r: int
    s: int

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def shifted(self, k: int) -> "SurgerySlope":
        """The companion choice (r + kp, s + kq)."""
        return SurgerySlope(self.p, self.q, self.r + k * self.p, self.s + k * self.q)


def slope(p: int, q: int) -> SurgerySlope:
    """
    Normalises p/q to p >= 0 and picks the companion with 0 <= r < p (r = -q when p = 0).

    Raises:
        InputParseError: If p and q are not coprime.
    """
    if gcd(p, q) != 1:
        raise InputParseError(f"Slope {p}/{q} is not irreducible")
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    if p == 0:
        return SurgerySlope(0, q, -q, 0)
    r = (-pow(q, -1, p)) % p if p > 1 else 0
    s = (1 + q * r) // p
    return SurgerySlope(p, q, r, s)


def parse_slope(text: str) -> SurgerySlope:
    """
    Parses "p/q" or "p".

    Raises:
        InputParseError: On malformed or reducible slopes.
    """
    try:
        value = text.strip().split("/")
        if len(value) == 1:
            p, q = int(value[0]), 1
        elif len(value) == 2:
            p, q = int(value[0]), int(value[1])
        else:
            raise ValueError(text)
    except ValueError:
        raise InputParseError(f"Malformed slope {text!r}")
    return slope(p, q)


@dataclass(frozen=True)
class CharacterBeta:
    """A surjection onto <z_order> given by exponents of the generators."""
    order: int
    exponents: Tuple[Tuple[str, int], ...]

    def exponent(self, name: str) -> int:
        for key, value in self.exponents:
            if key == name:
                return value
        raise KeyError(name)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.exponents)


def knot_character(marked: MarkedPresentation, p: int, a: int = 1) -> CharacterBeta:
    """
    The character of K(p/q) sending the meridian to z^a.

    Raises:
        HypothesisError: If a is not a unit modulo p.
    """
    if p < 1 or gcd(a, p) != 1:
        raise HypothesisError(f"z^{a} does not generate the group of {p}-th roots of unity")
    grading = marked.grading()
    return CharacterBeta(p, tuple((g, (a * grading[g]) % p) for g in marked.generators))


def root_units(order: int, rep: Representation) -> UnitGroupSpec:
    """Units +-z^j det(phi(G)) in Q(z_order)."""
    generators = [CyclotomicNumber.zeta(order, 1)] + rep.determinant_units(order)
    return UnitGroupSpec.generated(generators, order=order, sign=True, t_shift=False)


def glue_torsion(tau_exterior: TorsionValue, core_det, units: Optional[UnitGroupSpec] = None) -> TorsionValue:
    """
    Solves tau(E) = det(rho(core) - I) tau(M) for the filled manifold M.

    Raises:
        NonAcyclicError: If the core determinant vanishes (the filling is not acyclic).
    """
    if not core_det:
        raise NonAcyclicError("det(rho(core) - I) vanishes; the filling is not acyclic")
    units = units or tau_exterior.units
    if tau_exterior.is_zero():
        return TorsionValue.zero(units)
    return TorsionValue.of(tau_exterior.value / core_det, units)


def evaluate_at_root(tau: TorsionValue, order: int, power: int = 1,
                     units: Optional[UnitGroupSpec] = None) -> TorsionValue:
    """
    Substitutes t = z^power in a torsion value over Q(t).

    Raises:
        HypothesisError: If the denominator vanishes at the root.
    """
    units = units or UnitGroupSpec.generated([CyclotomicNumber.zeta(order, 1)], order=order)
    if tau.is_zero():
        return TorsionValue.zero(units)
    value = tau.value
    if not isinstance(value, LaurentRational):
        return TorsionValue.of(value, units)
    z = CyclotomicNumber.zeta(order, power)
    try:
        evaluated = value.evaluate(z)
    except ZeroDivisionError:
        raise HypothesisError(f"Evaluation of {value} at z_{order}^{power} undefined: the value has a pole there")
    if not isinstance(evaluated, CyclotomicNumber):
        evaluated = CyclotomicNumber.rational(order, evaluated)
    return TorsionValue.of(evaluated, units)


def surgered_presentation(marked: MarkedPresentation, s: SurgerySlope) -> FinitePresentation:
    """The knot group with the filling relator mu^p lambda^q added."""
    relator = (GroupWord.generator(marked.meridian, s.p) * marked.longitude ** s.q).reduced()
    return marked.presentation.with_relators([relator])


def core_matrix(rep: Representation, group: PermGroup, g: int, h: int, s: SurgerySlope,
                order: int, power: int) -> Matrix:
    """z^(power r) phi(g^s h^r), the image of the core of the filling solid torus."""
    element = group.mult_idx(group.power_idx(g, s.s), group.power_idx(h, s.r))
    z = CyclotomicNumber.zeta(order, power * s.r)
    return rep.matrix_idx(element).map(lambda x: z * x)


def _det_minus_identity(m: Matrix, order: int):
    return determinant(m - Matrix.identity(m.rows, CyclotomicNumber.rational(order, 1)))


@dataclass
class ManifoldInvariantSet:
    """Canonical torsion values of a closed manifold with their provenance."""
    values: Tuple[TorsionValue, ...] = ()
    provenance: Dict[TorsionValue, List[str]] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def add(self, value: TorsionValue, source: str) -> None:
        if value not in self.provenance:
            self.provenance[value] = []
            self.values = tuple(sorted(self.provenance, key=lambda v: v.sort_key()))
        self.provenance[value].append(source)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, value: TorsionValue) -> bool:
        return value in self.provenance

    def same_values(self, other: "ManifoldInvariantSet") -> bool:
        return set(self.values) == set(other.values)


def filling_classes(marked: MarkedPresentation, group: PermGroup, s: SurgerySlope,
                    classes: Optional[List[HomClass]] = None) -> List[HomClass]:
    """Classes of S(pi_1 E_K, G) whose peripheral images satisfy g^q h^p = 1."""
    if classes is None:
        classes = knot_classes(marked, group)
    out = []
    for hom in classes:
        g, h = peripheral_class(hom, marked)
        if group.mult_idx(group.power_idx(g, s.q), group.power_idx(h, s.p)) == 0:
            out.append(hom)
    return out


def surgery_invariant_set(marked: MarkedPresentation, s: SurgerySlope, group: PermGroup, rep: Representation,
                          beta: Optional[CharacterBeta] = None,
                          classes: Optional[List[HomClass]] = None,
                          knot_sets: Optional[Dict] = None) -> ManifoldInvariantSet:
    """
    T_{K(p/q), beta}^phi by the surgery formula.

    For every peripheral class [g, h] with g^q h^p = 1 and a nonempty knot
    invariant set, each knot value is evaluated at t = beta(mu) and divided by
    det(z^(a r) phi(g^s h^r) - I).  Classes violating a hypothesis are reported
    in ``violations`` and skipped; zero knot values are skipped with a warning.
    ``knot_sets`` takes knot invariant sets already computed for the filling classes,
    so several characters can share one torsion computation.

    Raises:
        HypothesisError: If p < 1 (no character onto a nontrivial cyclic group).
    """
    if s.p < 1:
        raise HypothesisError(f"Surgery slope {s} has infinite first homology")
    beta = beta or knot_character(marked, s.p)
    order = beta.order
    power = beta.exponent(marked.meridian)
    units = root_units(order, rep)
    result = ManifoldInvariantSet()
    contributing = filling_classes(marked, group, s, classes)
    sets = knot_sets if knot_sets is not None else knot_invariant_sets(marked, group, rep, contributing)
    z = CyclotomicNumber.zeta(order, power)
    for (g, h), knot_set in sets.items():
        label = f"[{group.format_idx(g)}, {group.format_idx(h)}]"
        meridian_image = rep.matrix_idx(h).map(lambda x: z * x)
        if not _det_minus_identity(meridian_image, order):
            result.violations.append(f"{label}: det(z phi(h) - I) = 0")
            continue
        core_det = _det_minus_identity(core_matrix(rep, group, g, h, s, order, power), order)
        if not core_det:
            result.violations.append(f"{label}: det(z^r phi(g^s h^r) - I) = 0")
            continue
        for tau in knot_set.values:
            if tau.is_zero():
                result.warnings.append(f"{label}: knot torsion vanishes; class skipped")
                continue
            try:
                evaluated = evaluate_at_root(tau, order, power, units)
            except HypothesisError as e:
                result.violations.append(f"{label}: {e}")
                continue
            value = glue_torsion(evaluated, core_det, units)
            logger.debug("%s(%s): class %s gives %s", marked.name, s, label, value)
            result.add(value, label)
    for message in result.violations:
        logger.warning("%s(%s): %s", marked.name, s, message)
    return result
