"""
Twisted torsion invariants of knot exteriors, grouped by peripheral class.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .chain import complex_torsion
from .exceptions import InconsistencyError, NonAcyclicError
from .fox import presentation_complex, presentation_torsion, twisted_assignment
from .groups import PermGroup
from .homs import HomClass, SearchConstraint, enumerate_surjections
from .knots import MarkedPresentation
from .laurent import LaurentPoly, LaurentRational
from .representations import Representation
from .units import TorsionValue, UnitGroupSpec

logger = logging.getLogger(__name__)

PeripheralClass = Tuple[int, int]


@dataclass(frozen=True)
class KnotInvariantSet:
    """The set of torsion values of the classes with a given peripheral class [rho(lambda), rho(mu)]."""
    peripheral: PeripheralClass
    values: Tuple[TorsionValue, ...] = ()
    provenance: Tuple[HomClass, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, value: TorsionValue) -> bool:
        return value in self.values


def peripheral_class(hom: HomClass, marked: MarkedPresentation) -> PeripheralClass:
    """Orbit representative of (rho(lambda), rho(mu)) under simultaneous conjugation."""
    group = hom.group
    g = hom.evaluate(marked.longitude)
    h = hom.evaluate(marked.meridian_word)
    return group.orbit_representative_idx((g, h))


def knot_units(rep: Representation) -> UnitGroupSpec:
    """Units +-t^k det(phi(G)) for torsion over Q(t)."""
    return UnitGroupSpec.generated(rep.determinant_units(), order=1, sign=True, t_shift=True)


def knot_classes(marked: MarkedPresentation, group: PermGroup, cache=None) -> List[HomClass]:
    """S(pi_1 E_K, G) with peripheral images attached; ``cache`` is an optional HomCache."""
    constraint = SearchConstraint(conjugate_generators=marked.conjugate_generators or (marked.meridian,))
    if cache is not None:
        classes = cache.enumerate(marked.presentation, group, constraint)
    else:
        classes = enumerate_surjections(marked.presentation, group, constraint)
    return [h.with_peripheral(marked.peripheral_words()) for h in classes]


def class_torsion(marked: MarkedPresentation, hom: Optional[HomClass], rep: Representation,
                  units: Optional[UnitGroupSpec] = None, deleted: Optional[str] = None,
                  drop: Optional[int] = None) -> TorsionValue:
    """tau_{alpha (x) phi rho}(E_K) over Q(t), deleting the meridian column by default."""
    grading = marked.grading()
    rho = twisted_assignment(marked.generators, hom, rep, grading)
    units = units or knot_units(rep)
    return presentation_torsion(marked.presentation, rho, deleted or marked.meridian, units, drop)


def verify_class_torsion(marked: MarkedPresentation, hom: Optional[HomClass], rep: Representation,
                         tau: TorsionValue) -> None:
    """
    Recomputes a class torsion from the twisted chain complex of the presentation 2-complex.

    Raises:
        InconsistencyError: If the two computations disagree.
    """
    rho = twisted_assignment(marked.generators, hom, rep, marked.grading())
    try:
        raw = complex_torsion(presentation_complex(marked.presentation, rho))
        if isinstance(tau.value, LaurentRational) and not isinstance(raw, LaurentRational):
            raw = LaurentRational(LaurentPoly.constant(raw))
        other = TorsionValue.of(raw, tau.units)
    except NonAcyclicError:
        other = TorsionValue.zero(tau.units)
    if other != tau:
        raise InconsistencyError(f"{marked.name}: Fox torsion {tau} differs from chain complex torsion {other}")


def knot_invariant_sets(marked: MarkedPresentation, group: PermGroup, rep: Representation,
                        classes: Optional[List[HomClass]] = None,
                        verify: bool = False) -> Dict[PeripheralClass, KnotInvariantSet]:
    """
    T_K^phi([g, h]) for every peripheral class met by a surjection.

    Args:
        marked (MarkedPresentation): Knot group with peripheral system.
        group (PermGroup): Target group G.
        rep (Representation): phi on G.
        classes (List[HomClass], optional): Precomputed S(pi_1 E_K, G).
        verify (bool): Cross-check every class against the chain complex torsion.

    Returns:
        Dict mapping each peripheral class to its invariant set; classes not present give the empty set.
    """
    if classes is None:
        classes = knot_classes(marked, group)
    units = knot_units(rep)
    grouped: Dict[PeripheralClass, List[Tuple[TorsionValue, HomClass]]] = {}
    for hom in classes:
        key = peripheral_class(hom, marked)
        tau = class_torsion(marked, hom, rep, units)
        if verify:
            verify_class_torsion(marked, hom, rep, tau)
        logger.debug("%s: class %s has peripheral class (%s, %s) and torsion %s", marked.name, hom.describe(),
                     group.format_idx(key[0]), group.format_idx(key[1]), tau)
        grouped.setdefault(key, []).append((tau, hom))
    result = {}
    for key in sorted(grouped):
        values: Dict[TorsionValue, None] = {}
        for tau, _ in grouped[key]:
            values.setdefault(tau)
        ordered = tuple(sorted(values, key=lambda v: v.sort_key()))
        result[key] = KnotInvariantSet(key, ordered, tuple(h for _, h in grouped[key]))
    logger.info("%s: %d classes onto %s in %d peripheral classes", marked.name, len(classes), group.name, len(result))
    return result


def knot_invariant_set(marked: MarkedPresentation, group: PermGroup, rep: Representation,
                       peripheral: PeripheralClass,
                       classes: Optional[List[HomClass]] = None) -> KnotInvariantSet:
    """T_K^phi([g, h]) for one peripheral class (the empty set if no class realises it)."""
    key = group.orbit_representative_idx(peripheral)
    if classes is None:
        classes = knot_classes(marked, group)
    matching = [h for h in classes if peripheral_class(h, marked) == key]
    sets = knot_invariant_sets(marked, group, rep, matching)
    return sets.get(key, KnotInvariantSet(key))
