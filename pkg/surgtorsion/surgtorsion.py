import logging
import os
from typing import Dict, List, Optional, Sequence, Union

import psutil

from .exceptions import InputParseError
from .groups import PermGroup, trivial_group
from .hom_cache import HomCache
from .homs import HomClass
from .knots import MarkedPresentation
from .obstruction import ObstructionReport, obstruct
from .record_loader import RecordLoader
from .representations import Representation
from .seifert import (SeifertCharacter, SeifertParams, enumerate_SG, seifert_characters,
                      seifert_invariant_set)
from .storage import JsonScalarCodec, ScalarCodec
from .surgery import (ManifoldInvariantSet, SurgerySlope, filling_classes, knot_character, parse_slope,
                      surgery_invariant_set)
from .twisted import class_torsion, knot_classes, knot_invariant_sets, verify_class_torsion
from .units import TorsionValue

logger = logging.getLogger(__name__)

WORKERS_ENV = "SURGTORSION_WORKERS"

KnotSource = Union[str, MarkedPresentation]
GroupSource = Union[str, PermGroup]
RepSource = Union[str, Representation]


def default_workers() -> int:
    """Worker count from SURGTORSION_WORKERS, else the physical core count, clamped to [1, 8]."""
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, min(8, int(raw)))
        except ValueError:
            raise InputParseError(f"{WORKERS_ENV} must be an integer, got {raw!r}")
    cores = psutil.cpu_count(logical=False) or 1
    return max(1, min(8, cores))


class SurgeryTorsion:
    """
    Twisted torsion of knots, their Dehn surgeries and Seifert fibered spaces.

    Args:
        workers (int, optional): Processes for the obstruction search; sized from the machine by default.
        cache_dir (str, optional): Directory for pickled homomorphism enumerations.
        mirror (bool, optional): Reverse longitudes of loaded knots.
        storage (ScalarCodec, optional): Encoder for output records.
    """
    def __init__(
        self,
        workers: Optional[int] = None,
        cache_dir: Optional[str] = None,
        mirror: bool = False,
        storage: Optional[ScalarCodec] = None
    ):
        self.workers = max(1, workers) if workers else default_workers()
        self.storage = storage or JsonScalarCodec()
        self.loader = RecordLoader(mirror=mirror)
        self.cache = HomCache(os.path.abspath(cache_dir) if cache_dir else None)
        logger.debug("SurgeryTorsion with %d workers, cache %s", self.workers, cache_dir or "in memory")

    # -- inputs ------------------------------------------------------------
    def knot(self, source: KnotSource) -> MarkedPresentation:
        return source if isinstance(source, MarkedPresentation) else self.loader.load_knot(source)

    def group(self, source: Optional[GroupSource]) -> PermGroup:
        if source is None:
            return trivial_group()
        return source if isinstance(source, PermGroup) else self.loader.load_group(source)

    def representation(self, source: RepSource, group: PermGroup) -> Representation:
        return source if isinstance(source, Representation) else self.loader.load_representation(source, group)

    def params(self, source: Union[str, SeifertParams]) -> SeifertParams:
        return source if isinstance(source, SeifertParams) else self.loader.load_params(source)

    @staticmethod
    def slope(source: Union[str, SurgerySlope]) -> SurgerySlope:
        return source if isinstance(source, SurgerySlope) else parse_slope(source)

    # -- operations --------------------------------------------------------
    def torsion(self, knot: KnotSource, group: Optional[GroupSource] = None,
                rep: RepSource = "trivial-1", verify: bool = False) -> Union[TorsionValue, Dict]:
        """
        Knot torsion over Q(t): a single value for the trivial group, otherwise
        T_K^phi by peripheral class.
        """
        marked = self.knot(knot)
        g = self.group(group)
        phi = self.representation(rep, g)
        if g.order == 1:
            tau = class_torsion(marked, None, phi)
            if verify:
                verify_class_torsion(marked, None, phi, tau)
            return tau
        classes = knot_classes(marked, g, self.cache)
        return knot_invariant_sets(marked, g, phi, classes, verify)

    def homs(self, knot: KnotSource, group: GroupSource,
             slope: Optional[Union[str, SurgerySlope]] = None) -> List[HomClass]:
        """S(pi_1 E_K, G), or S(pi_1 K(p/q), G) when a slope is given."""
        marked = self.knot(knot)
        g = self.group(group)
        classes = knot_classes(marked, g, self.cache)
        if slope is not None:
            classes = filling_classes(marked, g, self.slope(slope), classes)
        return classes

    def surgery(self, knot: KnotSource, slope: Union[str, SurgerySlope], group: GroupSource,
                rep: RepSource, a: int = 1) -> ManifoldInvariantSet:
        marked = self.knot(knot)
        s = self.slope(slope)
        g = self.group(group)
        phi = self.representation(rep, g)
        beta = knot_character(marked, s.p, a)
        classes = knot_classes(marked, g, self.cache)
        return surgery_invariant_set(marked, s, g, phi, beta, classes)

    def seifert(self, params: Union[str, SeifertParams], group: GroupSource, rep: RepSource,
                character: Optional[Sequence[int]] = None,
                verify: bool = False) -> Dict[SeifertCharacter, ManifoldInvariantSet]:
        """
        T_{M, chi}^phi for every character of M, or for the one given by exponents (a, b_1, ..., b_m).

        Raises:
            InputParseError: If the exponents do not define a character of M.
        """
        p = self.params(params)
        g = self.group(group)
        phi = self.representation(rep, g)
        order = p.homology_order()
        characters = seifert_characters(p, order)
        if character is not None:
            characters = [c for c in characters if _matches(c, character, p.m)]
            if not characters:
                raise InputParseError(f"{list(character)} is not a character of M({p})")
        classes = enumerate_SG(p, g, self.cache)
        logger.info("M(%s): %d classes onto %s, %d characters", p, len(classes), g.name, len(characters))
        return {chi: seifert_invariant_set(p, g, phi, chi, classes, verify) for chi in characters}

    def obstruct(self, knot: KnotSource, slope: Union[str, SurgerySlope], groups: Sequence[GroupSource],
                 reps: Optional[Sequence[RepSource]] = None, bound: int = 16, m: int = 3,
                 candidates: Optional[Sequence[Union[str, SeifertParams]]] = None) -> ObstructionReport:
        marked = self.knot(knot)
        s = self.slope(slope)
        gs = [self.group(g) for g in groups]
        reps = reps or ["standard"] * len(gs)
        phis = [self.representation(r, g) for r, g in zip(reps, gs)]
        explicit = [self.params(c) for c in candidates] if candidates is not None else None
        return obstruct(marked, s, gs, phis, bound, m, self.workers, explicit, cache=self.cache)


def _matches(chi: SeifertCharacter, exponents: Sequence[int], m: int) -> bool:
    order = chi.order
    if len(exponents) == 1:
        return chi.a % order == exponents[0] % order
    if len(exponents) != m + 1:
        return False
    return (chi.a,) + chi.b == tuple(e % order for e in exponents)
