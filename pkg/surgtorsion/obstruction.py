"""
Obstruction search: compares the surgery invariant sets of K(p/q) with the
invariant sets of the Seifert fibered spaces of the same first homology.

A homeomorphism K(p/q) -> M carries the surjections of H_1(K(p/q)) = Z/p onto
the surjections of H_1(M), so every knot character must meet a Seifert character
with the same invariant set and the other way round.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import HypothesisError
from .groups import PermGroup
from .knots import MarkedPresentation
from .representations import Representation
from .seifert import (SeifertCharacter, SeifertParams, enumerate_SG, iter_seifert_candidates, seifert_characters,
                      seifert_invariant_set)
from .surgery import SurgerySlope, filling_classes, knot_character, surgery_invariant_set
from .twisted import knot_classes, knot_invariant_sets
from .units import TorsionValue

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    INCOMPATIBLE = "INCOMPATIBLE"
    COMPATIBLE_SO_FAR = "COMPATIBLE-SO-FAR"


@dataclass(frozen=True)
class CharacterSet:
    """
    The invariant set under one character.  With violations the set is partial:
    the violating classes may add values that are not known.
    """
    label: str
    values: Tuple[TorsionValue, ...]
    violations: Tuple[str, ...] = ()

    @property
    def complete(self) -> bool:
        return not self.violations


def fits(seifert: CharacterSet, knot: CharacterSet) -> bool:
    """Whether the two sets can still be equal once their unknown values are known."""
    s, k = set(seifert.values), set(knot.values)
    if seifert.complete and knot.complete:
        return s == k
    if seifert.complete:
        return k <= s
    if knot.complete:
        return s <= k
    return True


@dataclass(frozen=True)
class KnotSide:
    """What K(p/q) contributes for one group: the class count and one set per character."""
    group: str
    count: int
    characters: Tuple[CharacterSet, ...]

    @property
    def values(self) -> Tuple[TorsionValue, ...]:
        """The set under the character sending the meridian to z."""
        return self.characters[0].values if self.characters else ()

    @property
    def violations(self) -> Tuple[str, ...]:
        return tuple(f"{c.label}: {v}" for c in self.characters for v in c.violations)


class Evidence(str, Enum):
    SEPARATED = "separated"
    MATCHED = "matched"
    UNRESOLVED = "unresolved"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class GroupEvidence:
    group: str
    knot_count: int
    seifert_count: int
    status: Evidence
    witness: str = ""
    notes: Tuple[str, ...] = ()

    @property
    def separated(self) -> bool:
        return self.status is Evidence.SEPARATED


@dataclass(frozen=True)
class CandidateVerdict:
    params: SeifertParams
    verdict: Verdict
    witness: str
    evidence: Tuple[GroupEvidence, ...] = ()

    def as_record(self) -> Dict:
        return {
            "candidate": str(self.params),
            "verdict": self.verdict.value,
            "witness": self.witness,
            "groups": {e.group: {"knot": e.knot_count, "seifert": e.seifert_count, "status": e.status.value}
                       for e in self.evidence},
        }


@dataclass
class ObstructionReport:
    knot: str
    slope: SurgerySlope
    knot_sides: Tuple[KnotSide, ...]
    candidates: List[CandidateVerdict] = field(default_factory=list)

    @property
    def obstructed(self) -> bool:
        """True when every candidate is incompatible."""
        return all(c.verdict is Verdict.INCOMPATIBLE for c in self.candidates)

    def as_records(self) -> List[Dict]:
        return [c.as_record() for c in self.candidates]

    def table(self) -> str:
        """Aligned text lines for the terminal."""
        if not self.candidates:
            return f"{self.knot}({self.slope}): no candidates"
        width = max(len(str(c.params)) for c in self.candidates)
        lines = [f"{self.knot}({self.slope})"]
        for c in self.candidates:
            lines.append(f"{str(c.params):<{width}}  {c.verdict.value:<17}  {c.witness}")
        return "\n".join(lines)


def _format_values(values: Sequence[TorsionValue]) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def _format_sets(sets: Sequence[CharacterSet]) -> str:
    return " | ".join(_format_values(c.values) for c in sets)


def _seifert_label(chi: SeifertCharacter) -> str:
    return f"x->z^{chi.a}, y->z^({','.join(str(b) for b in chi.b)})"


def knot_side(marked: MarkedPresentation, s: SurgerySlope, group: PermGroup, rep: Representation,
              cache=None) -> KnotSide:
    """
    The number of filling classes of K(p/q) onto the group and T_{K(p/q), beta}^phi
    for every surjection beta, i.e. the meridian sent to z^u with u a unit mod p.
    The first set is the one for u = 1.
    """
    classes = filling_classes(marked, group, s, knot_classes(marked, group, cache))
    sets = knot_invariant_sets(marked, group, rep, classes)
    characters = []
    for u in range(1, s.p + 1):
        if gcd(u, s.p) != 1:
            continue
        invariant = surgery_invariant_set(marked, s, group, rep, knot_character(marked, s.p, u), classes, sets)
        characters.append(CharacterSet(f"mu->z^{u}", invariant.values,
                                       tuple(invariant.violations) + tuple(invariant.warnings)))
    logger.info("%s(%s): %d classes onto %s, invariant set %s", marked.name, s, len(classes), group.name,
                _format_values(characters[0].values) if characters else "{}")
    return KnotSide(group.name, len(classes), tuple(characters))


def _compare_group(params: SeifertParams, side: KnotSide, group: PermGroup, rep: Representation,
                   characters: Sequence[SeifertCharacter], cache=None) -> GroupEvidence:
    classes = enumerate_SG(params, group, cache)
    if len(classes) != side.count:
        witness = f"#S(M, {group.name}) = {len(classes)} != {side.count}"
        return GroupEvidence(group.name, side.count, len(classes), Evidence.SEPARATED, witness)
    if not classes:
        # both sides empty: nothing to compare, and nothing gained
        return GroupEvidence(group.name, 0, 0, Evidence.VACUOUS, "", (f"{group.name}: no classes on either side",))
    seifert_sets = []
    notes = []
    for chi in characters:
        invariant = seifert_invariant_set(params, group, rep, chi, classes)
        label = _seifert_label(chi)
        seifert_sets.append(CharacterSet(label, invariant.values, tuple(invariant.violations)))
        notes.extend(f"{label}: {v}" for v in invariant.violations)
    notes.extend(side.violations)
    for k in side.characters:
        if not any(fits(t, k) for t in seifert_sets):
            witness = f"{group.name}: {_format_values(k.values)} not in {_format_sets(seifert_sets)}"
            return GroupEvidence(group.name, side.count, len(classes), Evidence.SEPARATED, witness, tuple(notes))
    for t in seifert_sets:
        if not any(fits(t, k) for k in side.characters):
            witness = (f"{group.name}: {t.label} gives {_format_values(t.values)}, "
                       f"not in {_format_sets(side.characters)}")
            return GroupEvidence(group.name, side.count, len(classes), Evidence.SEPARATED, witness, tuple(notes))
    if all(c.complete for c in seifert_sets) and all(c.complete for c in side.characters):
        return GroupEvidence(group.name, side.count, len(classes), Evidence.MATCHED, "", tuple(notes))
    return GroupEvidence(group.name, side.count, len(classes), Evidence.UNRESOLVED, "", tuple(notes))


def judge_candidate(params: SeifertParams, sides: Sequence[KnotSide], groups: Sequence[PermGroup],
                    reps: Sequence[Representation], cache=None) -> CandidateVerdict:
    """
    INCOMPATIBLE as soon as one group separates K(p/q) from M(params): by the number
    of classes, or by a character on either side whose invariant set fits no
    character on the other.  A first homology that is not cyclic separates too.
    """
    try:
        characters = seifert_characters(params)
    except HypothesisError as e:
        logger.debug("%s: incompatible (%s)", params, e)
        return CandidateVerdict(params, Verdict.INCOMPATIBLE, str(e))
    evidence = []
    for side, group, rep in zip(sides, groups, reps):
        try:
            item = _compare_group(params, side, group, rep, characters, cache)
        except HypothesisError as e:
            item = GroupEvidence(group.name, side.count, -1, Evidence.UNRESOLVED, "", (str(e),))
        evidence.append(item)
        if item.separated:
            logger.debug("%s: incompatible (%s)", params, item.witness)
            return CandidateVerdict(params, Verdict.INCOMPATIBLE, item.witness, tuple(evidence))
    notes = "; ".join(n for e in evidence for n in e.notes)
    logger.debug("%s: compatible so far %s", params, notes)
    return CandidateVerdict(params, Verdict.COMPATIBLE_SO_FAR, notes, tuple(evidence))


def obstruct(marked: MarkedPresentation, s: SurgerySlope, groups: Sequence[PermGroup],
             reps: Sequence[Representation], bound: int = 16, m: int = 3, workers: int = 1,
             candidates: Optional[Sequence[SeifertParams]] = None, cache=None) -> ObstructionReport:
    """
    Runs the comparison over every Seifert candidate within the bounds whose
    first homology has order p.

    Args:
        marked (MarkedPresentation): The knot.
        s (SurgerySlope): Slope p/q with p >= 1.
        groups: Target groups G.
        reps: One representation per group.
        bound (int): Upper bound on the p_i.
        m (int): Number of exceptional fibres.
        workers (int): Process count for the candidate loop.
        candidates (optional): Explicit candidates instead of the bounded search.
        cache (HomCache, optional): Cache for the knot group and S_G enumerations.

    Returns:
        ObstructionReport: One verdict per candidate in canonical order.

    Raises:
        HypothesisError: If p < 1 or groups and reps do not pair up.
    """
    if len(groups) != len(reps):
        raise HypothesisError("Need one representation per group")
    if s.p < 1:
        raise HypothesisError(f"Surgery slope {s} has infinite first homology")
    sides = tuple(knot_side(marked, s, g, r, cache) for g, r in zip(groups, reps))
    if candidates is None:
        candidates = list(iter_seifert_candidates(s.p, bound, m))
    else:
        candidates = [c for c in candidates if c.homology_order() == s.p]
    candidates = sorted(set(candidates), key=lambda c: c.fibres)
    logger.info("%s(%s): %d Seifert candidates", marked.name, s, len(candidates))
    judge = partial(judge_candidate, sides=sides, groups=tuple(groups), reps=tuple(reps), cache=cache)
    if workers > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            verdicts = list(executor.map(judge, candidates, chunksize=8))
    else:
        verdicts = [judge(c) for c in candidates]
    report = ObstructionReport(marked.name, s, sides, verdicts)
    logger.info("%s(%s): %d of %d candidates incompatible", marked.name, s,
                sum(v.verdict is Verdict.INCOMPATIBLE for v in verdicts), len(verdicts))
    return report
