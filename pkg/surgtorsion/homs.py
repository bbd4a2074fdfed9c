"""
Enumeration of surjective homomorphisms from a finitely presented group onto a
finite permutation group, one representative per conjugation orbit.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .groups import PermGroup
from .presentation import FinitePresentation, GroupWord, evaluate_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConstraint:
    """
    Restrictions on generator images.

    Attributes:
        conjugate_generators: Generators known to be pairwise conjugate in the source
            group (e.g. Wirtinger generators).  The first is fixed to a class
            representative and the others are restricted to the same class.
        allowed: Per-generator sets of admissible element indices.
    """
    conjugate_generators: Tuple[str, ...] = ()
    allowed: Tuple[Tuple[str, FrozenSet[int]], ...] = ()

    def allowed_for(self, name: str) -> Optional[FrozenSet[int]]:
        for key, values in self.allowed:
            if key == name:
                return values
        return None


@dataclass(frozen=True)
class HomClass:
    """A conjugacy-class representative of a homomorphism, given by generator images (element indices)."""
    group: PermGroup = field(compare=False, hash=False, repr=False)
    generators: Tuple[str, ...]
    images: Tuple[int, ...]
    surjective: bool = True
    peripheral: Tuple[Tuple[str, int], ...] = ()

    def assignment(self) -> Dict[str, int]:
        return dict(zip(self.generators, self.images))

    def image(self, name: str) -> int:
        return self.images[self.generators.index(name)]

    def evaluate(self, word: GroupWord) -> int:
        return evaluate_word(word, self.assignment(), self.group)

    def peripheral_image(self, name: str) -> int:
        for key, value in self.peripheral:
            if key == name:
                return value
        raise KeyError(name)

    def with_peripheral(self, words: Dict[str, GroupWord]) -> "HomClass":
        peripheral = tuple((name, self.evaluate(w)) for name, w in words.items())
        return HomClass(self.group, self.generators, self.images, self.surjective, peripheral)

    def describe(self) -> Dict[str, str]:
        return {name: self.group.format_idx(x) for name, x in zip(self.generators, self.images)}


class _Search:
    """Depth-first search over generator images with relator propagation."""

    def __init__(self, presentation: FinitePresentation, group: PermGroup):
        self.group = group
        self.names = presentation.generators
        position = {g: i for i, g in enumerate(self.names)}
        self.relators = [[(position[g], e) for g, e in r.letters] for r in presentation.relators]
        self.occurs: List[List[int]] = [[] for _ in self.names]
        for k, rel in enumerate(self.relators):
            for g in {g for g, _ in rel}:
                self.occurs[g].append(k)
        self.found: Dict[Tuple[int, ...], None] = {}
        self.nodes = 0

    def _value(self, assign: List[Optional[int]], letters: Sequence[Tuple[int, int]]) -> int:
        group = self.group
        result = 0
        for g, e in letters:
            x = assign[g]
            result = group.mult_idx(result, x if e > 0 else group.inv_idx(x))
        return result

    def _check(self, assign: List[Optional[int]], k: int, domains: List[Optional[FrozenSet[int]]],
               queue: List[Tuple[int, int]]) -> bool:
        rel = self.relators[k]
        missing = [i for i, (g, _) in enumerate(rel) if assign[g] is None]
        if not missing:
            return self._value(assign, rel) == 0
        if len(missing) != 1:
            return True
        i = missing[0]
        g, e = rel[i]
        group = self.group
        # u g^e v = 1  =>  g^e = u^-1 v^-1
        u = self._value(assign, rel[:i])
        v = self._value(assign, rel[i + 1:])
        target = group.mult_idx(group.inv_idx(u), group.inv_idx(v))
        value = target if e > 0 else group.inv_idx(target)
        if domains[g] is not None and value not in domains[g]:
            return False
        queue.append((g, value))
        return True

    def _assign(self, assign: List[Optional[int]], g: int, value: int,
                domains: List[Optional[FrozenSet[int]]]) -> Optional[List[Optional[int]]]:
        assign = list(assign)
        queue = [(g, value)]
        while queue:
            g, value = queue.pop()
            if assign[g] is not None:
                if assign[g] != value:
                    return None
                continue
            assign[g] = value
            for k in self.occurs[g]:
                if not self._check(assign, k, domains, queue):
                    return None
        return assign

    def run(self, assign: List[Optional[int]], domains: List[Optional[FrozenSet[int]]]) -> None:
        self.nodes += 1
        free = [g for g in range(len(self.names)) if assign[g] is None]
        if not free:
            if self.group.generates_idx(assign):
                self.found.setdefault(self.group.orbit_representative_idx(assign))
            return
        g = min(free, key=lambda i: (len(domains[i]) if domains[i] is not None else self.group.order, i))
        choices = sorted(domains[g]) if domains[g] is not None else range(self.group.order)
        for value in choices:
            nxt = self._assign(assign, g, value, domains)
            if nxt is not None:
                self.run(nxt, domains)


def enumerate_surjections(presentation: FinitePresentation, group: PermGroup,
                          constraint: Optional[SearchConstraint] = None) -> List[HomClass]:
    """
    Lists the conjugacy classes of surjections onto a finite group.

    Args:
        presentation (FinitePresentation): Source group.
        group (PermGroup): Target group.
        constraint (SearchConstraint, optional): Generator image restrictions.

    Returns:
        List[HomClass]: One orbit-minimal representative per class, sorted by images.
    """
    constraint = constraint or SearchConstraint()
    search = _Search(presentation, group)
    names = presentation.generators
    base_domains: List[Optional[FrozenSet[int]]] = [constraint.allowed_for(n) for n in names]
    conjugate = [names.index(n) for n in constraint.conjugate_generators if n in names]
    start: List[Optional[int]] = [None] * len(names)
    if conjugate:
        first = conjugate[0]
        for cls in group.conjugacy_classes:
            members = frozenset(cls)
            domains = list(base_domains)
            for g in conjugate:
                domains[g] = members if domains[g] is None else domains[g] & members
            rep = cls[0]
            if rep not in domains[first]:
                # the gauge fix needs the representative itself; fall back to every member
                for value in sorted(domains[first]):
                    assign = search._assign(start, first, value, domains)
                    if assign is not None:
                        search.run(assign, domains)
                continue
            assign = search._assign(start, first, rep, domains)
            if assign is not None:
                search.run(assign, domains)
    elif all(d is None or d for d in base_domains):
        search.run(start, base_domains)
    result = [HomClass(group, names, images) for images in sorted(search.found)]
    logger.debug("Enumerated %d classes onto %s (%d search nodes)", len(result), group.name, search.nodes)
    return result


def count_homomorphism_classes(presentation: FinitePresentation, group: PermGroup,
                               constraint: Optional[SearchConstraint] = None) -> int:
    return len(enumerate_surjections(presentation, group, constraint))


def filter_classes(classes: Iterable[HomClass], words: Sequence[GroupWord]) -> List[HomClass]:
    """Keeps the classes killing every given word."""
    return [h for h in classes if all(h.evaluate(w) == 0 for w in words)]
