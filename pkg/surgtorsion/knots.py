"""
Knot diagrams and their Wirtinger presentations with a peripheral system.

PD codes follow the usual convention: X[i, j, k, l] lists the four edge labels
counterclockwise starting from the incoming under-strand i, so the under-strand
runs i -> k.  Edge labels 1..2n increase along the orientation.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import HypothesisError, InputParseError
from .presentation import FinitePresentation, GroupWord
from .smith import integer_kernel

logger = logging.getLogger(__name__)

Crossing = Tuple[int, int, int, int]

_CROSSING = re.compile(r"X\s*[\[(]([^\])]*)[\])]")


@dataclass(frozen=True)
class PDCode:
    """A validated single-component planar diagram code."""
    crossings: Tuple[Crossing, ...]
    signs: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def __str__(self) -> str:
        return " ".join(f"X({a},{b},{c},{d})" for a, b, c, d in self.crossings)


def _successor(label: int, edges: int) -> int:
    return label % edges + 1


def _face_count(crossings: Sequence[Crossing]) -> int:
    """Faces of the 4-valent map, turning counterclockwise at each crossing."""
    ends: Dict[int, List[Tuple[int, int]]] = {}
    for c, labels in enumerate(crossings):
        for p, label in enumerate(labels):
            ends.setdefault(label, []).append((c, p))
    seen = set()
    faces = 0
    for c in range(len(crossings)):
        for p in range(4):
            if (c, p) in seen:
                continue
            faces += 1
            while (c, p) not in seen:
                seen.add((c, p))
                first, second = ends[crossings[c][p]]
                c, p = second if first == (c, p) else first
                p = (p + 1) % 4
    return faces


def _validate(crossings: Sequence[Crossing]) -> PDCode:
    n = len(crossings)
    if n == 0:
        return PDCode((), ())
    edges = 2 * n
    counts: Dict[int, int] = {}
    for c in crossings:
        for label in c:
            counts[label] = counts.get(label, 0) + 1
    bad = sorted(label for label, k in counts.items() if k != 2)
    if bad:
        raise InputParseError(f"PD labels must occur exactly twice; offending labels {bad}")
    if set(counts) != set(range(1, edges + 1)):
        raise InputParseError(f"PD labels must be 1..{edges}")
    parent = list(range(edges + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, k, l in crossings:
        parent[find(i)] = find(k)
        parent[find(j)] = find(l)
    if len({find(x) for x in range(1, edges + 1)}) != 1:
        raise InputParseError("PD code describes a link with more than one component")
    signs = []
    for i, j, k, l in crossings:
        if k != _successor(i, edges):
            raise InputParseError(f"Inconsistent orientation at X({i},{j},{k},{l}): under-strand must run i -> i+1")
        if l == _successor(j, edges):
            signs.append(-1)
        elif j == _successor(l, edges):
            signs.append(1)
        else:
            raise InputParseError(f"Inconsistent orientation at X({i},{j},{k},{l}): over-strand labels not adjacent")
    faces = _face_count(crossings)
    if faces != n + 2:
        raise InputParseError(f"PD code is not planar: {faces} faces for {n} crossings, expected {n + 2}")
    return PDCode(tuple(tuple(c) for c in crossings), tuple(signs))


def parse_pd(text) -> PDCode:
    """
    Parses a PD code given as text ("X(1,4,2,5) X(3,6,4,1) ...", also "X[...]") or as a list of 4-tuples.
    An empty code is the crossingless diagram of the unknot.

    Raises:
        InputParseError: On malformed syntax, labels not occurring exactly twice,
            inconsistent orientation, more than one component or a non-planar code.
    """
    if isinstance(text, str):
        bodies = _CROSSING.findall(text)
        if _CROSSING.sub("", text).strip(" ,;[]\n\t"):
            raise InputParseError(f"Malformed PD code: {text!r}")
        crossings = []
        for body in bodies:
            try:
                labels = tuple(int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok)
            except ValueError:
                raise InputParseError(f"Non-integer label in X({body})")
            if len(labels) != 4:
                raise InputParseError(f"Crossing X({body}) does not have four labels")
            crossings.append(labels)
    else:
        crossings = []
        for c in text:
            if len(c) != 4:
                raise InputParseError(f"Crossing {c} does not have four labels")
            try:
                crossings.append(tuple(int(x) for x in c))
            except (TypeError, ValueError):
                raise InputParseError(f"Non-integer label in crossing {c}")
    return _validate(crossings)


@dataclass(frozen=True)
class MarkedPresentation:
    """
    A knot group presentation with a meridian generator and a longitude word.

    ``conjugate_generators`` lists generators known to be conjugate to the meridian;
    ``orientation`` is -1 when the longitude has been reversed (mirror convention).
    """
    presentation: FinitePresentation
    meridian: str
    longitude: GroupWord
    orientation: int = 1
    name: str = "knot"
    conjugate_generators: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.meridian not in self.presentation.generators:
            raise ValueError(f"Meridian {self.meridian} is not a generator")
        unknown = set(self.longitude.generators()) - set(self.presentation.generators)
        if unknown:
            raise ValueError(f"Longitude uses undeclared generators {sorted(unknown)}")

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.presentation.generators

    @property
    def relators(self) -> Tuple[GroupWord, ...]:
        return self.presentation.relators

    @property
    def meridian_word(self) -> GroupWord:
        return GroupWord.generator(self.meridian)

    def peripheral_words(self) -> Dict[str, GroupWord]:
        return {"longitude": self.longitude, "meridian": self.meridian_word}

    def grading(self) -> Dict[str, int]:
        """
        The abelianization alpha: generators -> Z with alpha(meridian) = 1.

        Raises:
            HypothesisError: If H_1 has free rank other than 1 or the meridian does not generate it.
        """
        kernel = integer_kernel(self.presentation.abelianization_matrix(), len(self.generators))
        if len(kernel) != 1:
            raise HypothesisError(f"{self.name}: H_1 has free rank {len(kernel)}, expected 1")
        v = kernel[0]
        m = v[self.generators.index(self.meridian)]
        if m not in (1, -1):
            raise HypothesisError(f"{self.name}: meridian maps to {m} times a generator of H_1/torsion")
        return {g: x * m for g, x in zip(self.generators, v)}

    def check_longitude(self) -> None:
        """
        Raises:
            HypothesisError: If the longitude is not null-homologous.
        """
        alpha = self.grading()
        total = sum(alpha[g] * e for g, e in self.longitude.letters)
        if total:
            raise HypothesisError(f"{self.name}: longitude {self.longitude} has abelian degree {total}")

    def mirrored(self) -> "MarkedPresentation":
        return MarkedPresentation(self.presentation, self.meridian, self.longitude.inverse(),
                                  -self.orientation, self.name, self.conjugate_generators)


def wirtinger(d: PDCode, name: str = "knot", mirror: bool = False) -> MarkedPresentation:
    """
    Builds the Wirtinger presentation of a diagram.

    One generator per arc, named x1, x2, ... in order of the smallest edge label on
    the arc, so the meridian x1 is the arc through edge 1.  At a crossing with over arc
    o and sign e the relator is x_o^e x_in x_o^-e x_out^-1.  The longitude is the product
    of the over-arc letters met while passing under crossings from edge 1, corrected by
    the meridian to the power -writhe.

    Args:
        d (PDCode): Validated diagram.
        name (str): Knot name used in messages.
        mirror (bool): Reverse the longitude.

    Returns:
        MarkedPresentation: The marked presentation, with the longitude checked to be null-homologous.
    """
    if d.size == 0:
        marked = MarkedPresentation(FinitePresentation(("x1",), ()), "x1", GroupWord(), 1, name, ("x1",))
        return marked.mirrored() if mirror else marked
    edges = 2 * d.size
    parent = list(range(edges + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, j, _, l in d.crossings:
        a, b = find(j), find(l)
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(x) for x in range(1, edges + 1)})
    arc_name = {root: f"x{k + 1}" for k, root in enumerate(roots)}

    def arc(label: int) -> str:
        return arc_name[find(label)]

    relators = []
    under_at: Dict[int, GroupWord] = {}
    for (i, j, k, l), sign in zip(d.crossings, d.signs):
        over = GroupWord.generator(arc(j), sign)
        relators.append(over * GroupWord.generator(arc(i)) * over.inverse() * GroupWord.generator(arc(k), -1))
        under_at[i] = over
    word = GroupWord()
    for label in range(1, edges + 1):
        if label in under_at:
            word = under_at[label] * word
    meridian = arc(1)
    longitude = (GroupWord.generator(meridian, -d.writhe) * word).reduced()
    generators = tuple(arc_name[r] for r in roots)
    marked = MarkedPresentation(FinitePresentation(generators, tuple(relators)), meridian, longitude,
                                1, name, generators)
    if mirror:
        marked = marked.mirrored()
    marked.check_longitude()
    logger.debug("Wirtinger presentation of %s: %d generators, writhe %d", name, len(generators), d.writhe)
    return marked


def unknot() -> MarkedPresentation:
    """The unknot group <a | > with trivial longitude."""
    return MarkedPresentation(FinitePresentation(("a",), ()), "a", GroupWord(), 1, "unknot", ("a",))
