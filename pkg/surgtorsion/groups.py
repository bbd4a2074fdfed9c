"""
Finite permutation groups held as a sorted element list plus a Cayley table on indices.

Permutations are 0-indexed image tuples and are ordered lexicographically, so
element indices follow the element order and the identity is index 0.  The
product g*h applies h first, which makes the permutation-matrix action
multiplicative.  Methods ending in _idx take and return indices.
"""
import re
from functools import cached_property, reduce
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exceptions import InputParseError

Permutation = Tuple[int, ...]

_CYCLE = re.compile(r"\(([^()]*)\)")


def compose(g: Permutation, h: Permutation) -> Permutation:
    """g*h: apply h, then g."""
    return tuple(g[x] for x in h)


def invert(g: Permutation) -> Permutation:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def parse_permutation(text: str, degree: int) -> Permutation:
    """
    Parses 1-indexed cycle notation such as "(1 2 3)(4 5)", "(3,4,5)" or "()".

    Args:
        text (str): Product of disjoint or overlapping cycles, applied right to left.
        degree (int): Number of points.

    Returns:
        Permutation: 0-indexed image tuple.

    Raises:
        InputParseError: On malformed cycles or points outside 1..degree.
    """
    stripped = text.strip()
    if not stripped or _CYCLE.sub("", stripped).strip():
        raise InputParseError(f"Malformed permutation: {text!r}")
    result = tuple(range(degree))
    for body in reversed(_CYCLE.findall(stripped)):
        tokens = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            points = [int(tok) - 1 for tok in tokens]
        except ValueError:
            raise InputParseError(f"Non-integer point in cycle ({body})")
        if len(set(points)) != len(points) or any(p < 0 or p >= degree for p in points):
            raise InputParseError(f"Invalid cycle ({body}) for degree {degree}")
        cycle = list(range(degree))
        for a, b in zip(points, points[1:] + points[:1]):
            cycle[a] = b
        result = compose(tuple(cycle), result)
    return result


def format_permutation(g: Permutation) -> str:
    """1-indexed disjoint cycle notation; the identity is "()"."""
    seen = set()
    cycles = []
    for start in range(len(g)):
        if start in seen or g[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = g[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = g[x]
        cycles.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
    return "".join(cycles) or "()"


class PermGroup:
    """
    A finite group generated by permutations of {0, ..., degree-1}.

    Args:
        degree (int): Number of points.
        generators: Generating permutations (0-indexed image tuples).
        name (str): Display name.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation], name: str = "G"):
        self.degree = degree
        self.name = name
        self.generators: Tuple[Permutation, ...] = tuple(tuple(g) for g in generators)
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of degree {degree}")

    def __repr__(self) -> str:
        return f"PermGroup({self.name}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @cached_property
    def elements(self) -> Tuple[Permutation, ...]:
        identity = tuple(range(self.degree))
        seen = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = compose(g, x)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return tuple(sorted(seen))

    @cached_property
    def index(self) -> Dict[Permutation, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_idx(self) -> int:
        return 0

    @cached_property
    def generator_indices(self) -> Tuple[int, ...]:
        return tuple(self.index[g] for g in self.generators)

    @cached_property
    def cayley_table(self) -> Tuple[Tuple[int, ...], ...]:
        index = self.index
        return tuple(tuple(index[compose(g, h)] for h in self.elements) for g in self.elements)

    @cached_property
    def inverse_table(self) -> Tuple[int, ...]:
        return tuple(self.index[invert(g)] for g in self.elements)

    def mult_idx(self, a: int, b: int) -> int:
        return self.cayley_table[a][b]

    def inv_idx(self, a: int) -> int:
        return self.inverse_table[a]

    def conj_idx(self, c: int, x: int) -> int:
        """c x c^-1."""
        table = self.cayley_table
        return table[table[c][x]][self.inverse_table[c]]

    def power_idx(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv_idx(a), -k
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.cayley_table[result][base]
            base = self.cayley_table[base][base]
            k >>= 1
        return result

    def product_idx(self, items: Iterable[int]) -> int:
        return reduce(self.mult_idx, items, 0)

    def element_order_idx(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.cayley_table[x][a]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        return reduce(lambda m, n: m * n // gcd(m, n),
                      (self.element_order_idx(a) for a in range(self.order)), 1)

    def element(self, a: int) -> Permutation:
        return self.elements[a]

    def parse_idx(self, text: str) -> int:
        """
        Index of an element given in cycle notation.

        Raises:
            InputParseError: If the permutation is not in the group.
        """
        g = parse_permutation(text, self.degree)
        if g not in self.index:
            raise InputParseError(f"{text} is not an element of {self.name}")
        return self.index[g]

    def format_idx(self, a: int) -> str:
        return format_permutation(self.elements[a])

    @cached_property
    def conjugacy_classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Classes as sorted index tuples, ordered by their minimal element (the class representative)."""
        assigned = [False] * self.order
        classes = []
        for a in range(self.order):
            if assigned[a]:
                continue
            cls = sorted({self.conj_idx(c, a) for c in range(self.order)})
            for x in cls:
                assigned[x] = True
            classes.append(tuple(cls))
        return tuple(classes)

    @cached_property
    def class_of(self) -> Tuple[int, ...]:
        """Class number of each element."""
        out = [0] * self.order
        for k, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                out[x] = k
        return tuple(out)

    @cached_property
    def center(self) -> Tuple[int, ...]:
        return tuple(a for a in range(self.order)
                     if all(self.mult_idx(a, g) == self.mult_idx(g, a) for g in self.generator_indices))

    def closure_idx(self, items: Iterable[int]) -> FrozenSet[int]:
        gens = [x for x in set(items) if x != 0]
        seen = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.cayley_table[g][x]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    def generates_idx(self, items: Iterable[int]) -> bool:
        return len(self.closure_idx(items)) == self.order

    def orbit_representative_idx(self, items: Sequence[int]) -> Tuple[int, ...]:
        """Minimal tuple in the simultaneous-conjugation orbit."""
        items = tuple(items)
        best = items
        for c in range(1, self.order):
            candidate = tuple(self.conj_idx(c, x) for x in items)
            if candidate < best:
                best = candidate
        return best


def conjugacy_classes(g: PermGroup) -> List[List[Permutation]]:
    return [[g.element(x) for x in cls] for cls in g.conjugacy_classes]


def center(g: PermGroup) -> List[Permutation]:
    return [g.element(x) for x in g.center]


def generates(g: PermGroup, elems: Iterable[Permutation]) -> bool:
    """True iff the given elements generate all of g."""
    return g.generates_idx(g.index[tuple(e)] for e in elems)


def orbit_representative(items: Sequence[Permutation], g: PermGroup) -> Tuple[Permutation, ...]:
    rep = g.orbit_representative_idx([g.index[tuple(x)] for x in items])
    return tuple(g.element(x) for x in rep)


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a] = b
    return tuple(images)


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup(1, [], "S1")
    gens = [_cycle(range(n), n), _cycle([0, 1], n)]
    return PermGroup(n, gens, f"S{n}")


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return PermGroup(max(n, 1), [], f"A{n}")
    # an odd-length cycle together with (1 2 3)
    long_cycle = _cycle(range(n), n) if n % 2 else _cycle(range(1, n), n)
    return PermGroup(n, [long_cycle, _cycle([0, 1, 2], n)], f"A{n}")


def cyclic_group(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup(1, [], "C1")
    return PermGroup(n, [_cycle(range(n), n)], f"C{n}")


def trivial_group() -> PermGroup:
    return PermGroup(1, [], "trivial")


def builtin_group(name: str) -> Optional[PermGroup]:
    """A4, A5, S3, S5, C<n>, A<n>, S<n> or trivial; None for unknown names."""
    if name == "trivial":
        return trivial_group()
    match = re.fullmatch(r"([ASC])(\d+)", name)
    if not match:
        return None
    kind, n = match.group(1), int(match.group(2))
    if n < 1 or n > 12:
        return None
    return {"A": alternating_group, "S": symmetric_group, "C": cyclic_group}[kind](n)
