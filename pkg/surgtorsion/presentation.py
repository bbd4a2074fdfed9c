"""
Words in free groups and finite presentations.

Word syntax is whitespace separated letters, each a generator name with an
optional integer exponent: "x y1 x^-1 y1^-1".  "1" or an empty string is the
empty word.
"""
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .exceptions import InputParseError
from .smith import abelian_invariants

Letter = Tuple[str, int]

_LETTER = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class GroupWord:
    """A word as a sequence of (generator, +1 or -1) letters."""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for name, e in self.letters:
            if e not in (1, -1):
                raise ValueError(f"Letter exponents must be +1 or -1, got {name}^{e}")

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """
        Parses a word such as "x y1^-1 x^3".

        Raises:
            InputParseError: On a malformed letter.
        """
        letters: List[Letter] = []
        for token in text.replace("*", " ").split():
            if token == "1":
                continue
            match = _LETTER.match(token)
            if not match:
                raise InputParseError(f"Malformed letter {token!r} in word {text!r}")
            name = match.group(1)
            power = int(match.group(2)) if match.group(2) is not None else 1
            letters.extend([(name, 1 if power > 0 else -1)] * abs(power))
        return cls(tuple(letters))

    @classmethod
    def generator(cls, name: str, power: int = 1) -> "GroupWord":
        return cls(((name, 1 if power > 0 else -1),) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "GroupWord":
        base = self if k >= 0 else self.inverse()
        return GroupWord(base.letters * abs(k))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((name, -e) for name, e in reversed(self.letters)))

    def reduced(self) -> "GroupWord":
        """Free reduction."""
        stack: List[Letter] = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return GroupWord(tuple(stack))

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.letters if g == name)

    def generators(self) -> Tuple[str, ...]:
        seen: Dict[str, None] = {}
        for name, _ in self.letters:
            seen.setdefault(name)
        return tuple(seen)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            name, e = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == (name, e):
                j += 1
            power = (j - i) * e
            parts.append(name if power == 1 else f"{name}^{power}")
            i = j
        return " ".join(parts)


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """[a, b] = a b a^-1 b^-1."""
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class FinitePresentation:
    """
    Generators and relator words.

    Raises:
        ValueError: If a relator uses an undeclared generator or a generator repeats.
    """
    generators: Tuple[str, ...]
    relators: Tuple[GroupWord, ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("Duplicate generator names")
        known = set(self.generators)
        for r in self.relators:
            unknown = set(r.generators()) - known
            if unknown:
                raise ValueError(f"Relator {r} uses undeclared generators {sorted(unknown)}")

    @classmethod
    def parse(cls, text: str) -> "FinitePresentation":
        """
        Parses a presentation file: a "generators:" line followed by one relator per line.

        Raises:
            InputParseError: If the generators line is missing or a relator is malformed.
        """
        generators = None
        relators = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.lower().startswith("generators:"):
                generators = tuple(line.split(":", 1)[1].replace(",", " ").split())
                continue
            if line.lower().startswith("relators:"):
                line = line.split(":", 1)[1].strip()
                if not line:
                    continue
            relators.append(GroupWord.parse(line))
        if generators is None:
            raise InputParseError("Presentation has no 'generators:' line")
        try:
            return cls(generators, tuple(relators))
        except ValueError as e:
            raise InputParseError(f"Invalid presentation: {e}")

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def generator_position(self, name: str) -> int:
        return self.generators.index(name)

    def with_relators(self, extra: Iterable[GroupWord]) -> "FinitePresentation":
        return FinitePresentation(self.generators, self.relators + tuple(extra))

    def without_relator(self, k: int) -> "FinitePresentation":
        return FinitePresentation(self.generators, self.relators[:k] + self.relators[k + 1:])

    def abelianization_matrix(self) -> List[List[int]]:
        """Exponent-sum matrix, one row per relator, one column per generator."""
        return [[r.exponent_sum(g) for g in self.generators] for r in self.relators]

    def abelian_invariants(self) -> List[int]:
        return abelian_invariants(self.abelianization_matrix(), len(self.generators))

    def __str__(self) -> str:
        return f"< {', '.join(self.generators)} | {', '.join(str(r) for r in self.relators)} >"


def evaluate_word(word: GroupWord, images: Dict[str, int], group) -> int:
    """Image of a word under generator images given as element indices of a PermGroup."""
    result = 0
    for name, e in word.letters:
        x = images[name]
        result = group.mult_idx(result, x if e > 0 else group.inv_idx(x))
    return result
