"""
Torsion values as unit classes and their canonical forms.

A torsion value is only defined up to a unit: a sign, a power of t for the
abelianized variable, and the roots of unity coming from det of the
representation.  Canonical forms make these classes comparable: the value is
shifted to lowest t-exponent 0, the finite residual orbit is enumerated and
the smallest member under a fixed total order is kept.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .cyclotomic import CyclotomicNumber
from .laurent import LaurentPoly, LaurentRational

TorsionScalar = Union[int, CyclotomicNumber, LaurentRational]

_ORBIT_LIMIT = 10000


@dataclass(frozen=True)
class UnitGroupSpec:
    """The unit group a torsion value is taken modulo."""
    sign: bool = True
    t_shift: bool = False
    root_units: Tuple[CyclotomicNumber, ...] = field(default_factory=lambda: (CyclotomicNumber.rational(1, 1),))

    @classmethod
    def generated(cls, generators: Iterable[CyclotomicNumber], order: int = 1, sign: bool = True,
                  t_shift: bool = False) -> "UnitGroupSpec":
        """
        Closes a finite set of roots of unity under multiplication.

        Args:
            generators: Roots of unity (e.g. z and the determinants of a representation).
            order (int): Cyclotomic order used for the identity element.
            sign (bool): Whether -1 is a unit.
            t_shift (bool): Whether powers of t are units.

        Raises:
            ValueError: If the generated group is not finite within the orbit limit.
        """
        one = CyclotomicNumber.rational(order, 1)
        gens = [g if isinstance(g, CyclotomicNumber) else CyclotomicNumber.rational(order, g) for g in generators]
        group = [one]
        seen = {one}
        frontier = [one]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        group.append(y)
                        new.append(y)
                        if len(group) > _ORBIT_LIMIT:
                            raise ValueError("Unit generators do not generate a finite group")
            frontier = new
        group.sort(key=lambda u: u.sort_key())
        return cls(sign=sign, t_shift=t_shift, root_units=tuple(group))

    def multipliers(self) -> Tuple[CyclotomicNumber, ...]:
        units = list(self.root_units)
        if self.sign:
            units += [-u for u in self.root_units]
        unique = []
        for u in units:
            if u not in unique:
                unique.append(u)
        return tuple(unique)


def _scale_poly(p: LaurentPoly, u: CyclotomicNumber) -> LaurentPoly:
    if u.is_rational():
        return p * u.as_rational()
    return p * u


class TorsionValue:
    """A torsion value together with the unit group it is defined modulo."""

    __slots__ = ("value", "units", "canonical")

    def __init__(self, value: TorsionScalar, units: UnitGroupSpec, canonical: bool = False):
        if isinstance(value, (int, Fraction)) and value != 0:
            value = CyclotomicNumber.rational(1, value)
        if isinstance(value, LaurentPoly):
            value = LaurentRational(value)
        if not value:
            value = 0
        self.value = value
        self.units = units
        self.canonical = canonical

    @classmethod
    def zero(cls, units: UnitGroupSpec) -> "TorsionValue":
        return cls(0, units, canonical=True)

    @classmethod
    def of(cls, value: TorsionScalar, units: UnitGroupSpec) -> "TorsionValue":
        return canonicalize(cls(value, units))

    def is_zero(self) -> bool:
        return isinstance(self.value, int)

    @property
    def kind(self) -> str:
        if self.is_zero():
            return "zero"
        return "scalar" if isinstance(self.value, CyclotomicNumber) else "rational"

    def key(self) -> tuple:
        v = canonicalize(self).value
        if isinstance(v, int):
            return ("zero",)
        if isinstance(v, CyclotomicNumber):
            if v.is_rational():
                return ("scalar", 1, (v.coeffs[0],))
            return ("scalar", v.order, v.coeffs)
        return ("rational", v.num.low, v.num.coeffs, v.den.low, v.den.coeffs)

    def sort_key(self) -> tuple:
        v = canonicalize(self).value
        if isinstance(v, int):
            return (0,)
        if isinstance(v, CyclotomicNumber):
            return (1, v.sort_key())
        return (2, v.den.sort_key(), v.num.sort_key())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorsionValue):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"TorsionValue([{self}])"

    def __str__(self) -> str:
        return str(self.value)


def canonicalize(v: TorsionValue) -> TorsionValue:
    """
    Returns the orbit-minimal representative of a torsion value; idempotent.

    Args:
        v (TorsionValue): Value and its unit group.

    Returns:
        TorsionValue: The canonical representative (zero stays zero).
    """
    if v.canonical or v.is_zero():
        return TorsionValue(v.value, v.units, canonical=True)
    value = v.value
    multipliers = v.units.multipliers()
    if isinstance(value, CyclotomicNumber):
        best = min((u * value for u in multipliers), key=lambda x: x.sort_key())
        return TorsionValue(best, v.units, canonical=True)
    num, den = value.num, value.den
    if v.units.t_shift:
        num = num.shift(-num.low)
    best_num = min((_scale_poly(num, u) for u in multipliers), key=lambda p: p.sort_key())
    return TorsionValue(LaurentRational(best_num, den, reduce=False), v.units, canonical=True)
