"""
Exact arithmetic in the cyclotomic fields Q(z_p).

An element is a coefficient vector over Q in the power basis 1, z, ..., z^(d-1),
d = deg Phi_p, kept reduced modulo the p-th cyclotomic polynomial Phi_p.
Rationals are plain ``fractions.Fraction`` (or ``int``) throughout the package.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


def rational_key(x: Scalar) -> tuple:
    """Total order on rationals used by canonical forms: nonzero first, then by size, positive first."""
    return (x == 0, abs(x), x < 0)


def _poly_trim(coeffs: List) -> List:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(num: Sequence, den: Sequence) -> Tuple[List, List]:
    """Long division of dense polynomials (low to high) over a field."""
    num = _poly_trim(list(num))
    den = _poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [], num
    quotient = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = Fraction(den[-1])
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        factor = num[-1] / lead
        quotient[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        num.pop()
        _poly_trim(num)
    return _poly_trim(quotient), num


def _poly_mul(a: Sequence, b: Sequence) -> List:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: Sequence, b: Sequence) -> List:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int) -> Tuple[int, ...]:
    """
    Returns the p-th cyclotomic polynomial.

    Args:
        p (int): Order of the roots of unity, p >= 1.

    Returns:
        Tuple[int, ...]: Integer coefficients from the constant term up; the
        degree is Euler's totient of p.

    Raises:
        ValueError: If p < 1.
    """
    if p < 1:
        raise ValueError(f"Cyclotomic polynomial needs a positive order, got {p}")
    poly: List = [-1] + [0] * (p - 1) + [1]
    for d in range(1, p):
        if p % d == 0:
            poly, remainder = _poly_divmod(poly, cyclotomic_polynomial(d))
            if remainder:
                raise ArithmeticError(f"Phi_{d} does not divide x^{p} - 1")
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def _power_table(p: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Coordinates of z^e for e = 0..p-1 in the power basis of Q(z_p)."""
    phi = cyclotomic_polynomial(p)
    d = len(phi) - 1
    table = []
    current = [Fraction(0)] * d
    current[0] = Fraction(1)
    for _ in range(p):
        table.append(tuple(current))
        top = current[-1]
        current = [Fraction(0)] + current[:-1]
        if top:
            for i in range(d):
                current[i] -= top * phi[i]
    return tuple(table)


def _degree(p: int) -> int:
    return len(cyclotomic_polynomial(p)) - 1


class CyclotomicNumber:
    """An element of Q(z_p) stored as reduced coordinates in the power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()):
        if order < 1:
            raise ValueError(f"Invalid cyclotomic order {order}")
        d = _degree(order)
        raw = [Fraction(c) for c in coeffs]
        if len(raw) > d:
            reduced = [Fraction(0)] * d
            table = _power_table(order)
            for e, c in enumerate(raw):
                if c:
                    for i, v in enumerate(table[e % order]):
                        reduced[i] += c * v
            raw = reduced
        raw += [Fraction(0)] * (d - len(raw))
        self.order = order
        self.coeffs: Tuple[Fraction, ...] = tuple(raw)

    # -- constructors ------------------------------------------------------
    @classmethod
    def rational(cls, order: int, value: Scalar) -> "CyclotomicNumber":
        return cls(order, [value])

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicNumber":
        """Returns z^power for the primitive root z = exp(2 pi i / order)."""
        return cls(order, _power_table(order)[power % order])

    # -- coercion ----------------------------------------------------------
    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                if other.is_rational():
                    return CyclotomicNumber.rational(self.order, other.coeffs[0])
                if self.is_rational():
                    return NotImplemented
                raise ValueError(f"Mixed cyclotomic orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order <= 2:
            return CyclotomicNumber(self.order, [self.coeffs[0] * other.coeffs[0]])
        return CyclotomicNumber(self.order, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """
        Returns the multiplicative inverse via the extended Euclidean algorithm modulo Phi_p.

        Raises:
            ZeroDivisionError: If the element is zero.
        """
        if not self:
            raise ZeroDivisionError("Inverse of zero in a cyclotomic field")
        if self.order <= 2:
            return CyclotomicNumber(self.order, [1 / self.coeffs[0]])
        r0: List = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r1: List = _poly_trim(list(self.coeffs))
        s0: List = []
        s1: List = [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant since Phi_p is irreducible
        c = r0[0]
        return CyclotomicNumber(self.order, [x / c for x in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Division by zero")
            return CyclotomicNumber(self.order, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "CyclotomicNumber":
        base = self if exponent >= 0 else self.inverse()
        result = CyclotomicNumber.rational(self.order, 1)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- field automorphisms ----------------------------------------------
    def galois(self, k: int) -> "CyclotomicNumber":
        """Applies the automorphism z -> z^k (k coprime to the order)."""
        table = _power_table(self.order)
        out = [Fraction(0)] * len(self.coeffs)
        for e, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(table[(e * k) % self.order]):
                    out[i] += c * v
        return CyclotomicNumber(self.order, out)

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    # -- predicates and conversion -----------------------------------------
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def sort_key(self) -> tuple:
        return tuple(rational_key(c) for c in self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            power = "z" if e == 1 else f"z^{e}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        if not terms:
            return "0"
        text = " + ".join(terms).replace("+ -", "- ")
        return f"({text})" if len(terms) > 1 else text


def conjugate(z: CyclotomicNumber) -> CyclotomicNumber:
    """Complex conjugation, i.e. the automorphism z -> z^-1 of Q(z_p)."""
    return z.conjugate()


def abs_square(z: CyclotomicNumber, rational: bool = False) -> Union[CyclotomicNumber, Fraction]:
    """
    Returns |z|^2 = z * conj(z) under the embedding z_p -> exp(2 pi i / p).

    Args:
        z (CyclotomicNumber): Field element.
        rational (bool): If True, return a Fraction and certify rationality.

    Returns:
        The real-subfield element |z|^2, or its rational value.

    Raises:
        ValueError: If a rational result is requested and |z|^2 is irrational.
    """
    product = z * z.conjugate()
    if rational:
        if not product.is_rational():
            raise ValueError(f"|{z}|^2 = {product} is not rational")
        return product.as_rational()
    return product
