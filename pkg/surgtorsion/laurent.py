"""
Laurent polynomials in t over Q or Q(z_p), and their fraction field.

Coefficients are ``int``/``Fraction`` (base order 1) or ``CyclotomicNumber``.
Polynomials are stored densely: the exponent of the first coefficient plus a
tuple with no zero at either end.
"""
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .cyclotomic import CyclotomicNumber, rational_key

Coefficient = Union[int, Fraction, CyclotomicNumber]


def _divide(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return a / b


def coefficient_key(c: Coefficient) -> tuple:
    if isinstance(c, CyclotomicNumber):
        return c.sort_key()
    return (rational_key(c),)


class LaurentPoly:
    """An element of K[t, t^-1] for K = Q or Q(z_p)."""

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, coeffs: Sequence[Coefficient] = (), low: int = 0, order: int = 1):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        end = len(coeffs)
        while end > start and not coeffs[end - 1]:
            end -= 1
        self.coeffs: Tuple[Coefficient, ...] = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0
        self.order = order

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, c: Coefficient, order: int = 1) -> "LaurentPoly":
        if isinstance(c, CyclotomicNumber):
            order = max(order, c.order)
        return cls([c], 0, order)

    @classmethod
    def monomial(cls, exponent: int, c: Coefficient = 1, order: int = 1) -> "LaurentPoly":
        if isinstance(c, CyclotomicNumber):
            order = max(order, c.order)
        return cls([c], exponent, order)

    @classmethod
    def from_terms(cls, terms: Dict[int, Coefficient], order: int = 1) -> "LaurentPoly":
        if not terms:
            return cls((), 0, order)
        low = min(terms)
        high = max(terms)
        dense: List[Coefficient] = [0] * (high - low + 1)
        for e, c in terms.items():
            dense[e - low] = c
        return cls(dense, low, order)

    # -- structure ---------------------------------------------------------
    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> Dict[int, Coefficient]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1 and self.low == 0

    def leading(self) -> Coefficient:
        return self.coeffs[-1]

    def shift(self, k: int) -> "LaurentPoly":
        """Multiplies by t^k."""
        return LaurentPoly(self.coeffs, self.low + k, self.order)

    # -- arithmetic --------------------------------------------------------
    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return LaurentPoly.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        dense: List[Coefficient] = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            dense[self.low - low + i] = c
        for i, c in enumerate(other.coeffs):
            dense[other.low - low + i] = dense[other.low - low + i] + c
        return LaurentPoly(dense, low, max(self.order, other.order))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([-c for c in self.coeffs], self.low, self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            if not other:
                return LaurentPoly((), 0, self.order)
            order = max(self.order, other.order) if isinstance(other, CyclotomicNumber) else self.order
            return LaurentPoly([c * other for c in self.coeffs], self.low, order)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly((), 0, max(self.order, other.order))
        out: List[Coefficient] = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return LaurentPoly(out, self.low + other.low, max(self.order, other.order))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self.coeffs) != 1:
                raise ArithmeticError(f"{self} is not a unit of the Laurent ring")
            return LaurentPoly([_divide(1, self.coeffs[0]) ** -exponent], self.low * exponent, self.order)
        result = LaurentPoly.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod_polynomial(self, other: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """Long division of the ordinary parts (both shifted to lowest exponent 0)."""
        if not other.coeffs:
            raise ZeroDivisionError("Laurent polynomial division by zero")
        num = list(self.coeffs)
        den = other.coeffs
        if len(num) < len(den):
            return LaurentPoly((), 0, self.order), LaurentPoly(num, 0, self.order)
        quotient: List[Coefficient] = [0] * (len(num) - len(den) + 1)
        lead = den[-1]
        for shift in range(len(num) - len(den), -1, -1):
            top = num[shift + len(den) - 1]
            if not top:
                continue
            factor = _divide(top, lead)
            quotient[shift] = factor
            for i, c in enumerate(den):
                if c:
                    num[shift + i] = num[shift + i] - factor * c
        remainder = num[:len(den) - 1]
        order = max(self.order, other.order)
        return LaurentPoly(quotient, 0, order), LaurentPoly(remainder, 0, order)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """
        Divides exactly in the Laurent ring.

        Raises:
            ArithmeticError: If other does not divide self.
        """
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return LaurentPoly([_divide(c, other) for c in self.coeffs], self.low, self.order)
        if not self.coeffs:
            return self
        quotient, remainder = self.divmod_polynomial(other)
        if remainder:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quotient.shift(self.low - other.low)

    __truediv__ = exact_div

    def monic(self) -> "LaurentPoly":
        return self.exact_div(self.leading()) if self.coeffs else self

    def evaluate(self, x):
        """Substitutes t = x (a field element; negative powers use x^-1)."""
        if not self.coeffs:
            return 0
        if isinstance(x, int):
            x = Fraction(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.low:
            acc = acc * (x ** self.low)
        return acc

    def map_coefficients(self, fn) -> "LaurentPoly":
        mapped = [fn(c) for c in self.coeffs]
        order = max([c.order for c in mapped if isinstance(c, CyclotomicNumber)] + [self.order])
        return LaurentPoly(mapped, self.low, order)

    def sort_key(self) -> tuple:
        return (self.low, len(self.coeffs)) + tuple(coefficient_key(c) for c in self.coeffs)

    # -- comparison --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            e = self.low + i
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in K[t, t^-1] (t-powers are units, so the result has lowest exponent 0)."""
    a = a.shift(-a.low) if a else a
    b = b.shift(-b.low) if b else b
    while b:
        _, r = a.divmod_polynomial(b)
        a, b = b, (r.shift(-r.low) if r else r)
    if not a:
        return LaurentPoly.constant(1, a.order)
    return a.monic()


class LaurentRational:
    """A quotient num/den of Laurent polynomials, kept reduced with a monic denominator of lowest exponent 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None, reduce: bool = True):
        if den is None:
            den = LaurentPoly.constant(1, num.order)
        if not den:
            raise ZeroDivisionError("LaurentRational with zero denominator")
        if reduce:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
        if not num:
            return num, LaurentPoly.constant(1, den.order)
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.leading()
        num = num.shift(-den.low).exact_div(lead)
        den = den.shift(-den.low).exact_div(lead)
        return num, den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "LaurentRational":
        return cls(p, None, reduce=False)

    def _lift(self, other) -> "LaurentRational":
        if isinstance(other, LaurentRational):
            return other
        if isinstance(other, LaurentPoly):
            return LaurentRational.from_poly(other)
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return LaurentRational.from_poly(LaurentPoly.constant(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return LaurentRational(self.num + other.num, self.den)
        return LaurentRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "LaurentRational":
        return LaurentRational(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "LaurentRational":
        if not self.num:
            raise ZeroDivisionError("Inverse of zero in K(t)")
        return LaurentRational(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "LaurentRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return LaurentRational(self.num ** exponent, self.den ** exponent)

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def evaluate(self, x):
        """
        Substitutes t = x.

        Raises:
            ZeroDivisionError: If the denominator vanishes at x.
        """
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError(f"Denominator {self.den} vanishes at t = {x}")
        return self.num.evaluate(x) / d

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"LaurentRational({str(self)!r})"

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.coeffs == (1,):
            return str(self.num)
        return f"({self.num})/({self.den})"


def t_variable(order: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(1, 1, order)
