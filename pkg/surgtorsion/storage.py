import json
from fractions import Fraction
from typing import Any, Dict, Optional

from .cyclotomic import CyclotomicNumber
from .exceptions import RecordEncodingError
from .laurent import LaurentPoly, LaurentRational
from .units import TorsionValue, UnitGroupSpec


class ScalarCodec:
    """Base class for encoders of exact values and output records."""
    def encode_value(self, value: Any) -> Any:
        raise NotImplementedError

    def decode_value(self, data: Any) -> Any:
        raise NotImplementedError

    def encode_record(self, data: Dict) -> str:
        raise NotImplementedError

    def decode_record(self, data: str) -> Optional[Dict]:
        raise NotImplementedError


def _rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class JsonScalarCodec(ScalarCodec):
    """
    JSON encoding: rationals as "a/b", cyclotomic numbers as {"order", "coeffs"},
    Laurent polynomials as [[exponent, coeff], ...], quotients as {"num", "den"}.
    """
    def encode_value(self, value: Any) -> Any:
        """Encodes a scalar, polynomial, quotient or torsion value.

        Args:
            value: Exact value to encode.

        Returns:
            A JSON-compatible structure.

        Raises:
            RecordEncodingError: For unsupported types.
        """
        if isinstance(value, TorsionValue):
            encoded = 0 if value.is_zero() else self.encode_value(value.value)
            return {"value": encoded, "kind": value.kind, "pretty": str(value)}
        if isinstance(value, bool):
            raise RecordEncodingError("Booleans are not exact scalars")
        if isinstance(value, (int, Fraction)):
            return _rational(value)
        if isinstance(value, CyclotomicNumber):
            if value.is_rational():
                return _rational(value.as_rational())
            return {"order": value.order, "coeffs": [_rational(c) for c in value.coeffs]}
        if isinstance(value, LaurentPoly):
            return [[e, self.encode_value(c)] for e, c in sorted(value.terms().items())]
        if isinstance(value, LaurentRational):
            return {"num": self.encode_value(value.num), "den": self.encode_value(value.den)}
        raise RecordEncodingError(f"Failed to encode value of type {type(value).__name__}")

    def decode_value(self, data: Any) -> Any:
        """Inverse of ``encode_value`` for scalars, polynomials and quotients (torsion records decode to their value).

        Raises:
            RecordEncodingError: On malformed input.
        """
        try:
            if isinstance(data, str):
                x = Fraction(data)
                return x.numerator if x.denominator == 1 else x
            if isinstance(data, int) and not isinstance(data, bool):
                return data
            if isinstance(data, list):
                return LaurentPoly.from_terms({int(e): self.decode_value(c) for e, c in data})
            if isinstance(data, dict):
                if "value" in data and "kind" in data:
                    return self.decode_value(data["value"])
                if "order" in data:
                    return CyclotomicNumber(int(data["order"]), [Fraction(c) for c in data["coeffs"]])
                if "num" in data:
                    return LaurentRational(self.decode_value(data["num"]), self.decode_value(data["den"]))
        except (TypeError, ValueError, KeyError, ZeroDivisionError) as e:
            raise RecordEncodingError(f"Failed to decode value: {e}")
        raise RecordEncodingError(f"Failed to decode value {data!r}")

    def decode_torsion(self, data: Dict, units: UnitGroupSpec) -> TorsionValue:
        return TorsionValue.of(self.decode_value(data), units)

    def encode_record(self, data: Dict) -> str:
        """Serialises a record with sorted keys and a trailing newline so reruns are byte-identical.

        Raises:
            RecordEncodingError: If some value is not JSON-serialisable.
        """
        try:
            return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
        except (TypeError, ValueError) as e:
            raise RecordEncodingError(f"Failed to encode record: {e}")

    def decode_record(self, data: str) -> Optional[Dict]:
        try:
            record = json.loads(data)
        except (TypeError, ValueError):
            return None
        return record if isinstance(record, dict) else None
