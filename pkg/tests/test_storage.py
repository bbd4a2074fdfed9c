import json
from fractions import Fraction

import pytest

from surgtorsion.cyclotomic import CyclotomicNumber
from surgtorsion.exceptions import RecordEncodingError
from surgtorsion.laurent import LaurentPoly, LaurentRational, t_variable
from surgtorsion.storage import JsonScalarCodec
from surgtorsion.units import TorsionValue, UnitGroupSpec


@pytest.fixture
def codec():
    return JsonScalarCodec()


def test_rationals(codec):
    assert codec.encode_value(Fraction(-3, 4)) == "-3/4"
    assert codec.encode_value(7) == "7"
    assert codec.decode_value("-3/4") == Fraction(-3, 4)
    assert codec.decode_value("7") == 7


def test_cyclotomic_numbers(codec):
    z = CyclotomicNumber.zeta(6)
    encoded = codec.encode_value(z * Fraction(1, 2) + 3)
    assert encoded == {"order": 6, "coeffs": ["3", "1/2"]}
    assert codec.decode_value(encoded) == z * Fraction(1, 2) + 3
    assert codec.encode_value(CyclotomicNumber.rational(6, 29)) == "29"


def test_laurent_values(codec):
    t = t_variable()
    p = t ** 2 - LaurentPoly.monomial(-1, 3)
    assert codec.encode_value(p) == [[-1, "-3"], [2, "1"]]
    q = LaurentRational(LaurentPoly.constant(1), t - 1)
    assert codec.encode_value(q) == {"num": [[0, "1"]], "den": [[0, "-1"], [1, "1"]]}
    assert codec.decode_value(codec.encode_value(q)) == q


def test_torsion_values(codec):
    units = UnitGroupSpec.generated([CyclotomicNumber.zeta(6)], 6)
    v = TorsionValue.of(CyclotomicNumber.rational(6, -29), units)
    assert codec.encode_value(v) == {"value": "29", "kind": "scalar", "pretty": "29"}
    assert codec.decode_torsion(codec.encode_value(v), units) == v
    assert codec.encode_value(TorsionValue.zero(units)) == {"value": 0, "kind": "zero", "pretty": "0"}


@pytest.mark.parametrize("value", [True, 1.5, object()])
def test_unsupported_values(codec, value):
    with pytest.raises(RecordEncodingError):
        codec.encode_value(value)


@pytest.mark.parametrize("data", ["x/y", {"order": 6}, {"other": 1}, None, "1/0"])
def test_malformed_values(codec, data):
    with pytest.raises(RecordEncodingError):
        codec.decode_value(data)


def test_records_are_canonical(codec):
    a = codec.encode_record({"b": 1, "a": [1, 2]})
    b = codec.encode_record({"a": [1, 2], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == {"a": [1, 2], "b": 1}
    assert codec.decode_record(a) == {"a": [1, 2], "b": 1}


def test_unencodable_record(codec):
    with pytest.raises(RecordEncodingError):
        codec.encode_record({"x": Fraction(1, 2)})
    assert codec.decode_record("[1, 2]") is None
    assert codec.decode_record("{") is None
