"""Module for the JSON records of curves, points, specifications, constructions and solutions.

Big numbers never travel as JSON numbers: integers are decimal strings and rationals are "num" or "num/den" strings,
so every value round-trips bit-exactly. Decoders also accept plain JSON integers for hand-written input.
"""
from typing import Any, Dict, List, Mapping, Optional, Tuple

from equal_biquadrates.curves import INFINITY, AffinePoint, CurvePoint, Infinity, WeierstrassCurve
from equal_biquadrates.descent import IntegerSolution, weighted_power_sum
from equal_biquadrates.equations import (
    CurveConstruction,
    EquationSpec,
    build_four,
    build_general,
    build_three,
    map_four_to_general,
    map_three_to_general,
)
from equal_biquadrates.errors import InvalidInputError
from equal_biquadrates.exact_arith import decode_int, decode_rat, encode_int, encode_rat

# Type of a decoded JSON object.
Record = Dict[str, Any]


def _field(record: Any, name: str) -> Any:
    if not isinstance(record, Mapping):
        raise InvalidInputError(f"expected a JSON object, got {record!r}")
    if name not in record:
        raise InvalidInputError(f"missing field {name!r} in {dict(record)!r}")
    return record[name]


def _list_field(record: Any, name: str) -> List[Any]:
    value = _field(record, name)
    if not isinstance(value, list):
        raise InvalidInputError(f"field {name!r} must be a list, got {value!r}")
    return value


def encode_point(p: CurvePoint) -> Record:
    """Encode a point as {"x": .., "y": ..} or {"infinity": true}."""
    if isinstance(p, Infinity):
        return {"infinity": True}
    return {"x": encode_rat(p.x), "y": encode_rat(p.y)}


def decode_point(record: Any) -> CurvePoint:
    """Decode a point record."""
    if isinstance(record, Mapping) and record.get("infinity") is True:
        return INFINITY
    return AffinePoint(decode_rat(_field(record, "x")), decode_rat(_field(record, "y")))


def encode_curve(curve: WeierstrassCurve) -> Record:
    """Encode a curve as {"f": .., "g": .., "h": ..}."""
    return {"f": encode_rat(curve.f), "g": encode_rat(curve.g), "h": encode_rat(curve.h)}


def decode_curve(record: Any) -> WeierstrassCurve:
    """Decode a curve record, or the curve inside a construction record."""
    if isinstance(record, Mapping) and "curve" in record:
        record = record["curve"]
    return WeierstrassCurve(
        decode_rat(_field(record, "f")), decode_rat(_field(record, "g")), decode_rat(_field(record, "h"))
    )


def encode_spec(spec: EquationSpec) -> Record:
    """Encode a specification in the general form."""
    return {
        "n": spec.n,
        "coeffs": [encode_int(a) for a in spec.coeffs],
        "params": [{"A": encode_rat(A), "B": encode_rat(B)} for A, B in spec.params],
    }


def _coeffs(record: Any, count: Optional[int] = None) -> List[int]:
    coeffs = [decode_int(a) for a in _list_field(record, "coeffs")]
    if count is not None and len(coeffs) != count:
        raise InvalidInputError(f"expected {count} coefficients, got {len(coeffs)}")
    return coeffs


def decode_spec(record: Any) -> EquationSpec:
    """Decode a specification in the general, "three" or "four" form.

    The three- and four-variable forms carry the parameters of those constructions directly, e.g.
    {"form": "three", "coeffs": ["1", "2", "3"], "A": "4", "B": "0"}, and are mapped to the general form.
    """
    if not isinstance(record, Mapping):
        raise InvalidInputError(f"expected a specification object, got {record!r}")
    form = record.get("form", "general")
    if form == "three":
        a, b, c = _coeffs(record, 3)
        return map_three_to_general(a, b, c, *(decode_rat(_field(record, name)) for name in "AB"))
    if form == "four":
        a, b, c, d = _coeffs(record, 4)
        return map_four_to_general(a, b, c, d, *(decode_rat(_field(record, name)) for name in "ABDF"))
    if form != "general":
        raise InvalidInputError(f"unknown specification form {form!r}")
    coeffs = _coeffs(record)
    if "n" in record and decode_int(record["n"]) != len(coeffs):
        raise InvalidInputError(f"n={record['n']} does not match {len(coeffs)} coefficients")
    pairs = _list_field(record, "params")
    params = [(decode_rat(_field(pair, "A")), decode_rat(_field(pair, "B"))) for pair in pairs]
    return EquationSpec(tuple(coeffs), tuple(params))


def build_from_record(record: Any) -> CurveConstruction:
    """Build the construction described by a specification record.

    The "three" and "four" forms are built with their own formulas so that L1 keeps the sign of those constructions.
    """
    form = record.get("form") if isinstance(record, Mapping) else None
    if form == "three":
        a, b, c = _coeffs(record, 3)
        return build_three(a, b, c, *(decode_rat(_field(record, name)) for name in "AB"))
    if form == "four":
        a, b, c, d = _coeffs(record, 4)
        return build_four(a, b, c, d, *(decode_rat(_field(record, name)) for name in "ABDF"))
    return build_general(decode_spec(record))


def encode_construction(cons: CurveConstruction) -> Record:
    """Encode a construction with its curve and back-substitution data."""
    return {
        "spec": encode_spec(cons.spec),
        "curve": encode_curve(cons.curve),
        "L1": encode_rat(cons.L1),
        "G": encode_rat(cons.G),
        "H": encode_rat(cons.H),
        "orientation": cons.orientation,
        "u": encode_int(cons.u),
    }


def decode_construction(record: Any) -> CurveConstruction:
    """Decode a construction record, or build one from a bare specification record.

    A full record is checked against a fresh build of its specification so that edited or stale records are rejected.
    """
    if not (isinstance(record, Mapping) and "curve" in record):
        return build_from_record(record)
    spec = decode_spec(_field(record, "spec"))
    orientation = decode_int(record.get("orientation", 1))
    u = decode_int(record.get("u", "1"))
    L1 = decode_rat(_field(record, "L1"))
    if orientation not in (1, -1) or u < 1:
        raise InvalidInputError(f"invalid orientation {orientation} or scale {u}")
    if L1 == 0:
        raise InvalidInputError("construction record has L1 = 0")
    cons = CurveConstruction(
        spec=spec,
        curve=decode_curve(record),
        L1=L1,
        G=decode_rat(_field(record, "G")),
        H=decode_rat(_field(record, "H")),
        orientation=orientation,
        u=u,
    )
    expected = build_general(spec)
    consistent = (
        expected.L1 == orientation * cons.L1
        and expected.G == cons.G
        and expected.H == cons.H
        and (expected.curve if u == 1 else expected.curve.rescale(u)) == cons.curve
    )
    if not consistent:
        raise InvalidInputError("construction record does not match its specification")
    return cons


def encode_solution(spec: EquationSpec, s: IntegerSolution, k: Optional[int] = None) -> Record:
    """Encode a solution, optionally tagged with the multiple k it was derived from."""
    record: Record = {} if k is None else {"k": k}
    record.update(
        {
            "x": [encode_int(v) for v in s.x],
            "y": [encode_int(v) for v in s.y],
            "scale": encode_int(s.scale),
            "class": s.kind,
            "verified": s.verified,
            "has_zero": s.has_zero,
            "total": encode_int(weighted_power_sum(spec.coeffs, s.x)),
        }
    )
    return record


def decode_identity(record: Any) -> Tuple[List[int], List[int], List[int]]:
    """Decode an identity {"coeffs" or "spec", "x", "y"} into coefficients and both sides.

    Raises
    ------
    InvalidInputError
        If a field is missing or not a list, or there are no coefficients.
    """
    if not isinstance(record, Mapping):
        raise InvalidInputError(f"expected an identity object, got {record!r}")
    if "spec" in record:
        coeffs = list(decode_spec(record["spec"]).coeffs)
    elif "coeffs" in record:
        coeffs = _coeffs(record)
    else:
        raise InvalidInputError('an identity needs "coeffs" or "spec"')
    if not coeffs:
        raise InvalidInputError("an identity needs at least one coefficient")
    x = [decode_int(v) for v in _list_field(record, "x")]
    y = [decode_int(v) for v in _list_field(record, "y")]
    return coeffs, x, y
