"""Exact integer and rational primitives shared by all other modules.

Rationals are `fractions.Fraction` values, which are always kept reduced with a positive denominator, so structural
equality is mathematical equality. Integers are Python's unbounded `int`.
"""
import re
import math
from fractions import Fraction
from typing import Iterable, Optional, Union

from equal_biquadrates.errors import EmptyInputError, InvalidInputError, ZeroDenominatorError

BigInt = int
BigRat = Fraction
# Anything that converts exactly into a rational.
RatLike = Union[int, Fraction]

# Optional sign, digits and an optional "/digits" part. No whitespace, decimals or exponents.
_RAT_PATTERN = re.compile(r"^-?[0-9]+(/[0-9]+)?$")
_INT_PATTERN = re.compile(r"^-?[0-9]+$")
# Decimal chunk size, well below the 4300 digits Python allows per int/str conversion by default.
_CHUNK_DIGITS = 1000
_CHUNK_BASE = 10**_CHUNK_DIGITS


def rat_make(num: BigInt, den: BigInt = 1) -> BigRat:
    """Build the canonical rational num/den.

    Raises
    ------
    ZeroDenominatorError
        If `den` is zero.
    """
    if den == 0:
        raise ZeroDenominatorError(f"zero denominator for numerator {num}")
    return Fraction(num, den)


def as_rat(value: RatLike) -> BigRat:
    """Convert an int or Fraction to a Fraction without any rounding."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise InvalidInputError(f"expected an exact integer or rational, got {value!r}")
    return Fraction(value)


def int_sqrt_exact(n: BigInt) -> Optional[BigInt]:
    """Return the non-negative square root of `n` if it is a perfect square, otherwise None."""
    if n < 0:
        return None
    # isqrt is an exact integer Newton iteration, no floating point involved.
    root = math.isqrt(n)
    if root * root == n:
        return root
    return None


def rat_sqrt_exact(q: BigRat) -> Optional[BigRat]:
    """Return the non-negative rational square root of `q` if it exists."""
    num = int_sqrt_exact(q.numerator)
    if num is None:
        return None
    den = int_sqrt_exact(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def lcm_of_denominators(values: Iterable[BigRat]) -> BigInt:
    """Least positive common multiple of the canonical denominators of `values`.

    Raises
    ------
    EmptyInputError
        If `values` is empty.
    """
    dens = [as_rat(value).denominator for value in values]
    if not dens:
        raise EmptyInputError("lcm of denominators needs at least one value")
    return math.lcm(*dens)


def is_integral(value: BigRat) -> bool:
    """Whether a rational is an integer."""
    return value.denominator == 1


def _format_digits(n: BigInt) -> str:
    # n >= 0. Split at a power of ten so every str() call stays below the int/str digit limit.
    if n < _CHUNK_BASE:
        return str(n)
    # bit_length·0.3 slightly underestimates the number of digits, so both halves are non-empty.
    split = n.bit_length() * 3 // 20
    high, low = divmod(n, 10**split)
    return _format_digits(high) + _format_digits(low).rjust(split, "0")


def _parse_digits(digits: str) -> BigInt:
    if len(digits) <= _CHUNK_DIGITS:
        return int(digits)
    split = len(digits) // 2
    return _parse_digits(digits[:-split]) * 10**split + _parse_digits(digits[-split:])


def parse_decimal(text: str) -> BigInt:
    """Parse an optionally signed decimal string of any length; also used as `parse_int` for `json.load`."""
    if text.startswith("-"):
        return -_parse_digits(text[1:])
    return _parse_digits(text)


def encode_int(n: BigInt) -> str:
    """Encode an integer as an exact decimal string of any length."""
    if n < 0:
        return "-" + _format_digits(-n)
    return _format_digits(n)


def decode_int(text: object) -> BigInt:
    """Decode an exact decimal string (or a JSON integer) into an int."""
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    if not isinstance(text, str) or not _INT_PATTERN.match(text):
        raise InvalidInputError(f"not a decimal integer string: {text!r}")
    return parse_decimal(text)


def encode_rat(q: BigRat) -> str:
    """Encode a rational as "num/den", or just "num" when the denominator is 1."""
    if q.denominator == 1:
        return encode_int(q.numerator)
    return f"{encode_int(q.numerator)}/{encode_int(q.denominator)}"


def decode_rat(text: object) -> BigRat:
    """Decode a "num" or "num/den" string (or a JSON integer) into a canonical rational.

    Raises
    ------
    InvalidInputError
        If the text is not of the accepted shape.
    ZeroDenominatorError
        If the denominator is zero.
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RAT_PATTERN.match(text):
        raise InvalidInputError(f"not a rational string: {text!r}")
    num, _, den = text.partition("/")
    return rat_make(parse_decimal(num), parse_decimal(den) if den else 1)
