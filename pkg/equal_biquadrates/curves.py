"""Module for the Weierstrass cubic Y² = X³ + fX² + gX + h and its chord-tangent group law."""
# Postponed annotations will be automatic starting with Python 3.11.
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from equal_biquadrates.errors import NotOnCurveError, SingularCurveError
from equal_biquadrates.exact_arith import BigRat, RatLike, as_rat, is_integral


@dataclass(frozen=True)
class Infinity:
    """The point at infinity, identity element of the group."""

    def __repr__(self) -> str:
        """Generate printable representation of object."""
        return "INFINITY"


INFINITY = Infinity()


@dataclass(frozen=True)
class AffinePoint:
    """A rational point (x, y) with exact coordinates."""

    x: BigRat
    y: BigRat

    def __post_init__(self) -> None:
        """Coerce coordinates to canonical rationals."""
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "y", as_rat(self.y))


# Type for any point of a curve.
CurvePoint = Union[AffinePoint, Infinity]


def point(x: RatLike, y: RatLike) -> AffinePoint:
    """Shorthand constructor for an affine point."""
    return AffinePoint(as_rat(x), as_rat(y))


def discriminant(f: RatLike, g: RatLike, h: RatLike) -> BigRat:
    """Discriminant 18fgh − 4f³h + f²g² − 4g³ − 27h² of the monic cubic X³ + fX² + gX + h."""
    f, g, h = as_rat(f), as_rat(g), as_rat(h)
    return 18 * f * g * h - 4 * f**3 * h + f**2 * g**2 - 4 * g**3 - 27 * h**2


@dataclass(frozen=True)
class WeierstrassCurve:
    """The nonsingular curve Y² = X³ + fX² + gX + h over the rationals.

    All operations are exact and the object is immutable, so curves and their points can be shared freely between
    threads or processes.
    """

    f: BigRat
    g: BigRat
    h: BigRat

    def __post_init__(self) -> None:
        """Normalise coefficients and reject singular cubics.

        Raises
        ------
        SingularCurveError
            If the discriminant vanishes.
        """
        object.__setattr__(self, "f", as_rat(self.f))
        object.__setattr__(self, "g", as_rat(self.g))
        object.__setattr__(self, "h", as_rat(self.h))
        if self.discriminant() == 0:
            raise SingularCurveError(f"singular cubic with f={self.f}, g={self.g}, h={self.h}")

    def discriminant(self) -> BigRat:
        """Discriminant of the cubic, non-zero for every constructed curve."""
        return discriminant(self.f, self.g, self.h)

    def is_integral(self) -> bool:
        """Whether f, g and h are all integers."""
        return is_integral(self.f) and is_integral(self.g) and is_integral(self.h)

    def cubic(self, x: BigRat) -> BigRat:
        """Right-hand side x³ + fx² + gx + h."""
        return ((x + self.f) * x + self.g) * x + self.h

    def contains(self, p: CurvePoint) -> bool:
        """Whether `p` is the point at infinity or satisfies the curve equation exactly."""
        if isinstance(p, Infinity):
            return True
        return p.y * p.y == self.cubic(p.x)

    def _check(self, p: CurvePoint) -> None:
        if not self.contains(p):
            raise NotOnCurveError(f"{p} is not on {self}")

    def negate(self, p: CurvePoint) -> CurvePoint:
        """Group inverse: (x, y) -> (x, −y), infinity stays infinity."""
        self._check(p)
        if isinstance(p, Infinity):
            return p
        return AffinePoint(p.x, -p.y)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        """Chord-tangent sum of two points.

        Raises
        ------
        NotOnCurveError
            If either point is off the curve.
        """
        self._check(p)
        self._check(q)
        return self._add(p, q)

    def _add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        # Unchecked sum, both points are known to be on the curve.
        if isinstance(p, Infinity):
            return q
        if isinstance(q, Infinity):
            return p
        if p.x == q.x:
            if p.y != q.y or p.y == 0:
                # Vertical chord, or tangent at a 2-torsion point.
                return INFINITY
            slope = (3 * p.x * p.x + 2 * self.f * p.x + self.g) / (2 * p.y)
        else:
            slope = (q.y - p.y) / (q.x - p.x)
        x3 = slope * slope - self.f - p.x - q.x
        y3 = slope * (p.x - x3) - p.y
        return AffinePoint(x3, y3)

    def scalar_mul(self, k: int, p: CurvePoint) -> CurvePoint:
        """Multiply `p` by the integer `k` with double-and-add; negative `k` multiplies the inverse."""
        self._check(p)
        if k < 0:
            k = -k
            p = self.negate(p)
        result: CurvePoint = INFINITY
        addend = p
        while k:
            if k & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            k >>= 1
        return result

    def multiples(self, p: CurvePoint, count: int) -> List[CurvePoint]:
        """The points P, 2P, ..., count·P computed by repeated addition."""
        self._check(p)
        result: List[CurvePoint] = []
        current: CurvePoint = INFINITY
        for _ in range(count):
            current = self._add(current, p)
            result.append(current)
        return result

    def rescale(self, u: int) -> WeierstrassCurve:
        """The isomorphic curve with coefficients (u²f, u⁴g, u⁶h), reached by (X, Y) -> (u²X, u³Y)."""
        assert u > 0
        return WeierstrassCurve(self.f * u**2, self.g * u**4, self.h * u**6)


def scale_point(p: CurvePoint, u: RatLike) -> CurvePoint:
    """Map a point through (X, Y) -> (u²X, u³Y)."""
    if isinstance(p, Infinity):
        return p
    factor = Fraction(u)
    return AffinePoint(p.x * factor**2, p.y * factor**3)


def has_weighted_denominators(p: CurvePoint) -> bool:
    """Whether an affine point has the shape (r/s², t/s³) with a single integer s; infinity passes trivially."""
    if isinstance(p, Infinity):
        return True
    den_x = p.x.denominator
    den_y = p.y.denominator
    # den_x = s² and den_y = s³ means den_y² = den_x³ with den_y / den_x = s integral.
    if den_y % den_x != 0:
        return False
    s = den_y // den_x
    return s * s == den_x
