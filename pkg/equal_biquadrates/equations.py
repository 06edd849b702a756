"""Module for turning an equation Σaᵢxᵢ⁴ = Σaᵢyᵢ⁴ into an elliptic curve plus back-substitution data.

With xᵢ = m + pᵢ and yᵢ = m − pᵢ the equation reduces to m²·Σaᵢpᵢ = −Σaᵢpᵢ³. Fixing Σaᵢpᵢ = 1 and tying the middle
variables to the last one (pᵢ = Aᵢpₙ + Bᵢ) leaves p₁ = Gpₙ + H and a cubic m² = L₁pₙ³ + L₂pₙ² + L₃pₙ + L₄, which
becomes Y² = X³ + fX² + gX + h after multiplying by L₁² and putting Y = L₁m, X = L₁pₙ.

The three- and four-variable constructions use mixed signs (x = m + p but y = m − q, z = m − s, ...). They are
implemented from their own formulas and also expressed as general specifications through `map_three_to_general` and
`map_four_to_general`, which give the same curve with L₁ of opposite sign.
"""
# Postponed annotations will be automatic starting with Python 3.11.
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from equal_biquadrates.curves import WeierstrassCurve
from equal_biquadrates.errors import DegenerateParamsError, InvalidSpecError
from equal_biquadrates.exact_arith import BigRat, RatLike, as_rat, lcm_of_denominators

# (Aᵢ, Bᵢ) pair tying pᵢ to pₙ.
ParamPair = Tuple[BigRat, BigRat]


@dataclass(frozen=True)
class EquationSpec:
    """The target equation Σaᵢxᵢ⁴ = Σaᵢyᵢ⁴ together with the free parameters of the construction."""

    # Coefficients a₁..aₙ, all non-zero integers.
    coeffs: Tuple[int, ...]
    # Pairs (Aᵢ, Bᵢ) for i = 2..n−1, so exactly n − 2 of them.
    params: Tuple[ParamPair, ...]

    def __post_init__(self) -> None:
        """Normalise to tuples of exact values and check the invariants.

        Raises
        ------
        InvalidSpecError
            If n < 3, a coefficient is zero or not an integer, or the number of parameter pairs is not n − 2.
        """
        coeffs = tuple(self.coeffs)
        for a in coeffs:
            if isinstance(a, bool) or not isinstance(a, int):
                raise InvalidSpecError(f"coefficients must be integers, got {a!r}")
        if len(coeffs) < 3:
            raise InvalidSpecError(f"need at least 3 coefficients, got {len(coeffs)}")
        if any(a == 0 for a in coeffs):
            raise InvalidSpecError(f"coefficients must be non-zero, got {coeffs}")
        params = tuple((as_rat(A), as_rat(B)) for A, B in self.params)
        if len(params) != len(coeffs) - 2:
            raise InvalidSpecError(f"need {len(coeffs) - 2} parameter pairs for n={len(coeffs)}, got {len(params)}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "params", params)

    @property
    def n(self) -> int:
        """Number of terms on each side."""
        return len(self.coeffs)

    def coefficient_groups(self) -> List[List[int]]:
        """Indices grouped by equal coefficient value, groups ordered by first occurrence."""
        groups: Dict[int, List[int]] = {}
        for index, a in enumerate(self.coeffs):
            groups.setdefault(a, []).append(index)
        return list(groups.values())


def make_spec(coeffs: Sequence[int], params: Sequence[Tuple[RatLike, RatLike]]) -> EquationSpec:
    """Convenience constructor accepting lists and integer parameters."""
    return EquationSpec(tuple(coeffs), tuple((as_rat(A), as_rat(B)) for A, B in params))


@dataclass(frozen=True)
class CurveConstruction:
    """A curve together with the data that maps its points back to the equation's variables.

    A point (X, Y) of `curve` corresponds to m = Y' / L1 and pₙ = orientation · X' / L1, where (X', Y') = (X/u², Y/u³)
    undoes an optional integral-model rescale. Then pᵢ = Aᵢpₙ + Bᵢ for the middle indices and p₁ = Gpₙ + H.
    """

    spec: EquationSpec
    curve: WeierstrassCurve
    # Leading coefficient of the cubic in the construction's own sign convention.
    L1: BigRat
    G: BigRat
    H: BigRat
    # +1 for the general construction; −1 for the three- and four-variable ones where X = L1·s and pₙ = −s.
    orientation: int = 1
    # Integral-model scale, the curve's coordinates are (u²X, u³Y) of the unscaled model.
    u: int = 1

    def __post_init__(self) -> None:
        """Check invariants that every construction must hold."""
        assert self.L1 != 0
        assert self.orientation in (1, -1)
        assert self.u > 0

    @property
    def cubic_coefficients(self) -> Tuple[BigRat, BigRat, BigRat, BigRat]:
        """(L₁, L₂, L₃, L₄) recovered from the unscaled curve as L₁, f, g/L₁, h/L₁²."""
        u = self.u
        return (
            self.L1,
            self.curve.f / u**2,
            self.curve.g / (self.L1 * u**4),
            self.curve.h / (self.L1**2 * u**6),
        )

    def variables(self, pn: RatLike) -> List[BigRat]:
        """The values p₁..pₙ determined by the last variable pₙ."""
        pn = as_rat(pn)
        middle = [A * pn + B for A, B in self.spec.params]
        return [self.G * pn + self.H] + middle + [pn]


def general_coefficients(spec: EquationSpec) -> Tuple[BigRat, BigRat, BigRat, BigRat, BigRat, BigRat]:
    """Compute (G, H, L₁, L₂, L₃, L₄) of the general construction."""
    a = spec.coeffs
    a1, an = a[0], a[-1]
    middle = list(zip(a[1:-1], spec.params))
    G = (-sum((ai * A for ai, (A, _) in middle), Fraction(0)) - an) / a1
    H = (-sum((ai * B for ai, (_, B) in middle), Fraction(0)) + 1) / a1
    L1 = -a1 * G**3 - sum((ai * A**3 for ai, (A, _) in middle), Fraction(0)) - an
    L2 = -3 * a1 * G**2 * H - sum((3 * ai * A**2 * B for ai, (A, B) in middle), Fraction(0))
    L3 = -3 * a1 * G * H**2 - sum((3 * ai * A * B**2 for ai, (A, B) in middle), Fraction(0))
    L4 = -a1 * H**3 - sum((ai * B**3 for ai, (_, B) in middle), Fraction(0))
    return G, H, L1, L2, L3, L4


def _curve_from_cubic(L1: BigRat, L2: BigRat, L3: BigRat, L4: BigRat) -> WeierstrassCurve:
    if L1 == 0:
        raise DegenerateParamsError("leading cubic coefficient L1 vanishes for these parameters")
    # Raises SingularCurveError when the discriminant vanishes.
    return WeierstrassCurve(L2, L3 * L1, L4 * L1**2)


def build_general(spec: EquationSpec) -> CurveConstruction:
    """Build the curve of the general n-term construction.

    Raises
    ------
    DegenerateParamsError
        If L₁ = 0.
    SingularCurveError
        If the resulting cubic is singular.
    """
    G, H, L1, L2, L3, L4 = general_coefficients(spec)
    curve = _curve_from_cubic(L1, L2, L3, L4)
    return CurveConstruction(spec=spec, curve=curve, L1=L1, G=G, H=H)


def map_three_to_general(a: int, b: int, c: int, A: RatLike, B: RatLike) -> EquationSpec:
    """Express the three-variable construction (q = As + B) as a general specification.

    With p₁ = p, p₂ = −q and p₃ = −s the general parameters are A₂ = A and B₂ = −B.
    """
    return EquationSpec((a, b, c), ((as_rat(A), -as_rat(B)),))


def map_four_to_general(
    a: int, b: int, c: int, d: int, A: RatLike, B: RatLike, D: RatLike, F: RatLike
) -> EquationSpec:
    """Express the four-variable construction (q = As + B, r = Ds + F) as a general specification.

    The coefficients are reordered to (a, b, d, c) so that s is the last variable: p₁ = p, p₂ = −q, p₃ = r, p₄ = −s,
    giving A₂ = A, B₂ = −B, A₃ = −D and B₃ = F.
    """
    return EquationSpec((a, b, d, c), ((as_rat(A), -as_rat(B)), (-as_rat(D), as_rat(F))))


def build_three(a: int, b: int, c: int, A: RatLike, B: RatLike) -> CurveConstruction:
    """Build the curve of ax⁴ + by⁴ + cz⁴ = au⁴ + bv⁴ + cw⁴ from the three-variable formulas.

    Uses x = m + p, y = m − q, z = m − s with ap − bq − cs = 1, q = As + B, Y = L₁m and X = L₁s.
    """
    spec = map_three_to_general(a, b, c, A, B)
    A, B = as_rat(A), as_rat(B)
    t = (b * A + c) / Fraction(a)
    w = (b * B + 1) / Fraction(a)
    L1 = -a * t**3 + b * A**3 + c
    L2 = -3 * a * t**2 * w + 3 * A**2 * B * b
    L3 = -3 * a * t * w**2 + 3 * A * B**2 * b
    L4 = -a * w**3 + b * B**3
    curve = _curve_from_cubic(L1, L2, L3, L4)
    return CurveConstruction(spec=spec, curve=curve, L1=L1, G=-t, H=w, orientation=-1)


def build_four(
    a: int, b: int, c: int, d: int, A: RatLike, B: RatLike, D: RatLike, F: RatLike
) -> CurveConstruction:
    """Build the curve of ax⁴ + by⁴ + cz⁴ + dt⁴ = au⁴ + bv⁴ + cw⁴ + dh⁴ from the four-variable formulas.

    Uses x = m + p, y = m − q, z = m − s, t = m + r with ap − bq − cs + dr = 1, q = As + B, r = Ds + F, Y = L₁m and
    X = L₁s.
    """
    spec = map_four_to_general(a, b, c, d, A, B, D, F)
    A, B, D, F = as_rat(A), as_rat(B), as_rat(D), as_rat(F)
    t = (b * A + c - d * D) / Fraction(a)
    w = (b * B - d * F + 1) / Fraction(a)
    L1 = -a * t**3 + b * A**3 + c - d * D**3
    L2 = -3 * a * t**2 * w + 3 * A**2 * B * b - 3 * d * D**2 * F
    L3 = -3 * a * t * w**2 + 3 * A * B**2 * b - 3 * D * F**2 * d
    L4 = -a * w**3 + b * B**3 - d * F**3
    curve = _curve_from_cubic(L1, L2, L3, L4)
    return CurveConstruction(spec=spec, curve=curve, L1=L1, G=-t, H=w, orientation=-1)


def integral_model(cons: CurveConstruction) -> CurveConstruction:
    """Rescale a construction so that f, g and h become integers.

    The scale u is the lcm of the coefficient denominators, which clears u²f, u⁴g and u⁶h though it is not always the
    smallest such u. Integral constructions are returned unchanged.
    """
    curve = cons.curve
    if curve.is_integral():
        return cons
    u = lcm_of_denominators([curve.f, curve.g, curve.h])
    return dataclasses.replace(cons, curve=curve.rescale(u), u=cons.u * u)
