"""Module for turning curve points back into integer solutions of Σaᵢxᵢ⁴ = Σaᵢyᵢ⁴."""
# Postponed annotations will be automatic starting with Python 3.11.
from __future__ import annotations

import math
import dataclasses
from dataclasses import dataclass
from typing import List, Literal, Sequence, Tuple

from equal_biquadrates.curves import CurvePoint, Infinity
from equal_biquadrates.equations import CurveConstruction, EquationSpec
from equal_biquadrates.errors import NotOnCurveError, PointAtInfinityError
from equal_biquadrates.exact_arith import BigInt, BigRat, lcm_of_denominators

# Type for the triviality classification of a solution.
SolutionKind = Literal["nontrivial", "trivial_permutation", "degenerate"]


# We don't use an Enum so that the plain string values can be used directly in JSON records and comparisons.
class SolutionClass:
    """Classification constants for integer solutions."""

    # Some coefficient group has different values on the two sides.
    NONTRIVIAL: SolutionKind = "nontrivial"
    # Within every coefficient group one side is a permutation of the other.
    TRIVIAL_PERMUTATION: SolutionKind = "trivial_permutation"
    # Every entry is zero.
    DEGENERATE: SolutionKind = "degenerate"


@dataclass(frozen=True)
class RationalTuple:
    """Rational values m, p₁..pₙ with Σaᵢpᵢ = 1 and m² = −Σaᵢpᵢ³."""

    m: BigRat
    p: Tuple[BigRat, ...]

    def satisfies(self, spec: EquationSpec) -> bool:
        """Whether both defining relations hold exactly for the coefficients of `spec`."""
        linear = sum(a * p for a, p in zip(spec.coeffs, self.p))
        cubic = -sum(a * p**3 for a, p in zip(spec.coeffs, self.p))
        return len(self.p) == spec.n and linear == 1 and self.m**2 == cubic


@dataclass(frozen=True)
class IntegerSolution:
    """A reduced solution in non-negative integers, entries in coefficient order."""

    x: Tuple[BigInt, ...]
    y: Tuple[BigInt, ...]
    # Common multiple of the denominators that was used to clear m ± pᵢ.
    scale: BigInt
    kind: SolutionKind
    verified: bool = False

    @property
    def has_zero(self) -> bool:
        """Whether any entry is zero, which is allowed but worth surfacing."""
        return 0 in self.x or 0 in self.y


def weighted_power_sum(coeffs: Sequence[int], values: Sequence[BigInt], power: int = 4) -> BigInt:
    """Σaᵢvᵢ^power with exact integers."""
    return sum(a * v**power for a, v in zip(coeffs, values))


def back_substitute(cons: CurveConstruction, pt: CurvePoint) -> RationalTuple:
    """Recover m and p₁..pₙ from a point through m = Y/L₁ and pₙ = X/L₁.

    Raises
    ------
    PointAtInfinityError
        If `pt` is the point at infinity.
    NotOnCurveError
        If `pt` is not on the construction's curve.
    """
    if isinstance(pt, Infinity):
        raise PointAtInfinityError("the point at infinity has no affine coordinates to substitute")
    if not cons.curve.contains(pt):
        raise NotOnCurveError(f"{pt} is not on {cons.curve}")
    # Undo the integral-model rescale first.
    x = pt.x / cons.u**2
    y = pt.y / cons.u**3
    m = y / cons.L1
    pn = cons.orientation * x / cons.L1
    result = RationalTuple(m=m, p=tuple(cons.variables(pn)))
    assert result.satisfies(cons.spec)
    return result


def _classify_sides(spec: EquationSpec, x: Sequence[BigInt], y: Sequence[BigInt]) -> SolutionKind:
    if all(v == 0 for v in x) and all(v == 0 for v in y):
        return SolutionClass.DEGENERATE
    for group in spec.coefficient_groups():
        if sorted(x[i] for i in group) != sorted(y[i] for i in group):
            return SolutionClass.NONTRIVIAL
    return SolutionClass.TRIVIAL_PERMUTATION


def classify(spec: EquationSpec, s: IntegerSolution) -> SolutionKind:
    """Classify a balanced solution.

    A solution is a trivial permutation when, for every group of indices sharing a coefficient value, the x-entries
    and the y-entries are the same multiset. All-zero solutions are degenerate; everything else is nontrivial.
    """
    return _classify_sides(spec, s.x, s.y)


def clear_and_reduce(spec: EquationSpec, t: RationalTuple) -> IntegerSolution:
    """Clear denominators of m ± pᵢ and divide out the common gcd of all 2n entries.

    xᵢ = |λ(m + pᵢ)| and yᵢ = |λ(m − pᵢ)| with λ the lcm of all denominators. Fourth powers are sign-blind and the
    equation is homogeneous, so both steps keep it balanced. The gcd is taken across both sides jointly, a per-side
    reduction would break the balance.
    """
    plus = [t.m + p for p in t.p]
    minus = [t.m - p for p in t.p]
    scale = lcm_of_denominators(plus + minus)
    x = [abs(int(v * scale)) for v in plus]
    y = [abs(int(v * scale)) for v in minus]
    common = math.gcd(*x, *y)
    if common > 1:
        x = [v // common for v in x]
        y = [v // common for v in y]
    return IntegerSolution(x=tuple(x), y=tuple(y), scale=scale, kind=_classify_sides(spec, x, y))


def _sorted_within_groups(groups: List[List[int]], values: Sequence[BigInt]) -> Tuple[BigInt, ...]:
    result = list(values)
    for group in groups:
        for index, value in zip(group, sorted(values[i] for i in group)):
            result[index] = value
    return tuple(result)


def canonicalize(spec: EquationSpec, s: IntegerSolution) -> IntegerSolution:
    """Canonical form of a solution.

    Entries sharing a coefficient value may be permuted freely, so each side is sorted ascending within every group of
    equal coefficients. The two sides are then ordered so that x ≤ y lexicographically.
    """
    groups = spec.coefficient_groups()
    x = _sorted_within_groups(groups, s.x)
    y = _sorted_within_groups(groups, s.y)
    if y < x:
        x, y = y, x
    return dataclasses.replace(s, x=x, y=y)


def derive(cons: CurveConstruction, pt: CurvePoint) -> IntegerSolution:
    """Derive the canonical, classified and verified integer solution belonging to a curve point.

    Raises
    ------
    PointAtInfinityError
        If `pt` is the point at infinity.
    NotOnCurveError
        If `pt` is not on the construction's curve.
    """
    spec = cons.spec
    solution = canonicalize(spec, clear_and_reduce(spec, back_substitute(cons, pt)))
    verified = weighted_power_sum(spec.coeffs, solution.x) == weighted_power_sum(spec.coeffs, solution.y)
    return dataclasses.replace(solution, verified=verified)
