"""Module for bounded search of small rational points on integral curves."""
# Postponed annotations will be automatic starting with Python 3.11.
from __future__ import annotations

import math
import logging
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from equal_biquadrates.curves import AffinePoint, CurvePoint, Infinity, WeierstrassCurve
from equal_biquadrates.errors import InvalidInputError, NonIntegralModelError
from equal_biquadrates.exact_arith import int_sqrt_exact, rat_make
from equal_biquadrates.log_limit import Progress

logger = logging.getLogger(__name__)

# Largest order of a rational torsion point on an elliptic curve over the rationals (Mazur).
MAX_TORSION_ORDER = 12

# A found point as (s, r, t) meaning (r/s², t/s³).
_Hit = Tuple[int, int, int]


@dataclass(frozen=True)
class SearchBounds:
    """Limits of the search over points (r/s², t/s³)."""

    # Bound on |r| / s², i.e. on |X|.
    numerator_bound: int
    # Bound on s.
    denominator_bound: int

    def __post_init__(self) -> None:
        """Check that both bounds are positive.

        Raises
        ------
        InvalidInputError
            If a bound is smaller than 1.
        """
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise InvalidInputError(f"search bounds must be at least 1, got {self}")


def _scan(coeffs: Tuple[int, int, int], s: int, r_low: int, r_high: int) -> List[_Hit]:
    """Test r in [r_low, r_high] for a square value of s⁶ times the cubic at r/s²."""
    f, g, h = coeffs
    s2 = s * s
    f_s2, g_s4, h_s6 = f * s2, g * s2 * s2, h * s2 * s2 * s2
    hits: List[_Hit] = []
    for r in range(r_low, r_high + 1):
        # Only reduced fractions r/s²; others were already seen with a smaller s.
        if s > 1 and math.gcd(r, s) != 1:
            continue
        t = int_sqrt_exact(((r + f_s2) * r + g_s4) * r + h_s6)
        if t is not None:
            hits.append((s, r, t))
    return hits


def _chunks(low: int, high: int, count: int) -> List[Tuple[int, int]]:
    size = max(1, -(-(high - low + 1) // count))
    return [(start, min(start + size - 1, high)) for start in range(low, high + 1, size)]


def search_points(curve: WeierstrassCurve, bounds: SearchBounds, workers: int = 1) -> List[CurvePoint]:
    """Find all points (r/s², t/s³) with |r| ≤ numerator_bound·s², 1 ≤ s ≤ denominator_bound and t ≥ 0.

    Parameters
    ----------
    curve
        Curve with integer coefficients.
    bounds
        Search limits.
    workers
        Number of processes to split every numerator range across. Results are merged back into the same
        deterministic order: ascending s, then ascending r.

    Raises
    ------
    NonIntegralModelError
        If the curve's coefficients are not all integers.
    """
    assert workers >= 1
    if not curve.is_integral():
        raise NonIntegralModelError(f"point search needs integer coefficients, got {curve}")
    coeffs = (int(curve.f), int(curve.g), int(curve.h))
    hits: List[_Hit] = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for s in range(1, bounds.denominator_bound + 1):
            logger.info(
                "Searching denominator s=%d of %d (%d points so far)",
                s,
                bounds.denominator_bound,
                len(hits),
                extra=Progress(stream_id="point-search"),
            )
            limit = bounds.numerator_bound * s * s
            if executor is None:
                hits.extend(_scan(coeffs, s, -limit, limit))
                continue
            futures = [executor.submit(_scan, coeffs, s, lo, hi) for lo, hi in _chunks(-limit, limit, workers)]
            for future in futures:
                hits.extend(future.result())
    finally:
        if executor is not None:
            executor.shutdown()
    hits.sort()
    logger.debug("Point search with %s found %d points", bounds, len(hits))
    return [AffinePoint(rat_make(r, s * s), rat_make(t, s**3)) for s, r, t in hits]


def pick_candidate_generator(curve: WeierstrassCurve, points: Sequence[CurvePoint]) -> Optional[CurvePoint]:
    """Return the first point whose multiples kP, 1 ≤ k ≤ 12, are all affine.

    A rational torsion point has order at most 12, so a point passing this test has infinite order.
    """
    for candidate in points:
        if isinstance(candidate, Infinity):
            continue
        multiples = curve.multiples(candidate, MAX_TORSION_ORDER)
        if not any(isinstance(q, Infinity) for q in multiples):
            return candidate
        logger.debug("Rejected torsion point %s", candidate)
    return None
