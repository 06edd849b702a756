"""Module for the end-to-end pipeline: construct, find or take a generator, derive multiples, verify and dedupe."""
# Postponed annotations will be automatic starting with Python 3.11.
from __future__ import annotations

import json
import logging
from pathlib import Path
from dataclasses import dataclass, field
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple, Union

from equal_biquadrates import codec
from equal_biquadrates.curves import INFINITY, CurvePoint, Infinity, scale_point
from equal_biquadrates.descent import IntegerSolution, SolutionClass, SolutionKind, derive, weighted_power_sum
from equal_biquadrates.equations import CurveConstruction, EquationSpec, build_general, integral_model
from equal_biquadrates.errors import InvalidInputError, NoGeneratorFoundError, NotOnCurveError, VerificationError
from equal_biquadrates.exact_arith import BigInt, decode_int
from equal_biquadrates.log_limit import Progress
from equal_biquadrates.point_search import SearchBounds, pick_candidate_generator, search_points

logger = logging.getLogger(__name__)

# Version of the request record format, bumped on incompatible changes.
REQUEST_VERSION = 1
FIXTURES_DIR = Path(__file__).parent / "fixtures"


def verify_identity(spec: Union[EquationSpec, Sequence[int]], x: Sequence[BigInt], y: Sequence[BigInt]) -> bool:
    """Whether Σaᵢxᵢ⁴ = Σaᵢyᵢ⁴ holds exactly.

    Parameters
    ----------
    spec
        The equation, or just its coefficients a₁..aₙ.
    x, y
        The two sides, both of length n.

    Raises
    ------
    InvalidInputError
        If the lengths of the sides and the coefficients differ.
    """
    coeffs = spec.coeffs if isinstance(spec, EquationSpec) else tuple(spec)
    if not len(coeffs) == len(x) == len(y):
        raise InvalidInputError(f"lengths differ: {len(coeffs)} coefficients, {len(x)} and {len(y)} values")
    return weighted_power_sum(coeffs, x) == weighted_power_sum(coeffs, y)


@dataclass(frozen=True)
class SolveRequest:
    """Everything needed to run the pipeline for one equation."""

    spec: EquationSpec
    # Generator in the coordinates of the unscaled construction. Searched for when missing.
    generator: Optional[CurvePoint] = None
    # Number of multiples kP, k = 1..multiples, to derive.
    multiples: int = 1
    search_bounds: Optional[SearchBounds] = None
    # Move to an integral model first when f, g, h are not all integers.
    integral_rescale: bool = False
    # Processes used for point search and derivation.
    workers: int = 1

    def __post_init__(self) -> None:
        """Check the request's invariants.

        Raises
        ------
        InvalidInputError
            If neither a generator nor search bounds are given, or a count is out of range.
        """
        if self.generator is None and self.search_bounds is None:
            raise InvalidInputError("a request needs a generator or search bounds")
        if self.multiples < 0:
            raise InvalidInputError(f"multiples must not be negative, got {self.multiples}")
        if self.workers < 1:
            raise InvalidInputError(f"workers must be at least 1, got {self.workers}")


@dataclass
class SolutionReport:
    """Result of `solve`: the construction, the generator used and the distinct verified solutions."""

    construction: CurveConstruction
    generator: Optional[CurvePoint] = None
    # Pairs (k, solution of kP) in increasing k, one per distinct canonical solution.
    solutions: List[Tuple[int, IntegerSolution]] = field(default_factory=list)
    # Multiples whose canonical solution repeated an earlier one.
    duplicates: int = 0
    # Set when kP reached infinity, which ends the multiples early.
    torsion_order: Optional[int] = None

    @property
    def counts(self) -> Dict[SolutionKind, int]:
        """Number of listed solutions per class."""
        counts: Dict[SolutionKind, int] = {
            SolutionClass.NONTRIVIAL: 0,
            SolutionClass.TRIVIAL_PERMUTATION: 0,
            SolutionClass.DEGENERATE: 0,
        }
        for _, solution in self.solutions:
            counts[solution.kind] += 1
        return counts

    @property
    def all_verified(self) -> bool:
        """Whether every listed solution passed exact verification."""
        return all(solution.verified for _, solution in self.solutions)


def _find_generator(cons: CurveConstruction, bounds: SearchBounds, workers: int) -> CurvePoint:
    points = search_points(cons.curve, bounds, workers=workers)
    generator = pick_candidate_generator(cons.curve, points)
    if generator is None:
        raise NoGeneratorFoundError(f"none of {len(points)} points within {bounds} has infinite order")
    logger.info("Picked generator %s out of %d points", generator, len(points))
    return generator


def _affine_multiples(
    cons: CurveConstruction, generator: CurvePoint, count: int
) -> Tuple[List[CurvePoint], Optional[int]]:
    """The multiples P, 2P, ... up to count·P, stopping early with the order k if kP is the point at infinity."""
    points: List[CurvePoint] = []
    current: CurvePoint = INFINITY
    for k in range(1, count + 1):
        current = cons.curve.add(current, generator)
        if isinstance(current, Infinity):
            logger.info("Multiple %d of %s is the point at infinity, stopping", k, generator)
            return points, k
        points.append(current)
        logger.info("Computed multiple %d of %d", k, count, extra=Progress(stream_id="multiples"))
    return points, None


def _derive_all(cons: CurveConstruction, points: List[CurvePoint], workers: int) -> List[IntegerSolution]:
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            # map() keeps the input order.
            return list(executor.map(derive, [cons] * len(points), points))
    return [derive(cons, pt) for pt in points]


def solve(req: SolveRequest) -> SolutionReport:
    """Derive the solutions from the multiples P, 2P, ..., KP of a generator.

    Every solution is verified exactly again before it is listed, and multiples whose canonical solution was already
    listed are counted as duplicates instead.

    Raises
    ------
    NoGeneratorFoundError
        If no generator was given and the search found no point of infinite order.
    NotOnCurveError
        If the given generator is not on the curve.
    VerificationError
        If a derived solution is not balanced.
    """
    cons = build_general(req.spec)
    generator = req.generator
    if req.integral_rescale:
        cons = integral_model(cons)
        if generator is not None:
            generator = scale_point(generator, cons.u)
    if generator is not None and not cons.curve.contains(generator):
        raise NotOnCurveError(f"generator {generator} is not on {cons.curve}")
    report = SolutionReport(construction=cons, generator=generator)
    if req.multiples == 0:
        return report

    if generator is None:
        assert req.search_bounds is not None
        generator = _find_generator(cons, req.search_bounds, req.workers)
        report.generator = generator

    points, report.torsion_order = _affine_multiples(cons, generator, req.multiples)
    seen: Set[Tuple[Tuple[BigInt, ...], Tuple[BigInt, ...]]] = set()
    for k, solution in enumerate(_derive_all(cons, points, req.workers), start=1):
        if not (solution.verified and verify_identity(cons.spec, solution.x, solution.y)):
            raise VerificationError(f"solution derived from multiple {k} is not balanced: {solution}")
        key = (solution.x, solution.y)
        if key in seen:
            logger.debug("Multiple %d repeats an earlier solution", k)
            report.duplicates += 1
            continue
        seen.add(key)
        report.solutions.append((k, solution))
    logger.info("Derived %d distinct solutions (%d duplicates)", len(report.solutions), report.duplicates)
    return report


def _bounds_from_record(record: Any) -> SearchBounds:
    if not isinstance(record, dict):
        raise InvalidInputError(f"expected search bounds object, got {record!r}")
    return SearchBounds(decode_int(record.get("numerator_bound")), decode_int(record.get("denominator_bound")))


def request_from_record(record: Any) -> SolveRequest:
    """Decode a request record, the format also used by the fixture files."""
    if not isinstance(record, dict):
        raise InvalidInputError(f"expected a request object, got {record!r}")
    version = decode_int(record.get("version", REQUEST_VERSION))
    if version != REQUEST_VERSION:
        raise InvalidInputError(f"unsupported request version {version}")
    if "spec" not in record:
        raise InvalidInputError("request is missing its 'spec'")
    generator = record.get("generator")
    bounds = record.get("search_bounds")
    integral_rescale = record.get("integral_rescale", False)
    if not isinstance(integral_rescale, bool):
        raise InvalidInputError(f"integral_rescale must be true or false, got {integral_rescale!r}")
    return SolveRequest(
        spec=codec.decode_spec(record["spec"]),
        generator=None if generator is None else codec.decode_point(generator),
        multiples=decode_int(record.get("multiples", 1)),
        search_bounds=None if bounds is None else _bounds_from_record(bounds),
        integral_rescale=integral_rescale,
        workers=decode_int(record.get("workers", 1)),
    )


def report_to_record(report: SolutionReport) -> Dict[str, Any]:
    """Encode a report; identical reports give identical records."""
    spec = report.construction.spec
    return {
        "construction": codec.encode_construction(report.construction),
        "generator": None if report.generator is None else codec.encode_point(report.generator),
        "solutions": [codec.encode_solution(spec, solution, k) for k, solution in report.solutions],
        "counts": dict(report.counts),
        "duplicates": report.duplicates,
        "torsion_order": report.torsion_order,
        "all_verified": report.all_verified,
    }


def fixture_names() -> List[str]:
    """Names of the request fixtures shipped with the package."""
    return sorted(path.stem for path in FIXTURES_DIR.glob("*.json"))


def load_fixture(name: str) -> SolveRequest:
    """Load a shipped request fixture by name.

    Raises
    ------
    InvalidInputError
        If no fixture has that name.
    """
    path = FIXTURES_DIR / f"{name}.json"
    if not path.is_file():
        raise InvalidInputError(f"unknown fixture {name!r}, available: {', '.join(fixture_names())}")
    with path.open(encoding="utf-8") as fixture_file:
        return request_from_record(json.load(fixture_file))
