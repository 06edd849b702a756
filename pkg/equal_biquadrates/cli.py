"""Command-line interface. Reads JSON records, writes JSON to standard output and logs to standard error."""
import sys
import json
import dataclasses
import logging
import argparse
from typing import Any, Dict, List, Optional, Sequence

from equal_biquadrates import codec
from equal_biquadrates.descent import back_substitute, derive
from equal_biquadrates.equations import integral_model
from equal_biquadrates.errors import BiquadrateError, InvalidInputError, VerificationError
from equal_biquadrates.exact_arith import encode_rat, parse_decimal
from equal_biquadrates.log_limit import ProgressLimitFilter
from equal_biquadrates.pipeline import (
    fixture_names,
    load_fixture,
    report_to_record,
    request_from_record,
    solve,
    verify_identity,
)
from equal_biquadrates.point_search import SearchBounds, pick_candidate_generator, search_points

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2


def _read_json(path: str) -> Any:
    """Read a JSON document from a file, or from standard input for "-".

    JSON integers of any length are accepted.
    """
    if path == "-":
        return json.load(sys.stdin, parse_int=parse_decimal)
    with open(path, encoding="utf-8") as json_file:
        return json.load(json_file, parse_int=parse_decimal)


def _write_json(record: Any) -> None:
    sys.stdout.write(json.dumps(record, indent=2) + "\n")


def _cmd_construct(args: argparse.Namespace) -> int:
    cons = codec.build_from_record(_read_json(args.spec))
    if args.integral:
        cons = integral_model(cons)
    _write_json(codec.encode_construction(cons))
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    curve = codec.decode_curve(_read_json(args.curve))
    bounds = SearchBounds(args.numerator_bound, args.denominator_bound)
    if args.workers < 1:
        raise InvalidInputError(f"--workers must be at least 1, got {args.workers}")
    points = search_points(curve, bounds, workers=args.workers)
    candidate = pick_candidate_generator(curve, points)
    _write_json(
        {
            "curve": codec.encode_curve(curve),
            "bounds": {"numerator_bound": bounds.numerator_bound, "denominator_bound": bounds.denominator_bound},
            "points": [codec.encode_point(p) for p in points],
            "candidate_generator": None if candidate is None else codec.encode_point(candidate),
        }
    )
    return EXIT_OK


def _cmd_derive(args: argparse.Namespace) -> int:
    cons = codec.decode_construction(_read_json(args.construction))
    try:
        point_record = json.loads(args.point, parse_int=parse_decimal)
    except json.JSONDecodeError as error:
        raise InvalidInputError(f"--point is not valid JSON: {error}") from error
    pt = codec.decode_point(point_record)
    if args.multiple != 1:
        pt = cons.curve.scalar_mul(args.multiple, pt)
    rational = back_substitute(cons, pt)
    solution = derive(cons, pt)
    _write_json(
        {
            "point": codec.encode_point(pt),
            "m": encode_rat(rational.m),
            "p": [encode_rat(p) for p in rational.p],
            "solution": codec.encode_solution(cons.spec, solution, args.multiple),
        }
    )
    return EXIT_OK if solution.verified else EXIT_VERIFICATION_FAILED


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.fixture is not None:
        req = load_fixture(args.fixture)
    elif args.request is not None:
        req = request_from_record(_read_json(args.request))
    else:
        raise InvalidInputError(f"give a request file or --fixture, one of: {', '.join(fixture_names())}")
    overrides: Dict[str, Any] = {}
    if args.multiples is not None:
        overrides["multiples"] = args.multiples
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.integral:
        overrides["integral_rescale"] = True
    if overrides:
        req = dataclasses.replace(req, **overrides)
    report = solve(req)
    _write_json(report_to_record(report))
    return EXIT_OK if report.all_verified else EXIT_VERIFICATION_FAILED


def _cmd_verify(args: argparse.Namespace) -> int:
    coeffs, x, y = codec.decode_identity(_read_json(args.identity))
    verified = verify_identity(coeffs, x, y)
    _write_json({"verified": verified})
    return EXIT_OK if verified else EXIT_VERIFICATION_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equal-biquadrates",
        description="Solve Σaᵢxᵢ⁴ = Σaᵢyᵢ⁴ through rational points of elliptic curves.",
    )
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument(
        "--progress-period", type=float, default=1.0, help="Minimum seconds between progress logs of one stream."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="Build the curve of an equation specification.")
    construct.add_argument("spec", help="Specification JSON file, '-' for standard input.")
    construct.add_argument("--integral", action="store_true", help="Rescale to integer coefficients.")
    construct.set_defaults(handler=_cmd_construct)

    search = commands.add_parser("search", help="Search for small rational points on a curve.")
    search.add_argument("curve", help="Curve or construction JSON file, '-' for standard input.")
    search.add_argument("--numerator-bound", type=int, required=True)
    search.add_argument("--denominator-bound", type=int, default=1)
    search.add_argument("--workers", type=int, default=1)
    search.set_defaults(handler=_cmd_search)

    derive_cmd = commands.add_parser("derive", help="Derive the integer solution of a curve point.")
    derive_cmd.add_argument("construction", help="Construction or specification JSON file, '-' for standard input.")
    derive_cmd.add_argument("--point", required=True, help='Point JSON, e.g. \'{"x": "450", "y": "6210"}\'.')
    derive_cmd.add_argument("--multiple", type=int, default=1, help="Derive from this multiple of the point.")
    derive_cmd.set_defaults(handler=_cmd_derive)

    solve_cmd = commands.add_parser("solve", help="Run the full pipeline for a request.")
    solve_cmd.add_argument("request", nargs="?", help="Request JSON file, '-' for standard input.")
    solve_cmd.add_argument("--fixture", help="Use a request shipped with the package instead.")
    solve_cmd.add_argument("--multiples", type=int)
    solve_cmd.add_argument("--workers", type=int)
    solve_cmd.add_argument("--integral", action="store_true", help="Rescale to integer coefficients first.")
    solve_cmd.set_defaults(handler=_cmd_solve)

    verify = commands.add_parser("verify", help="Check an identity exactly.")
    verify.add_argument("identity", help='JSON file with "coeffs" (or "spec"), "x" and "y".')
    verify.set_defaults(handler=_cmd_verify)
    return parser


def _attach_log_handler(level: str, progress_period: float) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s:%(name)s:%(message)s"))
    handler.addFilter(ProgressLimitFilter(period_sec=progress_period))
    package_logger = logging.getLogger("equal_biquadrates")
    package_logger.addHandler(handler)
    package_logger.setLevel(level)
    return handler


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code.

    Exit codes are 0 on success, 1 when an identity fails verification and 2 on invalid input.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    logger.debug("Running command %s", args.command)
    if args.progress_period < 0:
        parser.error("--progress-period must not be negative")
    package_logger = logging.getLogger("equal_biquadrates")
    previous_level = package_logger.level
    handler = _attach_log_handler(args.log_level, args.progress_period)
    try:
        code: int = args.handler(args)
        return code
    except VerificationError as error:
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (BiquadrateError, json.JSONDecodeError, UnicodeDecodeError, OSError) as error:
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    finally:
        package_logger.removeHandler(handler)
        package_logger.setLevel(previous_level)


def main(argv: Optional[List[str]] = None) -> None:
    """Entry point for the console script."""
    sys.exit(cli_main(argv))
