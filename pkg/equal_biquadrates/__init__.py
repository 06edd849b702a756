"""equal_biquadrates module."""
# Import values here that should be re-exported as part of the public interface for easy importing from this library.
from equal_biquadrates.curves import INFINITY, AffinePoint, CurvePoint, Infinity, WeierstrassCurve, point  # noqa: F401
from equal_biquadrates.descent import (  # noqa: F401
    IntegerSolution,
    RationalTuple,
    SolutionClass,
    back_substitute,
    canonicalize,
    classify,
    clear_and_reduce,
    derive,
)
from equal_biquadrates.equations import (  # noqa: F401
    CurveConstruction,
    EquationSpec,
    build_four,
    build_general,
    build_three,
    integral_model,
    make_spec,
    map_four_to_general,
    map_three_to_general,
)
from equal_biquadrates.exact_arith import int_sqrt_exact, lcm_of_denominators, rat_make  # noqa: F401
from equal_biquadrates.log_limit import Progress, ProgressLimitFilter  # noqa: F401
from equal_biquadrates.pipeline import (  # noqa: F401
    SolutionReport,
    SolveRequest,
    load_fixture,
    solve,
    verify_identity,
)
from equal_biquadrates.point_search import SearchBounds, pick_candidate_generator, search_points  # noqa: F401
