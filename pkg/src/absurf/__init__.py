"""Exact positivity criteria for polarized abelian surfaces.

Decision kernels for property N_p, k-very-ampleness and Koszulness of an
ample line bundle on an abelian surface, driven by exact Seshadri
constants (Pell-equation and elliptic self-product cases) and by the
convex-region geometry of infinitesimal Newton-Okounkov bodies.  All
inequalities are decided in exact rational or real-quadratic arithmetic.
"""

from .errors import (
    AbsurfError,
    EpsOutOfRange,
    IncompatibleRadicands,
    InvalidSpec,
    MultiplicityTooSmall,
    NegativeRadicand,
    NonPositiveLength,
    NotAmple,
    ParameterOrderViolation,
    ParseError,
    PerfectSquare,
    UnsupportedSpec,
)
from .exactmath import (
    QuadraticValue,
    Rational,
    ceil_div_sqrt,
    parse_scalar,
    quad_compare,
    quad_sign,
    scalar_text,
    sqrt_exact,
    square_free_decomposition,
)
from .pell import (
    ContinuedFraction,
    PellSolution,
    continued_fraction_sqrt,
    convergents,
    pell_fundamental,
)
from .seshadri import (
    EllipticSquare,
    Explicit,
    PicardOne,
    SeshadriResult,
    SurfaceSpec,
    VeryGeneral,
    ample_check_elliptic_square,
    parse_surface_spec,
    self_intersection,
    seshadri_elliptic_square,
    seshadri_interval_very_general,
    seshadri_lower_bound_nonintegral,
    seshadri_of,
    seshadri_picard_one,
    spec_string,
)
from .regions import (
    Polygon,
    bounding_triangle,
    contains,
    inverted_simplex,
    polygon_area,
    region_delta,
    region_delta_alpha,
    slice_length,
)
from .criteria import (
    NpMaxResult,
    Rule,
    Status,
    Verdict,
    alpha_value,
    koszul_verdict,
    kvery_verdict,
    multiple_for_np,
    np_max,
    np_verdict,
    self_product_np,
)
from .svg import render_region_svg
from .sweep import SweepPlan, SweepRow, csv_text, json_text, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AbsurfError",
    "ContinuedFraction",
    "EllipticSquare",
    "EpsOutOfRange",
    "Explicit",
    "IncompatibleRadicands",
    "InvalidSpec",
    "MultiplicityTooSmall",
    "NegativeRadicand",
    "NonPositiveLength",
    "NotAmple",
    "NpMaxResult",
    "ParameterOrderViolation",
    "ParseError",
    "PellSolution",
    "PerfectSquare",
    "PicardOne",
    "Polygon",
    "QuadraticValue",
    "Rational",
    "Rule",
    "SeshadriResult",
    "Status",
    "SurfaceSpec",
    "SweepPlan",
    "SweepRow",
    "UnsupportedSpec",
    "Verdict",
    "VeryGeneral",
    "alpha_value",
    "ample_check_elliptic_square",
    "bounding_triangle",
    "ceil_div_sqrt",
    "contains",
    "continued_fraction_sqrt",
    "convergents",
    "csv_text",
    "inverted_simplex",
    "json_text",
    "koszul_verdict",
    "kvery_verdict",
    "multiple_for_np",
    "np_max",
    "np_verdict",
    "parse_scalar",
    "parse_surface_spec",
    "pell_fundamental",
    "polygon_area",
    "quad_compare",
    "quad_sign",
    "region_delta",
    "region_delta_alpha",
    "render_region_svg",
    "run_sweep",
    "scalar_text",
    "self_intersection",
    "self_product_np",
    "seshadri_elliptic_square",
    "seshadri_interval_very_general",
    "seshadri_lower_bound_nonintegral",
    "seshadri_of",
    "seshadri_picard_one",
    "slice_length",
    "spec_string",
    "sqrt_exact",
    "square_free_decomposition",
]
