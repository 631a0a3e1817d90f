"""Commutative four-dimensional hypercomplex numbers.

Four algebras over quads u = x + alpha*y + beta*z + gamma*t — circular,
hyperbolic, planar and polar — with exact decoupling into complex planes
and real lines, closed-form inverses, exponential/trigonometric forms,
elementary functions, power series, loop integrals with residues,
polynomial factorization, and 4x4 matrix representations.
"""

from .algebra_core import (
    BACKEND,
    DEFAULT_TOL,
    AlgebraKind,
    Amplitude,
    Quad,
    QuadfieldError,
    SingularityReport,
    SingularValue,
    add,
    amplitude,
    inverse,
    modulus,
    mul,
    neg,
    one,
    pow_int,
    quad_from_dict,
    quad_from_json,
    quad_to_dict,
    quad_to_json,
    scale,
    singularity,
    sub,
    units,
    zero,
)
from .calculus import (
    ConvergenceBounds,
    DegenerateSeries,
    Loop,
    NearBoundaryWarning,
    OnBoundary,
    SeriesSpec,
    SingularOnPath,
    WindingQuery,
    check_analytic,
    check_second_order,
    convergence_bounds,
    eval_series,
    eval_series_canonical,
    integrate_loop,
    residue_prediction,
    winding,
)
from .canonical import (
    CANONICAL_BASES,
    DomainError,
    ExpForm,
    TrigForm,
    canonical_mul,
    exp_form,
    expform_from_dict,
    expform_to_dict,
    from_canonical,
    from_exp_form,
    from_trig_form,
    plane_join,
    plane_split,
    to_canonical,
    trig_form,
)
from .elementary import (
    CosexpFamily,
    CosexpKind,
    cos,
    cosexp,
    cosexp_series,
    cosh,
    exp,
    exp_factored,
    f4,
    g4,
    log,
    pow_real,
    sin,
    sinh,
)
from .matrix_rep import (
    CHANGE_OF_BASIS,
    Matrix4,
    block_diagonalize,
    determinant,
    represent,
)
from .polynomial import (
    ComplexQuad,
    Factorization,
    NoConvergence,
    Poly,
    enumerate_factorizations,
    eval_poly,
    factor,
    pair_conjugates,
    quadratic_factor,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraKind",
    "Amplitude",
    "BACKEND",
    "CANONICAL_BASES",
    "CHANGE_OF_BASIS",
    "ComplexQuad",
    "ConvergenceBounds",
    "CosexpFamily",
    "CosexpKind",
    "DEFAULT_TOL",
    "DegenerateSeries",
    "DomainError",
    "ExpForm",
    "Factorization",
    "Loop",
    "Matrix4",
    "NearBoundaryWarning",
    "NoConvergence",
    "OnBoundary",
    "Poly",
    "Quad",
    "QuadfieldError",
    "SeriesSpec",
    "SingularOnPath",
    "SingularValue",
    "SingularityReport",
    "TrigForm",
    "WindingQuery",
    "add",
    "amplitude",
    "block_diagonalize",
    "canonical_mul",
    "check_analytic",
    "check_second_order",
    "convergence_bounds",
    "cos",
    "cosexp",
    "cosexp_series",
    "cosh",
    "determinant",
    "enumerate_factorizations",
    "eval_poly",
    "eval_series",
    "eval_series_canonical",
    "exp",
    "exp_factored",
    "exp_form",
    "expform_from_dict",
    "expform_to_dict",
    "f4",
    "factor",
    "from_canonical",
    "from_exp_form",
    "from_trig_form",
    "g4",
    "integrate_loop",
    "inverse",
    "log",
    "modulus",
    "mul",
    "neg",
    "one",
    "pair_conjugates",
    "plane_join",
    "plane_split",
    "pow_int",
    "pow_real",
    "quad_from_dict",
    "quad_from_json",
    "quad_to_dict",
    "quad_to_json",
    "quadratic_factor",
    "reconstruct",
    "represent",
    "residue_prediction",
    "scale",
    "sin",
    "singularity",
    "sinh",
    "sub",
    "to_canonical",
    "trig_form",
    "units",
    "winding",
    "zero",
]
