"""Exact rational arithmetic: matrices, linear programming and psd tests."""

from .linalg import (
    Matrix,
    affine_hull,
    dot,
    fmt_q,
    inner,
    inverse,
    normalize_equation,
    nullspace,
    outer,
    primitive,
    rank,
    rref,
    solve,
    to_q,
    vadd,
    vec,
    vscale,
    vsub,
)
from .lp import (
    EQ,
    GE,
    LE,
    LpProblem,
    LpResult,
    check_farkas,
    check_feasible,
    check_optimal,
    check_ray,
    check_result,
    dual_value,
    lp_feasible_point,
    lp_solve,
)
from .psd import PsdResult, det, is_psd, principal_minors_psd, psd_check, quad

__all__ = [
    "Matrix", "affine_hull", "dot", "fmt_q", "inner", "inverse", "normalize_equation",
    "nullspace", "outer", "primitive", "rank", "rref", "solve", "to_q", "vadd", "vec",
    "vscale", "vsub", "EQ", "GE", "LE", "LpProblem", "LpResult", "check_farkas",
    "check_feasible", "check_optimal", "check_ray", "check_result", "dual_value",
    "lp_feasible_point", "lp_solve", "PsdResult", "det", "is_psd", "principal_minors_psd",
    "psd_check", "quad",
]
