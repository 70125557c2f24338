"""Solver and condition analysis for the clamped coupled-order fractional
Langevin boundary value problem

    D^beta (D^alpha + gamma) x(t) = f(t, x(t), x'(t)),   t in (0, 1),
    x(0) = x(1) = x'(0) = x'(1) = 0,   0 < alpha <= 1,  2 < beta <= 3,

via its Green-kernel integral reformulation and Picard iteration in the
C^1 norm.  See README.md for the CLI and the verification suite.
"""

from .analysis import (
    ConditionReport,
    GrowthSpec,
    LipschitzSpec,
    check_existence,
    check_uniqueness,
    compute_constants,
    compute_psi,
    existence_radius,
)
from .fraccalc import (
    FracOrder,
    PowerTerm,
    caputo_poly,
    caputo_power,
    gamma_fn,
    rl_integral_power,
)
from .kernels import KernelValue, OrderParams, eval_G, eval_G_dt, eval_H, eval_H_dt
from .oracle import (
    ManufacturedCase,
    closed_form_constant_forcing,
    dense_reference,
    manufactured_poly,
)
from .quadrature import Grid, backend_name, fredholm_weights, product_weights, volterra_matrix
from .solver import (
    ProblemSpec,
    SolutionField,
    SolveReport,
    ZOperator,
    apply_Z,
    c1_norm,
    picard_solve,
    residual_sup,
)

__version__ = "0.1.0"

__all__ = [
    "ConditionReport", "GrowthSpec", "LipschitzSpec", "check_existence",
    "check_uniqueness", "compute_constants", "compute_psi", "existence_radius",
    "FracOrder", "PowerTerm", "caputo_poly", "caputo_power", "gamma_fn",
    "rl_integral_power", "KernelValue", "OrderParams", "eval_G", "eval_G_dt",
    "eval_H", "eval_H_dt", "ManufacturedCase", "closed_form_constant_forcing",
    "dense_reference", "manufactured_poly", "Grid", "backend_name",
    "fredholm_weights", "product_weights", "volterra_matrix", "ProblemSpec",
    "SolutionField", "SolveReport", "ZOperator", "apply_Z", "c1_norm",
    "picard_solve", "residual_sup", "__version__",
]
