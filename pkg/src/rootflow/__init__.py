"""Scalar nonlinear-equation solvers built on a parameterized continuation
flow, with derivative-free difference-quotient variants, convergence-order
estimation, benchmarking, and basin-of-convergence mapping."""

from .problems import (
    DomainViolation,
    NonFiniteValue,
    ProblemSpec,
    builtin_problems,
    eval_f,
    eval_f_unchecked,
)
from .solvers import (
    BOOTSTRAPS,
    SCHEMES,
    STOP_RULES,
    DenominatorUnderflow,
    DerivativeZero,
    IterationTrace,
    RunOutcome,
    SolverConfig,
    StagnantPair,
    TracePoint,
    euler_flow_step,
    newton_step,
    run,
    secant_dyn_step,
    secant_step,
    wu_step,
    zheng_step,
)
from .analysis import (
    ConvergenceReport,
    InsufficientData,
    MissingDerivative,
    OrderEstimate,
    estimate_order,
    predicted_constant,
    verify_quadratic_convergence,
)
from .harness import (
    BasinCell,
    BasinGrid,
    BenchmarkRow,
    basin_to_csv,
    basin_to_grid_text,
    benchmark_verdicts_match,
    default_x0_axis,
    map_basin,
    rows_to_csv,
    run_benchmark,
    sweep_h,
    sweep_mu,
)

__version__ = "0.1.0"

__all__ = [
    "BOOTSTRAPS",
    "BasinCell",
    "BasinGrid",
    "BenchmarkRow",
    "ConvergenceReport",
    "DenominatorUnderflow",
    "DerivativeZero",
    "DomainViolation",
    "InsufficientData",
    "IterationTrace",
    "MissingDerivative",
    "NonFiniteValue",
    "OrderEstimate",
    "ProblemSpec",
    "RunOutcome",
    "SCHEMES",
    "STOP_RULES",
    "SolverConfig",
    "StagnantPair",
    "TracePoint",
    "basin_to_csv",
    "basin_to_grid_text",
    "benchmark_verdicts_match",
    "builtin_problems",
    "default_x0_axis",
    "estimate_order",
    "eval_f",
    "eval_f_unchecked",
    "euler_flow_step",
    "map_basin",
    "newton_step",
    "predicted_constant",
    "rows_to_csv",
    "run",
    "run_benchmark",
    "secant_dyn_step",
    "secant_step",
    "sweep_h",
    "sweep_mu",
    "verify_quadratic_convergence",
    "wu_step",
    "zheng_step",
]
