"""Benchmark runner, parameter sweeps, and basin-of-convergence mapping.

The benchmark runs the three registry problems under Newton, the one-point
difference-quotient scheme, and the two-point scheme, each with its curated
parameter value, and reports verdicts, iteration counts and 6-decimal
roots.  Sweeps vary mu or the Euler step length h.  The basin mapper grids
initial values (and mu) and runs every cell independently, which quantifies
how much wider the two-point scheme's set of workable starting points is.

Exhausted runs are reported as "divergence" here, with the precise reason
retained in the CSV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple, Sequence

from .problems import ProblemSpec, builtin_problems
from .solvers import SolverConfig, RunOutcome, run

VERDICT_CONVERGED = "converged"
VERDICT_DIVERGENCE = "divergence"

CSV_HEADER = "problem,scheme,mu,h,x0,verdict,reason,iterations,final_x,residual"

BENCH_PROBLEM_ORDER = ("log", "exp", "trig")
BENCH_SCHEME_ORDER = ("newton", "zheng", "secant_dyn")

# Curated per-problem parameter values for the benchmark.
BENCH_MU = {
    "zheng": {
        "log": 1.0,
        "exp": 1.0 + 1.0 / math.e,
        "trig": 0.5 + math.sqrt(3.0) / 6.0,
    },
    "secant_dyn": {
        "log": 0.135,
        "exp": 1.18,
        "trig": 2.65,
    },
}

# The benchmark's reference verdict pattern: Newton diverges on all three
# problems, the one-point scheme converges only on log, the two-point
# scheme converges on all three.
BENCH_EXPECTED_VERDICTS = {
    ("log", "newton"): VERDICT_DIVERGENCE,
    ("log", "zheng"): VERDICT_CONVERGED,
    ("log", "secant_dyn"): VERDICT_CONVERGED,
    ("exp", "newton"): VERDICT_DIVERGENCE,
    ("exp", "zheng"): VERDICT_DIVERGENCE,
    ("exp", "secant_dyn"): VERDICT_CONVERGED,
    ("trig", "newton"): VERDICT_DIVERGENCE,
    ("trig", "zheng"): VERDICT_DIVERGENCE,
    ("trig", "secant_dyn"): VERDICT_CONVERGED,
}


@dataclass(frozen=True)
class BenchmarkRow:
    """One (problem, scheme, mu, x0) experiment in benchmark-table form.

    Divergent rows carry no iteration count and no final root; the cause
    stays in ``reason`` and the last accepted residual in ``residual``.
    """

    problem: str
    scheme: str
    mu: float
    h: float
    x0: float
    verdict: str
    reason: str
    iterations: int | None
    final_x: float | None
    residual: float


class BasinCell(NamedTuple):
    verdict: str
    iterations: int | None
    reason: str
    final_x: float | None
    residual: float


@dataclass(frozen=True)
class BasinGrid:
    """Verdict matrix over a mu axis and an initial-value axis.

    ``cells[i][j]`` is the outcome for ``mu_axis[i]`` and ``x0_axis[j]``;
    every cell is an independent pure run.
    """

    problem: str
    scheme: str
    mu_axis: tuple[float, ...]
    x0_axis: tuple[float, ...]
    cells: tuple[tuple[BasinCell, ...], ...]

    def converged_fraction(self, mu_index: int) -> float:
        row = self.cells[mu_index]
        return sum(1 for c in row if c.verdict == VERDICT_CONVERGED) / len(row)


def _row_from_outcome(p: ProblemSpec, scheme: str, mu: float, h: float, x0: float,
                      outcome: RunOutcome) -> BenchmarkRow:
    converged = outcome.converged
    return BenchmarkRow(
        problem=p.name,
        scheme=scheme,
        mu=mu,
        h=h,
        x0=x0,
        verdict=VERDICT_CONVERGED if converged else VERDICT_DIVERGENCE,
        reason=outcome.reason,
        iterations=outcome.iterations if converged else None,
        final_x=outcome.final_x if converged else None,
        residual=abs(outcome.trace.points[-1].fx),
    )


def _cell_from_outcome(outcome: RunOutcome) -> BasinCell:
    converged = outcome.converged
    return BasinCell(
        verdict=VERDICT_CONVERGED if converged else VERDICT_DIVERGENCE,
        iterations=outcome.iterations if converged else None,
        reason=outcome.reason,
        final_x=outcome.final_x if converged else None,
        residual=abs(outcome.trace.points[-1].fx),
    )


def run_benchmark(epsilon: float = 1e-5, max_iters: int = 500) -> list[BenchmarkRow]:
    """Run the 3 problems x 3 methods reference benchmark.

    Returns nine rows in problem-major order (newton, zheng, secant_dyn
    within each problem), each run from the problem's default initial value
    with the curated mu for the parameterized schemes.
    """
    problems = builtin_problems()
    rows = []
    for pname in BENCH_PROBLEM_ORDER:
        p = problems[pname]
        for scheme in BENCH_SCHEME_ORDER:
            mu = BENCH_MU.get(scheme, {}).get(pname, 0.0)
            cfg = SolverConfig(scheme=scheme, mu=mu, epsilon=epsilon, max_iters=max_iters)
            outcome = run(p, cfg, p.default_x0)
            rows.append(_row_from_outcome(p, scheme, mu, cfg.h, p.default_x0, outcome))
    return rows


def benchmark_verdicts_match(rows: Iterable[BenchmarkRow]) -> bool:
    """True when the rows reproduce the reference verdict pattern exactly."""
    actual = {(r.problem, r.scheme): r.verdict for r in rows}
    return actual == BENCH_EXPECTED_VERDICTS


def sweep_mu(p: ProblemSpec, scheme: str, mu_values: Sequence[float], x0: float,
             cfg: SolverConfig | None = None) -> list[BenchmarkRow]:
    """One benchmark row per mu, in input order."""
    if not mu_values:
        raise ValueError("mu_values must be non-empty")
    base = cfg if cfg is not None else SolverConfig()
    rows = []
    for mu in mu_values:
        c = replace(base, scheme=scheme, mu=mu)
        rows.append(_row_from_outcome(p, scheme, mu, c.h, x0, run(p, c, x0)))
    return rows


def sweep_h(p: ProblemSpec, mu: float, h_values: Sequence[float], x0: float,
            cfg: SolverConfig | None = None) -> list[BenchmarkRow]:
    """One row per Euler step length h, for the euler_flow scheme."""
    if not h_values:
        raise ValueError("h_values must be non-empty")
    if p.df is None:
        raise ValueError(f"problem {p.name!r} has no derivative; euler_flow needs one")
    if any(h <= 0.0 for h in h_values):
        raise ValueError("all h values must be positive")
    base = cfg if cfg is not None else SolverConfig()
    rows = []
    for h in h_values:
        c = replace(base, scheme="euler_flow", mu=mu, h=h)
        rows.append(_row_from_outcome(p, "euler_flow", mu, h, x0, run(p, c, x0)))
    return rows


def map_basin(p: ProblemSpec, scheme: str, mu_axis: Sequence[float],
              x0_axis: Sequence[float], cfg: SolverConfig | None = None) -> BasinGrid:
    """Fill a |mu_axis| x |x0_axis| grid with independent run verdicts.

    Every x0 must lie inside the problem's domain.  Cells are pure and
    order-independent; the grid is evaluated row by row.
    """
    if not mu_axis or not x0_axis:
        raise ValueError("axes must be non-empty")
    a, b = p.domain
    for x0 in x0_axis:
        if not (a <= x0 <= b):
            raise ValueError(f"x0 = {x0!r} outside problem domain [{a!r}, {b!r}]")
    base = cfg if cfg is not None else SolverConfig()
    cells = []
    for mu in mu_axis:
        c = replace(base, scheme=scheme, mu=mu)
        cells.append(tuple(_cell_from_outcome(run(p, c, x0)) for x0 in x0_axis))
    return BasinGrid(
        problem=p.name,
        scheme=scheme,
        mu_axis=tuple(mu_axis),
        x0_axis=tuple(x0_axis),
        cells=tuple(cells),
    )


def default_x0_axis(p: ProblemSpec, count: int = 201) -> tuple[float, ...]:
    """``count`` evenly spaced initial values across the problem domain."""
    if count < 1:
        raise ValueError("count must be positive")
    a, b = p.domain
    if count == 1:
        return (a,)
    return tuple(a + (b - a) * i / (count - 1) for i in range(count))


# ---------------------------------------------------------------------------
# rendering: CSV rows and the dense basin grid file

def _real(v: float) -> str:
    return f"{v:.17g}"


def _final(v: float | None) -> str:
    return "" if v is None else f"{v:.6f}"


def rows_to_csv(rows: Iterable[BenchmarkRow]) -> str:
    """Render benchmark rows as CSV, one header row first.

    Reals carry 17 significant digits except final_x, which uses the
    6-decimal table rendering.
    """
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(",".join([
            r.problem,
            r.scheme,
            _real(r.mu),
            _real(r.h),
            _real(r.x0),
            r.verdict,
            r.reason,
            "" if r.iterations is None else str(r.iterations),
            _final(r.final_x),
            _real(r.residual),
        ]))
    return "\n".join(lines) + "\n"


def basin_to_csv(grid: BasinGrid, h: float = 1.0) -> str:
    """Render every basin cell as one CSV row (same columns as rows_to_csv)."""
    lines = [CSV_HEADER]
    for i, mu in enumerate(grid.mu_axis):
        for j, x0 in enumerate(grid.x0_axis):
            c = grid.cells[i][j]
            lines.append(",".join([
                grid.problem,
                grid.scheme,
                _real(mu),
                _real(h),
                _real(x0),
                c.verdict,
                c.reason,
                "" if c.iterations is None else str(c.iterations),
                _final(c.final_x),
                _real(c.residual),
            ]))
    return "\n".join(lines) + "\n"


def basin_to_grid_text(grid: BasinGrid) -> str:
    """Dense matrix rendering: the x0 axis, then one code line per mu.

    Converged cells print as C<iterations>, everything else as D.
    """
    lines = ["x0: " + " ".join(_real(x) for x in grid.x0_axis)]
    for i, mu in enumerate(grid.mu_axis):
        codes = []
        for c in grid.cells[i]:
            codes.append(f"C{c.iterations}" if c.verdict == VERDICT_CONVERGED else "D")
        lines.append(f"{_real(mu)}: " + " ".join(codes))
    return "\n".join(lines) + "\n"
