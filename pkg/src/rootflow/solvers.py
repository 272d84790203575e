"""Iteration kernels and the driver that applies them until a verdict.

Six schemes share one driver.  ``newton``, ``euler_flow`` and ``wu``
evaluate the derivative; ``zheng``, ``secant_dyn`` and ``secant`` replace
it with a difference quotient and never touch ``df``.  The driver turns
every failure mode (domain exit, blow-up, degenerate denominator,
exhausted budget) into a :class:`RunOutcome` instead of an exception.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .problems import (
    DomainViolation,
    NonFiniteValue,
    ProblemSpec,
    eval_f,
    eval_f_unchecked,
)

# Below this magnitude a denominator is treated as exactly degenerate.
DENOMINATOR_GUARD = 1e-300

SCHEMES = ("newton", "euler_flow", "wu", "zheng", "secant_dyn", "secant")
DERIVATIVE_SCHEMES = ("newton", "euler_flow", "wu")
TWO_POINT_SCHEMES = ("secant_dyn", "secant")
BOOTSTRAPS = ("zheng_first_step", "offset_x0")
STOP_RULES = ("step_size", "residual", "either")

VERDICT_CONVERGED = "converged"
VERDICT_DIVERGED = "diverged"
VERDICT_EXHAUSTED = "exhausted"

REASON_STEP = "step_below_epsilon"
REASON_RESIDUAL = "residual_below_epsilon"
REASON_DOMAIN = "domain_violation"
REASON_NONFINITE = "nonfinite"
REASON_UNDERFLOW = "denominator_underflow"
REASON_ESCAPE = "escape_bound_exceeded"
REASON_MAX_ITERS = "max_iters_reached"

CONVERGED_REASONS = (REASON_STEP, REASON_RESIDUAL)


class DerivativeZero(Exception):
    """|f'(x)| underflowed; the Newton correction is undefined."""


class DenominatorUnderflow(Exception):
    """The scheme's denominator underflowed below the guard threshold."""


class StagnantPair(Exception):
    """The two points of a secant-type pair coincide to machine precision."""


@dataclass(frozen=True)
class SolverConfig:
    """Scheme selection and the iteration protocol.

    ``mu`` is the flow parameter of the parameterized denominators; it is
    ignored by ``newton`` and ``secant``.  ``h`` is the Euler step length,
    used only by ``euler_flow``.  ``bootstrap`` picks how the two-point
    schemes obtain their second starting point, and ``stop_rule`` picks the
    smallness test that declares convergence.
    """

    scheme: str = "secant_dyn"
    mu: float = 0.0
    h: float = 1.0
    epsilon: float = 1e-5
    max_iters: int = 500
    bootstrap: str = "zheng_first_step"
    stop_rule: str = "step_size"
    escape_bound: float = 1e12

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}; expected one of {SCHEMES}")
        if self.bootstrap not in BOOTSTRAPS:
            raise ValueError(f"unknown bootstrap {self.bootstrap!r}; expected one of {BOOTSTRAPS}")
        if self.stop_rule not in STOP_RULES:
            raise ValueError(f"unknown stop_rule {self.stop_rule!r}; expected one of {STOP_RULES}")
        if not (self.h > 0.0):
            raise ValueError("h must be positive")
        if not (self.epsilon > 0.0):
            raise ValueError("epsilon must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if not (self.escape_bound > 0.0):
            raise ValueError("escape_bound must be positive")


class TracePoint(NamedTuple):
    n: int
    x: float
    fx: float


@dataclass(frozen=True)
class IterationTrace:
    """The accepted iterates (n, x_n, f(x_n)), plus errors when the root is known."""

    points: tuple[TracePoint, ...]
    errors: tuple[float, ...] | None = None
    known_root: float | None = None

    @classmethod
    def from_points(cls, points, known_root: float | None) -> "IterationTrace":
        pts = tuple(TracePoint(i, x, fx) for i, (x, fx) in enumerate(points))
        errors = None
        if known_root is not None:
            errors = tuple(pt.x - known_root for pt in pts)
        return cls(points=pts, errors=errors, known_root=known_root)


@dataclass(frozen=True)
class RunOutcome:
    """Verdict of one solver run.

    ``iterations`` counts applications of the scheme's recurrence; the
    production of the second starting point of a two-point scheme is
    recorded in the trace but not counted.
    """

    verdict: str
    reason: str
    iterations: int
    final_x: float
    trace: IterationTrace

    @property
    def converged(self) -> bool:
        return self.verdict == VERDICT_CONVERGED


# ---------------------------------------------------------------------------
# update rules on cached values (single source of the arithmetic, so the
# public kernels and the driver agree bit for bit)

def _newton_update(x: float, fx: float, dfx: float) -> float:
    if abs(dfx) < DENOMINATOR_GUARD:
        raise DerivativeZero(f"|f'({x!r})| < {DENOMINATOR_GUARD:g}")
    return x - fx / dfx


def _flow_update(x: float, fx: float, dfx: float, mu: float, h: float) -> float:
    den = mu * fx + dfx
    if abs(den) < DENOMINATOR_GUARD:
        raise DenominatorUnderflow(f"|mu*f + f'| < {DENOMINATOR_GUARD:g} at x = {x!r}")
    return x - h * fx / den


def _zheng_update(p: ProblemSpec, x: float, fx: float, mu: float) -> float:
    # The probe point x + f(x) may leave the iterate interval; it only needs
    # a finite value.  Group the difference first: the mu*f^2 term can be
    # many orders of magnitude below f(x) and would be absorbed otherwise.
    faux = eval_f_unchecked(p, x + fx)
    den = mu * fx * fx + (faux - fx)
    if abs(den) < DENOMINATOR_GUARD:
        raise DenominatorUnderflow(f"|mu*f^2 + f(x+f) - f| < {DENOMINATOR_GUARD:g} at x = {x!r}")
    return x - fx * fx / den


def _secant_update(x_prev: float, f_prev: float, x_curr: float, f_curr: float, mu: float) -> float:
    dx = x_curr - x_prev
    if abs(dx) < DENOMINATOR_GUARD:
        raise StagnantPair(f"points coincide at x = {x_curr!r}")
    den = mu * dx * f_curr + f_curr - f_prev
    if abs(den) < DENOMINATOR_GUARD:
        raise DenominatorUnderflow(f"secant denominator < {DENOMINATOR_GUARD:g} at x = {x_curr!r}")
    return x_curr - f_curr * dx / den


def _eval_df(p: ProblemSpec, x: float) -> float:
    if p.df is None:
        raise ValueError(f"problem {p.name!r} has no derivative evaluator")
    value = p.df(x)
    if not math.isfinite(value):
        raise NonFiniteValue(x)
    return value


# ---------------------------------------------------------------------------
# public one-step kernels

def newton_step(p: ProblemSpec, x: float) -> float:
    """Classical Newton step x - f(x)/f'(x)."""
    fx = eval_f(p, x)
    return _newton_update(x, fx, _eval_df(p, x))


def euler_flow_step(p: ProblemSpec, x: float, mu: float, h: float) -> float:
    """Euler step of the continuation flow: x - h f(x) / (mu f(x) + f'(x))."""
    fx = eval_f(p, x)
    return _flow_update(x, fx, _eval_df(p, x), mu, h)


def wu_step(p: ProblemSpec, x: float, mu: float) -> float:
    """Parameterized Newton-like step, the h = 1 case of euler_flow_step."""
    return euler_flow_step(p, x, mu, 1.0)


def zheng_step(p: ProblemSpec, x: float, mu: float) -> float:
    """Derivative-free step with difference quotient over the probe x + f(x).

    x - f(x)^2 / (mu f(x)^2 + f(x + f(x)) - f(x))
    """
    fx = eval_f(p, x)
    return _zheng_update(p, x, fx, mu)


def secant_dyn_step(p: ProblemSpec, x_prev: float, x_curr: float, mu: float) -> float:
    """Derivative-free two-point step with the secant difference quotient.

    x_curr - f(x_curr) (x_curr - x_prev)
          / (mu (x_curr - x_prev) f(x_curr) + f(x_curr) - f(x_prev))
    """
    f_prev = eval_f(p, x_prev)
    f_curr = eval_f(p, x_curr)
    return _secant_update(x_prev, f_prev, x_curr, f_curr, mu)


def secant_step(p: ProblemSpec, x_prev: float, x_curr: float) -> float:
    """Classical secant step, i.e. secant_dyn_step with mu = 0."""
    return secant_dyn_step(p, x_prev, x_curr, 0.0)


# ---------------------------------------------------------------------------
# driver

def run(p: ProblemSpec, cfg: SolverConfig, x0: float) -> RunOutcome:
    """Iterate the configured scheme from x0 until a verdict.

    Convergence is declared by the configured stop rule: ``step_size`` tests
    |x_{n+1} - x_n| <= epsilon, ``residual`` tests |f(x_{n+1})| <= epsilon,
    ``either`` accepts whichever fires first (step reported when both fire
    at once).  Any kernel error, domain exit, non-finite value or escape
    beyond ``escape_bound`` yields a diverged verdict; an exhausted budget
    yields ``exhausted``.  The trace records every accepted iterate,
    starting with x0.

    x0 must lie inside the problem's domain.  Two-point schemes first
    produce their second starting point via the bootstrap policy; that
    production is traced but not counted in ``iterations``.
    """
    a, b = p.domain
    if not (a <= x0 <= b):
        raise DomainViolation(x0, p.domain)
    if cfg.scheme in DERIVATIVE_SCHEMES and p.df is None:
        raise ValueError(f"scheme {cfg.scheme!r} needs a derivative, problem {p.name!r} has none")

    mu = 0.0 if cfg.scheme in ("newton", "secant") else cfg.mu
    two_point = cfg.scheme in TWO_POINT_SCHEMES

    points: list[tuple[float, float]] = []
    iterations = 0

    def outcome(verdict, reason, final_x):
        trace = IterationTrace.from_points(points, p.known_root)
        return RunOutcome(verdict=verdict, reason=reason, iterations=iterations,
                          final_x=final_x, trace=trace)

    x_prev = f_prev = None
    x = x0
    try:
        fx = eval_f(p, x0)
    except NonFiniteValue:
        points.append((x0, math.nan))
        return outcome(VERDICT_DIVERGED, REASON_NONFINITE, x0)
    points.append((x, fx))

    applications = 0
    try:
        while applications < cfg.max_iters:
            bootstrapping = two_point and x_prev is None
            if cfg.scheme == "newton":
                candidate = _newton_update(x, fx, _eval_df(p, x))
            elif cfg.scheme == "euler_flow":
                candidate = _flow_update(x, fx, _eval_df(p, x), mu, cfg.h)
            elif cfg.scheme == "wu":
                candidate = _flow_update(x, fx, _eval_df(p, x), mu, 1.0)
            elif cfg.scheme == "zheng":
                candidate = _zheng_update(p, x, fx, mu)
            elif bootstrapping:
                if cfg.bootstrap == "zheng_first_step":
                    candidate = _zheng_update(p, x, fx, mu)
                else:  # offset_x0
                    candidate = x - math.copysign(1.0, fx) * cfg.epsilon * max(1.0, abs(x))
            else:
                candidate = _secant_update(x_prev, f_prev, x, fx, mu)
            applications += 1
            if not bootstrapping:
                iterations += 1

            if not math.isfinite(candidate):
                return outcome(VERDICT_DIVERGED, REASON_NONFINITE, x)
            if not (a <= candidate <= b):
                return outcome(VERDICT_DIVERGED, REASON_DOMAIN, x)
            if abs(candidate) > cfg.escape_bound:
                return outcome(VERDICT_DIVERGED, REASON_ESCAPE, x)
            f_cand = eval_f(p, candidate)
            points.append((candidate, f_cand))

            step_small = abs(candidate - x) <= cfg.epsilon
            residual_small = abs(f_cand) <= cfg.epsilon
            x_prev, f_prev = x, fx
            x, fx = candidate, f_cand

            if cfg.stop_rule == "step_size":
                if step_small:
                    return outcome(VERDICT_CONVERGED, REASON_STEP, x)
            elif cfg.stop_rule == "residual":
                if residual_small:
                    return outcome(VERDICT_CONVERGED, REASON_RESIDUAL, x)
            else:
                if step_small:
                    return outcome(VERDICT_CONVERGED, REASON_STEP, x)
                if residual_small:
                    return outcome(VERDICT_CONVERGED, REASON_RESIDUAL, x)
        return outcome(VERDICT_EXHAUSTED, REASON_MAX_ITERS, x)
    except DomainViolation:
        return outcome(VERDICT_DIVERGED, REASON_DOMAIN, x)
    except NonFiniteValue:
        return outcome(VERDICT_DIVERGED, REASON_NONFINITE, x)
    except (DerivativeZero, DenominatorUnderflow):
        return outcome(VERDICT_DIVERGED, REASON_UNDERFLOW, x)
    except StagnantPair:
        # The pair gap is below any sensible epsilon, so under a step-based
        # rule this is convergence; under a pure residual rule it is only
        # convergence if the residual test passes.
        if cfg.stop_rule in ("step_size", "either"):
            return outcome(VERDICT_CONVERGED, REASON_STEP, x)
        if abs(fx) <= cfg.epsilon:
            return outcome(VERDICT_CONVERGED, REASON_RESIDUAL, x)
        return outcome(VERDICT_DIVERGED, REASON_UNDERFLOW, x)
