"""Test equations for the scalar solvers.

A :class:`ProblemSpec` bundles everything the iteration driver and the
analysis tooling need to know about one equation f(x) = 0: the evaluator,
an optional exact derivative, the closed interval on which iterates are
allowed to travel, and (for benchmark problems) the known root used for
error tracking.

Domain policy: iterates of a solver must stay inside ``domain``; leaving it
is treated as divergence by the driver.  Auxiliary probe points used by
difference quotients (for example ``x + f(x)``) only need a finite function
value, which :func:`eval_f_unchecked` provides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

ROOT_RESIDUAL_TOL = 1e-12


class DomainViolation(Exception):
    """An evaluation point left the problem's legal interval."""

    def __init__(self, x: float, domain: tuple[float, float] | None = None):
        self.x = x
        self.domain = domain
        msg = f"x = {x!r} is outside the legal domain"
        if domain is not None:
            msg += f" [{domain[0]!r}, {domain[1]!r}]"
        super().__init__(msg)


class NonFiniteValue(Exception):
    """Evaluation produced an overflow, NaN, or mathematically undefined value."""

    def __init__(self, x: float):
        self.x = x
        super().__init__(f"f({x!r}) is not a finite real")


@dataclass(frozen=True)
class ProblemSpec:
    """One scalar equation f(x) = 0.

    Fields:
        name: identifier used by the registry and the CLI.
        f: the equation's left-hand side.
        domain: closed interval [a, b] inside which iterates are legal.
        default_x0: starting value used when the caller does not pick one.
        df: exact derivative, needed only by the derivative-based schemes
            and by the error-constant oracle.
        known_root: a solution x* with f(x*) = 0, used for error tracking.

    Instances are immutable and safe to share between concurrent runs;
    evaluators must be pure.
    """

    name: str
    f: Callable[[float], float]
    domain: tuple[float, float]
    default_x0: float
    df: Callable[[float], float] | None = None
    known_root: float | None = None

    def __post_init__(self):
        a, b = self.domain
        if not (a < b):
            raise ValueError(f"domain must satisfy a < b, got [{a!r}, {b!r}]")
        if not (a <= self.default_x0 <= b):
            raise ValueError(f"default_x0 = {self.default_x0!r} outside [{a!r}, {b!r}]")
        if self.known_root is not None:
            if not (a <= self.known_root <= b):
                raise ValueError(f"known_root = {self.known_root!r} outside [{a!r}, {b!r}]")
            try:
                residual = self.f(self.known_root)
            except Exception as exc:
                raise ValueError(f"f(known_root) is not evaluable: {exc}") from exc
            if not (abs(residual) <= ROOT_RESIDUAL_TOL):
                raise ValueError(
                    f"|f(known_root)| = {abs(residual):.3e} exceeds {ROOT_RESIDUAL_TOL:.0e}"
                )


def eval_f(p: ProblemSpec, x: float) -> float:
    """Evaluate f(x), enforcing the problem's legal interval.

    Raises DomainViolation if x lies outside ``p.domain`` and NonFiniteValue
    if evaluation overflows or is undefined.  Never returns a non-finite
    real.
    """
    a, b = p.domain
    if not (a <= x <= b):
        raise DomainViolation(x, p.domain)
    return eval_f_unchecked(p, x)


def eval_f_unchecked(p: ProblemSpec, x: float) -> float:
    """Evaluate f(x) wherever it is mathematically defined.

    No interval containment check: any finite value is legal.  Used for
    auxiliary difference-quotient probes that may step slightly outside the
    iterate interval.
    """
    try:
        value = p.f(x)
    except (ValueError, OverflowError, ZeroDivisionError) as exc:
        raise NonFiniteValue(x) from exc
    if not math.isfinite(value):
        raise NonFiniteValue(x)
    return value


def builtin_problems() -> dict[str, ProblemSpec]:
    """Registry of the three benchmark equations, keyed by stable name.

    log:  f(x) = ln x            on [0.5, 5],       root 1,    x0 = 5
    exp:  f(x) = (x - 1) e^{-x}  on [-1, 50],       root 1,    x0 = 50
    trig: f(x) = 2 sin x - 1     on [0, 11*pi/24],  root pi/6, x0 = 11*pi/24

    Each problem carries a closed-form derivative for the derivative-based
    schemes and the analysis oracles.
    """
    log = ProblemSpec(
        name="log",
        f=math.log,
        df=lambda x: 1.0 / x,
        domain=(0.5, 5.0),
        known_root=1.0,
        default_x0=5.0,
    )
    exp = ProblemSpec(
        name="exp",
        f=lambda x: (x - 1.0) * math.exp(-x),
        df=lambda x: (2.0 - x) * math.exp(-x),
        domain=(-1.0, 50.0),
        known_root=1.0,
        default_x0=50.0,
    )
    trig = ProblemSpec(
        name="trig",
        f=lambda x: 2.0 * math.sin(x) - 1.0,
        df=lambda x: 2.0 * math.cos(x),
        domain=(0.0, 11.0 * math.pi / 24.0),
        known_root=math.pi / 6.0,
        default_x0=11.0 * math.pi / 24.0,
    )
    return {p.name: p for p in (log, exp, trig)}
