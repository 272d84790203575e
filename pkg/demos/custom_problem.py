"""Solve a user-defined equation with the library API.

Anything with a scalar evaluator can be a ProblemSpec; the derivative is
optional and only needed by the derivative-based schemes.  Here: Kepler's
equation E - e sin E = M for the eccentric anomaly E.
"""

import math

from rootflow import ProblemSpec, SolverConfig, run

ECC = 0.8   # orbit eccentricity
M = 1.2     # mean anomaly

def main():
    kepler = ProblemSpec(
        name="kepler",
        f=lambda E: E - ECC * math.sin(E) - M,
        df=lambda E: 1.0 - ECC * math.cos(E),
        domain=(0.0, 2.0 * math.pi),
        default_x0=M,
    )

    print(f"Kepler's equation, e = {ECC}, M = {M}")
    print()
    # mu ~ -f''(E*)/f'(E*) ~ -0.576 cancels the leading error term here
    for scheme, mu in (("newton", 0.0), ("secant_dyn", 0.0), ("secant_dyn", -0.58),
                       ("zheng", -0.58)):
        cfg = SolverConfig(scheme=scheme, mu=mu, epsilon=1e-12)
        out = run(kepler, cfg, kepler.default_x0)
        print(f"{scheme:<11} mu={mu:<6g} {out.verdict:<10} n={out.iterations:<3} "
              f"E = {out.final_x:.12f}  residual = {kepler.f(out.final_x):.2e}")
    print()
    print("the two-point scheme needs no derivative at all; drop df from the")
    print("problem and newton raises, while secant_dyn keeps working:")
    nodf = ProblemSpec(name="kepler_nodf", f=kepler.f, domain=kepler.domain,
                       default_x0=kepler.default_x0)
    out = run(nodf, SolverConfig(scheme="secant_dyn", mu=0.0, epsilon=1e-12), M)
    print(f"secant_dyn without df: {out.verdict}, E = {out.final_x:.12f}")

if __name__ == "__main__":
    main()
