"""Measure convergence orders from iteration traces.

The estimator computes rho_n = ln|e_{n+1}/e_n| / ln|e_n/e_{n-1}| over the
trace of a run with a known root, trimming steps drowned in rounding
noise.  Three stories below:

1. Newton on x^2 - 1 measures order 2, textbook.
2. The two-point parameterized scheme with mu = 0 is bit-identical to the
   classical secant method, and it measures the golden ratio 1.618...,
   not 2.  The local error recurrence is
       e_{n+1} ~ mu e_n^2 + (f''/2f') e_n e_{n-1}
   and the mixed term dominates whenever f''(x*) != 0, capping the order
   at phi for any fixed mu.
3. On f(x) = x + x^4 both f'' and f''' vanish at the root, the mixed term
   disappears, and the scheme really is quadratic with error constant
   exactly mu: the measured constant lands on the predicted value.
"""

from rootflow import (
    ProblemSpec,
    SolverConfig,
    estimate_order,
    run,
    verify_quadratic_convergence,
)

WIDE = (-1e9, 1e9)

def show(title, est, predicted=None):
    print(title)
    print("  per-step orders :", " ".join(f"{r:.4f}" for r in est.orders))
    print("  final order     :", f"{est.final_order:.4f}")
    print("  constant ratios :", " ".join(f"{c:.4g}" for c in est.constant_estimates))
    if predicted is not None:
        print("  predicted const :", f"{predicted:.4g}")
    print()

def main():
    sq = ProblemSpec(name="sq", f=lambda x: x * x - 1.0, df=lambda x: 2.0 * x,
                     domain=WIDE, known_root=1.0, default_x0=1.5)

    out = run(sq, SolverConfig(scheme="newton", epsilon=1e-14, max_iters=60), 2.0)
    show("newton on x^2 - 1 from 2:", estimate_order(out.trace))

    out = run(sq, SolverConfig(scheme="secant_dyn", mu=0.0, epsilon=1e-14, max_iters=60), 1.5)
    show("two-point scheme, mu = 0 (= secant) on x^2 - 1 from 1.5:",
         estimate_order(out.trace))
    print("  note: constant ratios e_{n+1}/e_n^2 blow up because the order")
    print("  is phi ~ 1.618, not 2; a quadratic constant does not exist here.")
    print()

    quart = ProblemSpec(name="quart", f=lambda x: x + x ** 4,
                        df=lambda x: 1.0 + 4.0 * x ** 3,
                        domain=WIDE, known_root=0.0, default_x0=0.3)
    cfg = SolverConfig(scheme="secant_dyn", epsilon=1e-15, max_iters=100)
    report = verify_quadratic_convergence(quart, 1.5, 0.3, cfg)
    show("two-point scheme, mu = 1.5 on x + x^4 from 0.3 (f''(root) = 0):",
         report.estimate, report.predicted)
    print(f"  relative error of the constant: {report.constant_rel_error:.2e}")

if __name__ == "__main__":
    main()
