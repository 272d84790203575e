"""Run the three reference equations under three solvers and compare.

The reference set:

  log   f(x) = ln x            on [0.5, 5]       from x0 = 5
  exp   f(x) = (x - 1) e^{-x}  on [-1, 50]       from x0 = 50
  trig  f(x) = 2 sin x - 1     on [0, 11*pi/24]  from x0 = 11*pi/24

All three starting points are deliberately hostile: Newton's first step
leaves the legal interval every time (on log it even lands where ln is
undefined).  The one-point difference-quotient scheme survives only the
log problem.  The two-point scheme converges on all three, which is the
point of its wider-basin claim.
"""

from rootflow import SolverConfig, builtin_problems, run, run_benchmark

def main():
    print("reference benchmark: 3 problems x 3 schemes, eps = 1e-5, budget 500")
    print()
    print(f"{'problem':<8} {'scheme':<11} {'mu':<10} {'n':>4}  {'x_n':<10} verdict")
    for row in run_benchmark():
        n = "-" if row.iterations is None else str(row.iterations)
        x = "-" if row.final_x is None else f"{row.final_x:.6f}"
        print(f"{row.problem:<8} {row.scheme:<11} {row.mu:<10.6g} {n:>4}  {x:<10} "
              f"{row.verdict} ({row.reason})")

    # look inside one run: the full iterate sequence for the trig problem
    print()
    print("trig problem, two-point scheme, mu = 2.65, full trace:")
    trig = builtin_problems()["trig"]
    out = run(trig, SolverConfig(scheme="secant_dyn", mu=2.65), trig.default_x0)
    for pt in out.trace.points:
        print(f"  x_{pt.n} = {pt.x:.15f}   f = {pt.fx: .3e}")
    print(f"  -> {out.verdict} after {out.iterations} recurrence steps")

if __name__ == "__main__":
    main()
