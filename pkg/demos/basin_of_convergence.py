"""Map which starting values actually converge, per scheme.

A 201-point grid of initial values across the log problem's interval,
one independent run per cell.  Newton only survives from the left part
of the interval (its first step overshoots below the interval otherwise);
the two-point scheme keeps working far beyond that, which quantifies its
wider-basin advantage.
"""

from rootflow import builtin_problems, default_x0_axis, map_basin

BAR_WIDTH = 67

def strip(grid):
    # compress 201 cells into a character strip: # converged, . diverged
    cells = grid.cells[0]
    chunk = len(cells) / BAR_WIDTH
    chars = []
    for i in range(BAR_WIDTH):
        block = cells[int(i * chunk):int((i + 1) * chunk) or 1]
        good = sum(1 for c in block if c.verdict == "converged")
        chars.append("#" if good > len(block) / 2 else ".")
    return "".join(chars)

def main():
    log = builtin_problems()["log"]
    axis = default_x0_axis(log, 201)
    print(f"log problem: f(x) = ln x on [{axis[0]:g}, {axis[-1]:g}], 201 starts")
    print()
    for scheme, mu in (("newton", 0.0), ("secant_dyn", 0.135), ("secant", 0.0),
                       ("zheng", 1.0)):
        grid = map_basin(log, scheme, [mu], axis)
        frac = grid.converged_fraction(0)
        print(f"{scheme:<11} mu={mu:<6g} converged {frac:7.2%}   {strip(grid)}")
    print()
    print(f"{'':24}x0 = {axis[0]:<10g}{'':28}x0 = {axis[-1]:g}")
    print()
    print("iteration counts across the interval (two-point scheme, mu = 0.135):")
    grid = map_basin(log, "secant_dyn", [0.135], axis)
    for j in range(0, 201, 25):
        cell = grid.cells[0][j]
        n = cell.iterations if cell.verdict == "converged" else "-"
        print(f"  x0 = {axis[j]:.4f}: {cell.verdict:<11} n = {n}")

if __name__ == "__main__":
    main()
