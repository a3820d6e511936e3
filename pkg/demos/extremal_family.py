"""
Cacti that reach the L + 2c upper bound
=======================================

Each 6-cycle hangs from a common hub with a pendant leaf at its attachment
vertex. Every cycle ends up with exactly one branch-active vertex and none of
them can avoid the bad configurations, so each costs two extra landmarks.
"""

from cactusdim import compute_dimensions, extremal_family

print(f"{'b':>2} {'c':>2} {'n':>3} {'L':>2} {'B':>2} {'dim':>4} {'edim':>4} {'L+2c':>5}")
for b in range(3):
    for c in (2, 3, 4):
        g = extremal_family(b, c)
        r = compute_dimensions(g)
        print(f"{b:>2} {c:>2} {g.n:>3} {r.L:>2} {r.B:>2} {r.dim:>4} {r.edim:>4} {r.L + 2 * c:>5}")

# per-cycle view for the smallest member
r = compute_dimensions(extremal_family(0, 2))
for cyc in r.per_cycle:
    print(f"cycle {cyc.index}: b={cyc.b} vertex={cyc.classes['vertex']} edge={cyc.classes['edge']}")
