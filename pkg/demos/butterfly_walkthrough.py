"""
Two triangles sharing a vertex
==============================

The smallest cactus where vertex and edge metric dimension differ.
"""

from cactusdim import Graph, compute_dimensions, decompose_cactus, metric_dimension_bruteforce
from cactusdim.resolving import critical_incidences, is_generator_structural

# vertex 0 is shared; 1-2 hang off the first triangle, 3-4 off the second
g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])

r = compute_dimensions(g)
print(f"dim={r.dim} edim={r.edim}  (L={r.L}, B={r.B})")

# one landmark per triangle resolves every vertex...
S = {1, 3}
print("S =", sorted(S))
print("  vertex mode:", bool(is_generator_structural(g, S, "vertex")))

# ...but not every edge: the shared vertex is edge-critical on both triangles
verdict = is_generator_structural(g, S, "edge")
print("  edge mode:  ", bool(verdict), "-", verdict.reason)
print("  critical incidences (edge):", critical_incidences(decompose_cactus(g), S, "edge"))

# the minimum vertex cover of that single incidence costs one more landmark
print("tau_ei =", r.tau_ei, " edge certificate:", r.cert_edge)

# brute force agrees
for mode in ("vertex", "edge"):
    k, witness = metric_dimension_bruteforce(g, mode)
    print(f"brute force {mode}: {k} via {witness}")
