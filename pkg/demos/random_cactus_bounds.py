"""
Bounds on random cacti
======================

Solve a batch of seeded cacti, then compare each answer with the lower bound
L + B, the upper bound L + B + c; the audit also covers Z + c on these small graphs.
"""

import numpy as np

from cactusdim import audit_bounds, compute_dimensions, random_cactus

rows = []
for seed in range(40):
    g = random_cactus(12, 1 + seed % 3, max_girth=7, seed=seed)
    r = compute_dimensions(g)
    audit = audit_bounds(g, r)
    rows.append((r.L + r.B, r.dim, r.edim, r.L + r.B + r.cyclomatic, audit.passed))

t = np.array(rows)
print("all audits pass:", bool(t[:, 4].all()))
print("mean slack above L+B:   dim %.2f  edim %.2f" % ((t[:, 1] - t[:, 0]).mean(), (t[:, 2] - t[:, 0]).mean()))
print("mean slack below L+B+c: dim %.2f  edim %.2f" % ((t[:, 3] - t[:, 1]).mean(), (t[:, 3] - t[:, 2]).mean()))
print("edim > dim on", int((t[:, 2] > t[:, 1]).sum()), "of", len(t), "instances")

# how often does the upper bound hold with equality?
tight = (t[:, 1] == t[:, 3]).sum()
print("dim = L+B+c on", int(tight), "instances")
